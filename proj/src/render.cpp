#include "penrose/render.hpp"

#include <cmath>
#include <cstdio>

namespace penrose {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string px(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

RenderBasis::RenderBasis() {
    c = std::cos(kPi / 5.0);
    s = std::sin(kPi / 5.0);
    cPrime = std::cos(2.0 * kPi / 5.0);
    sPrime = std::sin(2.0 * kPi / 5.0);
    rho = std::sqrt(2.0 / 5.0);
    kappa = std::sqrt(5.0 / 2.0);
    for (int j = 0; j < 5; ++j) {
        double phys = 2.0 * kPi * j / 5.0;
        e[j] = {std::cos(phys), std::sin(phys)};
        double internal = 2.0 * phys;
        internalE[j] = {std::cos(internal), std::sin(internal)};
    }
}

const RenderBasis& renderBasis() {
    static const RenderBasis basis;
    return basis;
}

Vec2d renderPhysical(const LatticePoint& x) {
    const RenderBasis& basis = renderBasis();
    Vec2d r;
    for (int j = 0; j < 5; ++j) {
        r.x += static_cast<double>(x[j]) * basis.e[j].x;
        r.y += static_cast<double>(x[j]) * basis.e[j].y;
    }
    return r;
}

Vec2d renderInternal(const LatticePoint& x) {
    const RenderBasis& basis = renderBasis();
    Vec2d r;
    for (int j = 0; j < 5; ++j) {
        r.x += static_cast<double>(x[j]) * basis.internalE[j].x;
        r.y += static_cast<double>(x[j]) * basis.internalE[j].y;
    }
    return r;
}

std::string exportCsv(const Patch& p) {
    std::string out;
    for (const LatticePoint& x : p.points) {
        char buf[160];
        Vec2d r = renderPhysical(x);
        std::snprintf(buf, sizeof(buf), "%lld,%lld,%lld,%lld,%lld,%lld,%.12g,%.12g\n",
                      static_cast<long long>(x[0]), static_cast<long long>(x[1]),
                      static_cast<long long>(x[2]), static_cast<long long>(x[3]),
                      static_cast<long long>(x[4]), static_cast<long long>(x.n()), r.x, r.y);
        out += buf;
    }
    return out;
}

std::string emitSvg(const Patch& p, const std::optional<SvgOverlay>& overlay) {
    constexpr double kScale = 40.0;  // pixels per unit edge
    constexpr double kMargin = 20.0;

    double minX = 0.0, maxX = 0.0, minY = 0.0, maxY = 0.0;
    bool first = true;
    for (const LatticePoint& x : p.points) {
        Vec2d r = renderPhysical(x);
        if (first) {
            minX = maxX = r.x;
            minY = maxY = r.y;
            first = false;
        } else {
            minX = std::min(minX, r.x);
            maxX = std::max(maxX, r.x);
            minY = std::min(minY, r.y);
            maxY = std::max(maxY, r.y);
        }
    }
    double width = (maxX - minX) * kScale + 2.0 * kMargin;
    double height = (maxY - minY) * kScale + 2.0 * kMargin;
    auto mapX = [&](double x) { return kMargin + (x - minX) * kScale; };
    auto mapY = [&](double y) { return kMargin + (maxY - y) * kScale; };
    auto point = [&](const Vec2d& r) { return px(mapX(r.x)) + "," + px(mapY(r.y)); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) + "\" height=\"" +
           px(height) + "\" viewBox=\"0 0 " + px(width) + " " + px(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    svg += "<g stroke=\"#3b3b3b\" stroke-width=\"0.8\" stroke-linejoin=\"round\">\n";
    for (const Face& f : p.faces) {
        const LatticePoint& base = p.points[f.point];
        LatticePoint ea = LatticePoint::unit(f.dirA);
        LatticePoint eb = LatticePoint::unit(f.dirB);
        std::string pts = point(renderPhysical(base)) + " " + point(renderPhysical(base + ea)) +
                          " " + point(renderPhysical(base + ea + eb)) + " " +
                          point(renderPhysical(base + eb));
        const char* fill = f.kind == FaceKind::Thick ? "#b6c8e6" : "#f2d59a";
        svg += "<polygon points=\"" + pts + "\" fill=\"" + fill + "\"/>\n";
    }
    svg += "</g>\n";

    svg += "<g fill=\"#202020\">\n";
    for (const LatticePoint& x : p.points)
        svg += "<circle cx=\"" + px(mapX(renderPhysical(x).x)) + "\" cy=\"" +
               px(mapY(renderPhysical(x).y)) + "\" r=\"1.6\"/>\n";
    svg += "</g>\n";

    if (overlay) {
        double lambda = overlay->factor.lambda().toDouble();
        Vec2d c = renderPhysical(overlay->center);
        auto inflate = [&](const Vec2d& r) {
            return Vec2d{c.x + lambda * (r.x - c.x), c.y + lambda * (r.y - c.y)};
        };
        svg += "<g stroke=\"#c0392b\" stroke-width=\"1.6\" fill=\"none\">\n";
        for (const Edge& e : p.edges) {
            Vec2d a = inflate(renderPhysical(p.points[e.point]));
            Vec2d b =
                inflate(renderPhysical(p.points[e.point] + LatticePoint::unit(e.direction)));
            svg += "<line x1=\"" + px(mapX(a.x)) + "\" y1=\"" + px(mapY(a.y)) + "\" x2=\"" +
                   px(mapX(b.x)) + "\" y2=\"" + px(mapY(b.y)) + "\"/>\n";
        }
        svg += "</g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace penrose
