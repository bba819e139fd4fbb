#include "penrose/generator.hpp"

#include <algorithm>
#include <optional>

#include <json.hpp>

#include "scan_detail.hpp"

namespace penrose {

namespace {

using detail::I64;
using detail::ICoords;

// ||pi' x||^2 bound for window members: (||v|| + tau*rho)^2 <= 2||v||^2 + 2 tau^2 rho^2
// with rho^2 = 2/5 the circumradius of Omega and tau the largest window scale.
Golden internalWindowBound2(const InternalPoint& v) {
    return Golden(2) * v.normSquared() + Golden(Rational(4, 5), Rational(4, 5));
}

struct ScanOutcome {
    std::vector<LatticePoint> accepted;
    std::vector<LatticePoint> boundary;
    std::size_t checked = 0;
};

void sortUnique(std::vector<LatticePoint>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

ScanOutcome mergeOutcomes(std::vector<ScanOutcome>& parts) {
    ScanOutcome all;
    for (ScanOutcome& part : parts) {
        all.checked += part.checked;
        all.accepted.insert(all.accepted.end(), part.accepted.begin(), part.accepted.end());
        all.boundary.insert(all.boundary.end(), part.boundary.begin(), part.boundary.end());
    }
    sortUnique(all.accepted);
    sortUnique(all.boundary);
    return all;
}

std::array<std::optional<WindowPentagon>, 5> cosetWindows(const InternalPoint& v) {
    std::array<std::optional<WindowPentagon>, 5> w;
    for (int n = 1; n <= 4; ++n) w[n] = cosetWindow(n, v);
    return w;
}

// Shared scan skeleton: runs perCandidate on the radius- and window-filtered
// ball candidates with coordinate sums in [nLo, nHi], in parallel stripes.
template <class PerCandidate>
ScanOutcome scanCandidates(const InternalPoint& v, const Golden& radiusSquared, int nLo, int nHi,
                           unsigned threads, PerCandidate&& perCandidate) {
    if (threads == 0) threads = 1;
    const Golden internalBound2 = internalWindowBound2(v);
    const I64 ball = detail::ballBound(radiusSquared, internalBound2, Golden(5));
    if (ball < 0) return {};
    const detail::QuadFormFilter physOk(detail::QuadFormFilter::Form::Physical, radiusSquared,
                                        ball);
    const detail::QuadFormFilter internalOk(detail::QuadFormFilter::Form::Internal,
                                            internalBound2, ball);
    const I64 r = detail::isqrtI64(ball);

    std::vector<ScanOutcome> parts(threads);
    detail::runWorkers(threads, [&](unsigned t) {
        ScanOutcome& local = parts[t];
        detail::scanSumSlices(ball, -r + static_cast<I64>(t), static_cast<I64>(threads), nLo, nHi,
                              [&](const ICoords& c, int n) {
                                  if (!physOk(c) || !internalOk(c)) return;
                                  perCandidate(local, LatticePoint(c), n);
                              });
    });
    return mergeOutcomes(parts);
}

ScanOutcome scanModelSet(const InternalPoint& v, const Golden& radiusSquared, unsigned threads) {
    const auto windows = cosetWindows(v);
    return scanCandidates(v, radiusSquared, 1, 4, threads,
                          [&](ScanOutcome& out, const LatticePoint& x, int n) {
                              ++out.checked;
                              switch (classify(internalProjection(x), *windows[n])) {
                                  case Region::Inside: out.accepted.push_back(x); break;
                                  case Region::Boundary: out.boundary.push_back(x); break;
                                  case Region::Outside: break;
                              }
                          });
}

ScanOutcome scanStrip(const InternalPoint& v, const Golden& radiusSquared, unsigned threads) {
    const auto windows = cosetWindows(v);
    return scanCandidates(
        v, radiusSquared, 0, 5, threads, [&](ScanOutcome& out, const LatticePoint& x, int n) {
            ++out.checked;
            if (!stripFeasible(x, v)) return;
            if (n == 0 || n == 5) {
                // Feasible only when pi'x = v exactly: a degenerate slice hit.
                out.boundary.push_back(x);
                return;
            }
            switch (classify(internalProjection(x), *windows[n])) {
                case Region::Inside: out.accepted.push_back(x); break;
                case Region::Boundary: out.boundary.push_back(x); break;
                case Region::Outside:
                    throw std::logic_error(
                        "strip oracle accepted a point outside its coset window");
            }
        });
}

Patch makePatch(const InternalPoint& v, const Golden& radiusSquared, ScanOutcome&& outcome) {
    if (!outcome.boundary.empty()) throw BoundaryHitError(v, outcome.boundary.front());
    Patch p;
    p.offset = v;
    p.radiusSquared = radiusSquared;
    p.points = std::move(outcome.accepted);
    return p;
}

}  // namespace

BoundaryHitError::BoundaryHitError(InternalPoint offset, LatticePoint hit)
    : std::runtime_error("window boundary hit: offset is not generic for this patch"),
      offset_(std::move(offset)),
      hit_(hit) {}

InternalPoint defaultOffset() {
    return Golden(Rational(1, 4)) * omegaVertex(1);
}

Patch generatePatch(const InternalPoint& v, const Golden& radiusSquared,
                    const GenerateOptions& opts) {
    return makePatch(v, radiusSquared, scanModelSet(v, radiusSquared, opts.threads));
}

Patch generatePatchStrip(const InternalPoint& v, const Golden& radiusSquared,
                         const GenerateOptions& opts) {
    return makePatch(v, radiusSquared, scanStrip(v, radiusSquared, opts.threads));
}

AuditReport auditBoundary(const InternalPoint& v, const Golden& radiusSquared,
                          const GenerateOptions& opts) {
    ScanOutcome outcome = scanModelSet(v, radiusSquared, opts.threads);
    return {outcome.checked, std::move(outcome.boundary)};
}

bool containsPoint(const Patch& p, const LatticePoint& x) {
    return std::binary_search(p.points.begin(), p.points.end(), x);
}

void deriveEdges(Patch& p) {
    p.edges.clear();
    for (std::size_t i = 0; i < p.points.size(); ++i)
        for (int j = 1; j <= 5; ++j)
            if (containsPoint(p, p.points[i] + LatticePoint::unit(j)))
                p.edges.push_back({i, j});
}

void deriveFaces(Patch& p) {
    p.faces.clear();
    for (std::size_t i = 0; i < p.points.size(); ++i) {
        for (int j = 1; j <= 5; ++j) {
            LatticePoint ej = LatticePoint::unit(j);
            if (!containsPoint(p, p.points[i] + ej)) continue;
            for (int k = j + 1; k <= 5; ++k) {
                LatticePoint ek = LatticePoint::unit(k);
                if (!containsPoint(p, p.points[i] + ek)) continue;
                if (!containsPoint(p, p.points[i] + ej + ek)) continue;
                int gap = k - j;
                FaceKind kind = (gap == 1 || gap == 4) ? FaceKind::Thick : FaceKind::Thin;
                p.faces.push_back({i, j, k, kind});
            }
        }
    }
}

LatticePoint canonicalPatternRep(const LatticePoint& x) {
    std::int64_t rem = x.n() % 5;
    if (rem < 0) rem += 5;
    if (rem == 0)
        throw std::domain_error("canonicalPatternRep: coordinate sum is 0 mod 5");
    std::int64_t shift = (rem - x.n()) / 5;
    return x + shift * LatticePoint::ones();
}

std::string exportJson(const Patch& p) {
    nlohmann::ordered_json doc;
    auto& offset = doc["offset"] = nlohmann::ordered_json::array();
    for (const Golden& g : p.offset.coords()) offset.push_back(g.str());
    doc["radius_squared"] = p.radiusSquared.str();
    auto& points = doc["points"] = nlohmann::ordered_json::array();
    for (const LatticePoint& x : p.points) points.push_back(x.coords());
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : p.edges) edges.push_back({e.point, e.direction});
    auto& faces = doc["faces"] = nlohmann::ordered_json::array();
    for (const Face& f : p.faces)
        faces.push_back(nlohmann::ordered_json::array(
            {f.point, f.dirA, f.dirB, f.kind == FaceKind::Thick ? "thick" : "thin"}));
    return doc.dump(2) + "\n";
}

Patch parsePatchJson(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    Patch p;
    GVec5 offset;
    const auto& off = doc.at("offset");
    if (off.size() != 5) throw std::invalid_argument("patch JSON: offset must have 5 entries");
    for (int i = 0; i < 5; ++i) offset[i] = Golden::parse(off[i].get<std::string>());
    p.offset = InternalPoint::fromVector(offset);
    p.radiusSquared = Golden::parse(doc.at("radius_squared").get<std::string>());
    for (const auto& pt : doc.at("points")) {
        if (pt.size() != 5) throw std::invalid_argument("patch JSON: point must have 5 entries");
        p.points.push_back(LatticePoint(pt[0].get<std::int64_t>(), pt[1].get<std::int64_t>(),
                                        pt[2].get<std::int64_t>(), pt[3].get<std::int64_t>(),
                                        pt[4].get<std::int64_t>()));
    }
    for (const auto& e : doc.at("edges"))
        p.edges.push_back({e[0].get<std::size_t>(), e[1].get<int>()});
    for (const auto& f : doc.at("faces")) {
        std::string kind = f[3].get<std::string>();
        p.faces.push_back({f[0].get<std::size_t>(), f[1].get<int>(), f[2].get<int>(),
                           kind == "thick" ? FaceKind::Thick : FaceKind::Thin});
    }
    return p;
}

}  // namespace penrose
