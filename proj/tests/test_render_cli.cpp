#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "penrose/cli.hpp"
#include "penrose/render.hpp"

using namespace penrose;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("penrose");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cli::runCommand(static_cast<int>(argv.size()), argv.data());
}

std::filesystem::path tmpFile(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("penrose_test_" + name);
}

std::size_t countOccurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_SUITE("render_cli") {

TEST_CASE("render basis invariants") {
    const RenderBasis& basis = renderBasis();
    const double cos72 = std::cos(2.0 * 3.14159265358979323846 / 5.0);
    for (int j = 0; j < 5; ++j) {
        double len = std::hypot(basis.e[j].x, basis.e[j].y);
        CHECK(std::abs(len - 1.0) < 1e-12);
        const Vec2d& a = basis.e[j];
        const Vec2d& b = basis.e[(j + 1) % 5];
        CHECK(std::abs(a.x * b.x + a.y * b.y - cos72) < 1e-12);
    }
    CHECK(std::abs(basis.kappa * basis.rho - 1.0) < 1e-12);
    CHECK(std::abs(basis.c - (1.0 + std::sqrt(5.0)) / 4.0) < 1e-12);
}

TEST_CASE("physical render") {
    Vec2d e1 = renderPhysical(LatticePoint::unit(1));
    CHECK(std::abs(e1.x - 1.0) < 1e-12);
    CHECK(std::abs(e1.y) < 1e-12);
    Vec2d sum = renderPhysical(LatticePoint(1, 1, 0, 0, 0));
    CHECK(std::abs(sum.x - 1.309017) < 1e-6);
    CHECK(std::abs(sum.y - 0.951057) < 1e-6);
    Vec2d zero = renderPhysical(LatticePoint());
    CHECK(zero.x == 0.0);
    CHECK(zero.y == 0.0);
}

TEST_CASE("group generator a renders as rotation by pi/5") {
    const double angle = 3.14159265358979323846 / 5.0;
    const double ca = std::cos(angle), sa = std::sin(angle);
    for (const LatticePoint& x :
         {LatticePoint(1, 0, -2, 3, 1), LatticePoint(0, 4, 0, -1, 2), LatticePoint::unit(3)}) {
        Vec2d r = renderPhysical(x);
        Vec2d ra = renderPhysical(groupA(x));
        CHECK(std::abs(ra.x - (ca * r.x - sa * r.y)) < 1e-9);
        CHECK(std::abs(ra.y - (sa * r.x + ca * r.y)) < 1e-9);
    }
}

TEST_CASE("derived edges render at unit length") {
    Patch p = generatePatch(defaultOffset(), Golden(9));
    deriveEdges(p);
    REQUIRE(!p.edges.empty());
    for (const Edge& e : p.edges) {
        Vec2d a = renderPhysical(p.points[e.point]);
        Vec2d b = renderPhysical(p.points[e.point] + LatticePoint::unit(e.direction));
        CHECK(std::abs(std::hypot(b.x - a.x, b.y - a.y) - 1.0) < 1e-9);
    }
}

TEST_CASE("csv export") {
    Patch p = generatePatch(defaultOffset(), Golden(4));
    std::string csv = exportCsv(p);
    CHECK(countOccurrences(csv, "\n") == p.points.size());
    // every row: 5 coords + coset index + 2 floats
    std::istringstream lines(csv);
    std::string row;
    while (std::getline(lines, row)) CHECK(countOccurrences(row, ",") == 7);
    CHECK(exportCsv(p) == csv);
}

TEST_CASE("svg output") {
    Patch empty = generatePatch(defaultOffset(), Golden(0));
    std::string doc = emitSvg(empty);
    CHECK(doc.find("<svg") != std::string::npos);
    CHECK(doc.find("<polygon") == std::string::npos);

    Patch p = generatePatch(defaultOffset(), Golden(16));
    deriveEdges(p);
    deriveFaces(p);
    std::string svg = emitSvg(p);
    CHECK(countOccurrences(svg, "<polygon") == p.faces.size());
    CHECK(countOccurrences(svg, "<circle") == p.points.size());
    CHECK(emitSvg(p) == svg);

    SvgOverlay overlay{ScalingFactor(2, 3), LatticePoint()};
    std::string withOverlay = emitSvg(p, overlay);
    CHECK(countOccurrences(withOverlay, "<line") == p.edges.size());
}

TEST_CASE("cli generate and determinism across runs and threads") {
    auto out1 = tmpFile("gen1.json"), out2 = tmpFile("gen2.json"), out4 = tmpFile("gen4.json");
    CHECK(run({"generate", "--radius2", "16", "--out", out1.string()}) == 0);
    CHECK(run({"generate", "--radius2", "16", "--out", out2.string()}) == 0);
    CHECK(run({"generate", "--radius2", "16", "--threads", "4", "--out", out4.string()}) == 0);
    std::string bytes = slurp(out1);
    CHECK(!bytes.empty());
    CHECK(bytes == slurp(out2));
    CHECK(bytes == slurp(out4));
    Patch p = parsePatchJson(bytes);
    CHECK(!p.points.empty());
}

TEST_CASE("cli method both cross-validates") {
    auto out = tmpFile("both.json");
    CHECK(run({"generate", "--radius2", "16", "--method", "both", "--out", out.string()}) == 0);
}

TEST_CASE("cli csv format") {
    auto out = tmpFile("gen.csv");
    CHECK(run({"generate", "--radius2", "4", "--format", "csv", "--out", out.string()}) == 0);
    std::string csv = slurp(out);
    CHECK(!csv.empty());
    CHECK(csv.find(',') != std::string::npos);
}

TEST_CASE("cli audit") {
    auto out = tmpFile("audit.txt");
    CHECK(run({"audit", "--radius2", "25", "--out", out.string()}) == 0);
    CHECK(slurp(out).find("boundary_hits=0") != std::string::npos);
    CHECK(run({"audit", "--radius2", "1", "--offset", "0", "--out", out.string()}) == 0);
    CHECK(slurp(out).find("boundary_hits=0") == std::string::npos);
}

TEST_CASE("cli boundary hit exit code") {
    auto out = tmpFile("zero.json");
    CHECK(run({"generate", "--radius2", "1", "--offset", "0", "--out", out.string()}) == 3);
}

TEST_CASE("cli factors") {
    auto out = tmpFile("factors.txt");
    CHECK(run({"factors", "--k-range", "-30:30", "--m-range", "-30:30", "--out",
               out.string()}) == 0);
    std::string text = slurp(out);
    CHECK(text.find("(2,3)") != std::string::npos);
    CHECK(text.find("(6,10)") != std::string::npos);
    CHECK(text.find("norm=-4") != std::string::npos);
}

TEST_CASE("cli centers") {
    auto out = tmpFile("centers.txt");
    CHECK(run({"centers", "--lambda", "2,3", "--radius2", "4", "--out", out.string()}) == 0);
    std::string text = slurp(out);
    CHECK(text.find("(0,0,0,0,0)") != std::string::npos);
    CHECK(text.find("certified=") != std::string::npos);
    // contraction towards the window centers leaves delta^2 at the inradius^2
    CHECK(text.find("delta2=1/10+1/10t") != std::string::npos);
}

TEST_CASE("cli verify") {
    auto out1 = tmpFile("verify1.json"), out2 = tmpFile("verify2.json");
    CHECK(run({"verify", "--lambda", "2,3", "--inner-radius2", "9", "--out", out1.string()}) ==
          0);
    CHECK(run({"verify", "--lambda", "2,3", "--inner-radius2", "9", "--out", out2.string()}) ==
          0);
    std::string bytes = slurp(out1);
    CHECK(bytes == slurp(out2));
    CHECK(bytes.find("\"failures\": []") != std::string::npos);
}

TEST_CASE("cli svg determinism") {
    auto out1 = tmpFile("fig1.svg"), out2 = tmpFile("fig2.svg");
    CHECK(run({"svg", "--radius2", "16", "--out", out1.string()}) == 0);
    CHECK(run({"svg", "--radius2", "16", "--out", out2.string()}) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(run({"svg", "--radius2", "9", "--overlay-lambda", "2,3", "--out", out1.string()}) ==
          0);
    CHECK(slurp(out1).find("<line") != std::string::npos);
}

TEST_CASE("cli usage errors") {
    CHECK(run({"generate"}) == 2);                                    // missing --radius2
    CHECK(run({"generate", "--radius2", "bogus"}) == 2);              // malformed golden
    CHECK(run({"verify", "--lambda", "1,0", "--inner-radius2", "4"}) == 2);  // not in Lambda
    CHECK(run({"nonsense"}) == 2);
    CHECK(run({"generate", "--radius2", "4", "--method", "weird"}) == 2);
    CHECK(run({"verify", "--lambda", "2,3x", "--inner-radius2", "4"}) == 2);
    CHECK(run({"verify", "--lambda", "2,3", "--center", "0,0,0,0,0junk", "--inner-radius2",
               "4"}) == 2);
    CHECK(run({"verify", "--lambda", "2,3", "--center", "1,0,0,0,0", "--inner-radius2",
               "4"}) == 2);  // nonzero coordinate sum
}

TEST_CASE("cli verify rejects uncertified centers") {
    // sum-zero but far away: certificate fails
    CHECK(run({"verify", "--lambda", "2,3", "--center", "8,-8,0,0,0", "--inner-radius2",
               "1"}) == 4);
}

}  // TEST_SUITE
