#include "penrose/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "penrose/render.hpp"

namespace penrose::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBoundaryHit = 3;
constexpr int kExitVerifyFailed = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

InternalPoint offsetFromFlag(const std::string& text) {
    return Golden::parse(text) * omegaVertex(1);
}

std::int64_t parseI64(const std::string& text, const char* what) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": malformed integer '" + text + "'");
    }
    if (used != text.size())
        throw UsageError(std::string(what) + ": trailing characters in '" + text + "'");
    return v;
}

std::pair<std::int64_t, std::int64_t> parseIntPair(const std::string& text, char sep,
                                                   const char* what) {
    std::size_t cut = text.find(sep);
    if (cut == std::string::npos)
        throw UsageError(std::string(what) + ": expected two integers separated by '" + sep +
                         "'");
    return {parseI64(text.substr(0, cut), what), parseI64(text.substr(cut + 1), what)};
}

ScalingFactor factorFromFlag(const std::string& text) {
    auto [k, m] = parseIntPair(text, ',', "--lambda");
    ScalingFactor f(k, m);
    if (!f.admissible())
        throw UsageError("--lambda: (" + std::to_string(k) + "," + std::to_string(m) +
                         ") is not in Lambda");
    return f;
}

LatticePoint centerFromFlag(const std::string& text) {
    LatticePoint::Coords c{};
    std::size_t pos = 0;
    for (int i = 0; i < 5; ++i) {
        std::size_t next = i < 4 ? text.find(',', pos) : text.size();
        if (next == std::string::npos) throw UsageError("--center: expected 5 integers");
        c[i] = parseI64(text.substr(pos, next - pos), "--center");
        pos = next + 1;
    }
    return LatticePoint(c);
}

void writeOutput(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string describe(const LatticePoint& x) {
    std::string s = "(";
    for (int i = 0; i < 5; ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

struct Args {
    std::string radius2 = "0";
    std::string offset = "1/4";
    std::string method = "model";
    std::string format = "json";
    std::string out;
    std::string kRange = "-30:30";
    std::string mRange = "-30:30";
    std::string lambda;
    std::string center = "0,0,0,0,0";
    std::string innerRadius2 = "0";
    std::string overlayLambda;
    std::string overlayCenter = "0,0,0,0,0";
    unsigned threads = 1;
};

int cmdGenerate(const Args& a) {
    GenerateOptions opts{a.threads};
    InternalPoint v = offsetFromFlag(a.offset);
    Golden r2 = Golden::parse(a.radius2);

    Patch patch;
    if (a.method == "model") {
        patch = generatePatch(v, r2, opts);
    } else if (a.method == "strip") {
        patch = generatePatchStrip(v, r2, opts);
    } else if (a.method == "both") {
        patch = generatePatch(v, r2, opts);
        Patch strip = generatePatchStrip(v, r2, opts);
        if (patch.points != strip.points) {
            std::cerr << "generate: model and strip point sets differ (" << patch.points.size()
                      << " vs " << strip.points.size() << " points)\n";
            return kExitVerifyFailed;
        }
    } else {
        throw UsageError("--method must be model, strip or both");
    }
    deriveEdges(patch);
    deriveFaces(patch);
    writeOutput(a.out, a.format == "csv" ? exportCsv(patch) : exportJson(patch));
    return kExitOk;
}

int cmdAudit(const Args& a) {
    AuditReport report =
        auditBoundary(offsetFromFlag(a.offset), Golden::parse(a.radius2), {a.threads});
    std::string out = "points_checked=" + std::to_string(report.pointsChecked) +
                      " boundary_hits=" + std::to_string(report.boundaryHits.size()) + "\n";
    for (const LatticePoint& x : report.boundaryHits) out += describe(x) + "\n";
    writeOutput(a.out, out);
    return kExitOk;
}

int cmdFactors(const Args& a) {
    auto [kLo, kHi] = parseIntPair(a.kRange, ':', "--k-range");
    auto [mLo, mHi] = parseIntPair(a.mRange, ':', "--m-range");
    std::string out;
    for (const ScalingFactor& f : enumerateFactors(kLo, kHi, mLo, mHi))
        out += "(" + std::to_string(f.k()) + "," + std::to_string(f.m()) +
               ") lambda=" + f.lambda().str() + " conj=" + f.lambdaConj().str() +
               " norm=" + std::to_string(f.norm()) + "\n";
    writeOutput(a.out, out);
    return kExitOk;
}

int cmdCenters(const Args& a) {
    if (a.lambda.empty()) throw UsageError("--lambda is required");
    ScalingFactor f = factorFromFlag(a.lambda);
    InternalPoint v = offsetFromFlag(a.offset);
    auto centers = findCenters(f, v, Golden::parse(a.radius2), {a.threads});
    std::size_t inBall = 0;
    std::string out;
    for (const InflationCenter& c : centers) {
        out += describe(c.y);
        if (c.deltaSquared) {
            out += " delta_ball=yes";
            ++inBall;
        } else {
            out += " delta_ball=no";
        }
        out += "\n";
    }
    out += "certified=" + std::to_string(centers.size()) +
           " delta_ball=" + std::to_string(inBall) +
           " delta2=" + deltaLowerBoundSquared(f.lambdaConj(), v).str() + "\n";
    writeOutput(a.out, out);
    return kExitOk;
}

int cmdVerify(const Args& a) {
    if (a.lambda.empty()) throw UsageError("--lambda is required");
    ScalingFactor f = factorFromFlag(a.lambda);
    InternalPoint v = offsetFromFlag(a.offset);
    LatticePoint y = centerFromFlag(a.center);
    if (y.n() != 0) throw UsageError("--center must have coordinate sum 0");
    if (!contractionCertificate(f.lambdaConj(), internalProjection(y), v)) {
        std::cerr << "verify: center " << describe(y) << " is not certified for lambda=("
                  << f.k() << "," << f.m() << ")\n";
        return kExitVerifyFailed;
    }
    InflationCenter center{y, true, std::nullopt};
    VerificationReport report =
        verifyInvariance(f, center, v, Golden::parse(a.innerRadius2), {a.threads});
    writeOutput(a.out, reportJson(report));
    return report.failures.empty() ? kExitOk : kExitVerifyFailed;
}

int cmdSvg(const Args& a) {
    GenerateOptions opts{a.threads};
    Patch patch = generatePatch(offsetFromFlag(a.offset), Golden::parse(a.radius2), opts);
    deriveEdges(patch);
    deriveFaces(patch);
    std::optional<SvgOverlay> overlay;
    if (!a.overlayLambda.empty()) {
        LatticePoint c = centerFromFlag(a.overlayCenter);
        if (c.n() != 0) throw UsageError("--overlay-center must have coordinate sum 0");
        overlay = SvgOverlay{factorFromFlag(a.overlayLambda), c};
    }
    writeOutput(a.out, emitSvg(patch, overlay));
    return kExitOk;
}

}  // namespace

int runCommand(int argc, const char* const* argv) {
    CLI::App app{"Penrose vertex pattern: exact generators and self-similarity tools"};
    app.require_subcommand(1);
    Args a;

    CLI::App* generate = app.add_subcommand("generate", "Generate a patch by model set or strip");
    generate->add_option("--radius2", a.radius2, "Squared physical cutoff (golden number)")
        ->required();
    generate->add_option("--offset", a.offset, "Window offset coefficient: v = G*pi'(eps1)");
    generate->add_option("--method", a.method, "model | strip | both");
    generate->add_option("--format", a.format, "json | csv");
    generate->add_option("--out", a.out, "Output path (default stdout)");
    generate->add_option("--threads", a.threads, "Worker threads");

    CLI::App* audit = app.add_subcommand("audit", "Report exact window boundary incidences");
    audit->add_option("--radius2", a.radius2)->required();
    audit->add_option("--offset", a.offset);
    audit->add_option("--out", a.out);
    audit->add_option("--threads", a.threads);

    CLI::App* factors = app.add_subcommand("factors", "Enumerate the scaling family Lambda");
    factors->add_option("--k-range", a.kRange, "k range as A:B");
    factors->add_option("--m-range", a.mRange, "m range as A:B");
    factors->add_option("--out", a.out);

    CLI::App* centers = app.add_subcommand("centers", "Search certified inflation centers");
    centers->add_option("--lambda", a.lambda, "Factor as K,M")->required();
    centers->add_option("--radius2", a.radius2)->required();
    centers->add_option("--offset", a.offset);
    centers->add_option("--out", a.out);
    centers->add_option("--threads", a.threads);

    CLI::App* verify = app.add_subcommand("verify", "Verify pattern invariance under inflation");
    verify->add_option("--lambda", a.lambda, "Factor as K,M")->required();
    verify->add_option("--center", a.center, "Center as x1,x2,x3,x4,x5");
    verify->add_option("--inner-radius2", a.innerRadius2, "Squared radius of tested points")
        ->required();
    verify->add_option("--offset", a.offset);
    verify->add_option("--out", a.out);
    verify->add_option("--threads", a.threads);

    CLI::App* svg = app.add_subcommand("svg", "Render a patch (and optional inflation overlay)");
    svg->add_option("--radius2", a.radius2)->required();
    svg->add_option("--offset", a.offset);
    svg->add_option("--out", a.out);
    svg->add_option("--overlay-lambda", a.overlayLambda, "Factor as K,M");
    svg->add_option("--overlay-center", a.overlayCenter, "Center as x1,x2,x3,x4,x5");
    svg->add_option("--threads", a.threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmdGenerate(a);
        if (audit->parsed()) return cmdAudit(a);
        if (factors->parsed()) return cmdFactors(a);
        if (centers->parsed()) return cmdCenters(a);
        if (verify->parsed()) return cmdVerify(a);
        if (svg->parsed()) return cmdSvg(a);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BoundaryHitError& e) {
        std::cerr << "error: " << e.what() << " at " << describe(e.hit()) << "\n";
        return kExitBoundaryHit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace penrose::cli
