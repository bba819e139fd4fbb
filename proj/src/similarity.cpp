#include "penrose/similarity.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "scan_detail.hpp"

namespace penrose {

namespace {

using detail::I64;
using detail::ICoords;

// Integer circulant coefficients of S~ for an admissible factor.
struct LiftedInt {
    I64 diag, near, far;  // distances 0, 1, 2

    LatticePoint apply(const LatticePoint& x) const {
        LatticePoint::Coords z;
        for (int i = 0; i < 5; ++i) {
            I64 acc = 0;
            for (int j = 0; j < 5; ++j) {
                int d = (i - j + 5) % 5;
                if (d > 2) d = 5 - d;
                acc += (d == 0 ? diag : d == 1 ? near : far) * x[j];
            }
            z[i] = acc;
        }
        return LatticePoint(z);
    }
};

LiftedInt liftedInt(const ScalingFactor& f) {
    I64 t = (2 * f.m() - f.k() + 1) / 5;
    return {f.k() + t, t, t - f.m()};
}

void requireAdmissible(const ScalingFactor& f, const char* who) {
    if (!f.admissible()) throw std::invalid_argument(std::string(who) + ": factor not in Lambda");
}

}  // namespace

ScalingFactor::ScalingFactor(std::int64_t k, std::int64_t m)
    : k_(k), m_(m), admissible_(isAdmissible(k, m)) {}

bool isAdmissible(std::int64_t k, std::int64_t m) {
    if ((2 * m - k + 1) % 5 != 0) return false;
    Golden conj(Rational(k + m), Rational(-m));  // k + m*tau'
    return conj.abs() < Golden(Rational(1, 2));
}

std::vector<ScalingFactor> enumerateFactors(std::int64_t kLo, std::int64_t kHi, std::int64_t mLo,
                                            std::int64_t mHi) {
    struct Entry {
        ScalingFactor f;
        Golden lambdaSq;
    };
    std::vector<Entry> found;
    for (std::int64_t k = kLo; k <= kHi; ++k)
        for (std::int64_t m = mLo; m <= mHi; ++m)
            if (isAdmissible(k, m)) {
                ScalingFactor f(k, m);
                found.push_back({f, f.lambda() * f.lambda()});
            }
    std::sort(found.begin(), found.end(), [](const Entry& x, const Entry& y) {
        int s = (x.lambdaSq - y.lambdaSq).signum();
        if (s != 0) return s < 0;
        if (x.f.k() != y.f.k()) return x.f.k() < y.f.k();
        return x.f.m() < y.f.m();
    });
    std::vector<ScalingFactor> out;
    out.reserve(found.size());
    for (const Entry& e : found) out.push_back(e.f);
    return out;
}

SymCirculant scalingMatrixParams(std::int64_t k, std::int64_t m) {
    Golden t(Rational(2 * m - k + 1, 5));
    return {Golden(Rational(k)) + t, t, t - Golden(Rational(m))};
}

SymCirculant liftedScalingMatrix(const ScalingFactor& f) {
    requireAdmissible(f, "liftedScalingMatrix");
    return scalingMatrixParams(f.k(), f.m());
}

GridMatrix gridScalingMatrix(const ScalingFactor& f) {
    requireAdmissible(f, "gridScalingMatrix");
    return {Golden(Rational(f.k())), Golden(Rational(f.k() + f.m())), Golden(Rational(f.m()))};
}

LatticePoint scaleAboutCenter(const ScalingFactor& f, const LatticePoint& y,
                              const LatticePoint& x) {
    requireAdmissible(f, "scaleAboutCenter");
    return liftedInt(f).apply(x - y) + y;
}

std::vector<InflationCenter> findCenters(const ScalingFactor& f, const InternalPoint& v,
                                         const Golden& searchRadiusSquared,
                                         const GenerateOptions& opts) {
    requireAdmissible(f, "findCenters");
    const Golden lambdaConj = f.lambdaConj();
    const Golden oneMinus = Golden(1) - lambdaConj;

    // A certified t = pi'y maps each window center to v + (1-lambda')(t-v),
    // which must stay within the smallest window: ||t-v|| <= rho/|1-lambda'|.
    const Golden tBound2 = Golden(2) * v.normSquared() +
                           Golden(Rational(4, 5)) / (oneMinus * oneMinus);
    const I64 ball = detail::ballBound(searchRadiusSquared, tBound2, Golden(0));
    if (ball < 0) return {};
    const detail::QuadFormFilter physOk(detail::QuadFormFilter::Form::Physical,
                                        searchRadiusSquared, ball);
    const detail::QuadFormFilter internalOk(detail::QuadFormFilter::Form::Internal, tBound2,
                                            ball);
    const I64 r = detail::isqrtI64(ball);

    std::optional<Golden> deltaSq;
    try {
        deltaSq = deltaLowerBoundSquared(lambdaConj, v);
    } catch (const std::domain_error&) {
        // No strict slack at v itself; centers still come from the direct test.
    }

    unsigned threads = opts.threads ? opts.threads : 1;
    std::vector<std::vector<LatticePoint>> parts(threads);
    detail::runWorkers(threads, [&](unsigned t) {
        detail::scanSumSlices(ball, -r + static_cast<I64>(t), static_cast<I64>(threads), 0, 0,
                              [&](const ICoords& c, int) {
                                  if (!physOk(c) || !internalOk(c)) return;
                                  LatticePoint y(c);
                                  if (contractionCertificate(lambdaConj, internalProjection(y), v))
                                      parts[t].push_back(y);
                              });
    });

    std::vector<LatticePoint> found;
    for (auto& part : parts) found.insert(found.end(), part.begin(), part.end());

    struct Keyed {
        Golden physNorm2;
        LatticePoint y;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(found.size());
    const SymCirculant pi = projectorPhys();
    for (const LatticePoint& y : found)
        keyed.push_back({normSquared(pi.apply(y.toGolden())), y});
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        int s = (a.physNorm2 - b.physNorm2).signum();
        if (s != 0) return s < 0;
        return a.y < b.y;
    });

    std::vector<InflationCenter> out;
    out.reserve(keyed.size());
    for (const Keyed& ky : keyed) {
        InflationCenter c{ky.y, true, std::nullopt};
        if (deltaSq && (internalProjection(ky.y) - v).normSquared() < *deltaSq)
            c.deltaSquared = deltaSq;
        out.push_back(std::move(c));
    }
    return out;
}

InvarianceScanResult runInvarianceScan(const ScalingFactor& f, const LatticePoint& y,
                                       const InternalPoint& v, const Golden& innerRadiusSquared,
                                       const std::optional<Golden>& internalScaleOverride,
                                       const GenerateOptions& opts) {
    requireAdmissible(f, "runInvarianceScan");
    if (y.n() != 0)
        throw std::invalid_argument("runInvarianceScan: center must have coordinate sum 0");

    Patch inner = generatePatch(v, innerRadiusSquared, opts);
    const LiftedInt s = liftedInt(f);
    std::array<std::optional<WindowPentagon>, 5> windows;
    for (int n = 1; n <= 4; ++n) windows[n] = cosetWindow(n, v);
    const InternalPoint internalY = internalProjection(y);

    InvarianceScanResult result;
    result.report.k = f.k();
    result.report.m = f.m();
    result.report.center = y;
    for (const LatticePoint& x : inner.points) {
        ++result.report.pointsTested;
        LatticePoint z = s.apply(x - y) + y;
        if (z.n() != x.n())
            throw std::logic_error("runInvarianceScan: image left its coset slice");
        InternalPoint checked = internalScaleOverride
                                    ? *internalScaleOverride *
                                              (internalProjection(x) - internalY) +
                                          internalY
                                    : internalProjection(z);
        switch (classify(checked, *windows[x.n()])) {
            case Region::Inside: break;
            case Region::Boundary:
                result.boundaryHits.push_back(z);
                result.report.failures.push_back(x);
                break;
            case Region::Outside: result.report.failures.push_back(x); break;
        }
    }
    return result;
}

VerificationReport verifyInvariance(const ScalingFactor& f, const InflationCenter& center,
                                    const InternalPoint& v, const Golden& innerRadiusSquared,
                                    const GenerateOptions& opts) {
    requireAdmissible(f, "verifyInvariance");
    if (!center.certified)
        throw std::invalid_argument("verifyInvariance: center is not certified");
    InvarianceScanResult r =
        runInvarianceScan(f, center.y, v, innerRadiusSquared, std::nullopt, opts);
    if (!r.boundaryHits.empty()) throw BoundaryHitError(v, r.boundaryHits.front());
    return std::move(r.report);
}

VerificationReport verifyInvarianceByLookup(const ScalingFactor& f, const LatticePoint& y,
                                            const InternalPoint& v,
                                            const Golden& innerRadiusSquared,
                                            const GenerateOptions& opts) {
    requireAdmissible(f, "verifyInvarianceByLookup");
    Patch inner = generatePatch(v, innerRadiusSquared, opts);

    // ||pi z||^2 <= 2 lambda^2 ||pi(x-y)||^2 + 2 ||pi y||^2 and the first term
    // doubles again through ||pi x|| + ||pi y||; conservative but exact.
    const Golden lambdaSq = f.lambda() * f.lambda();
    const Golden physY2 = normSquared(projectorPhys().apply(y.toGolden()));
    const Golden outerRadiusSquared =
        Golden(4) * lambdaSq * innerRadiusSquared + (Golden(4) * lambdaSq + Golden(2)) * physY2;
    Patch outer = generatePatch(v, outerRadiusSquared, opts);

    VerificationReport report;
    report.k = f.k();
    report.m = f.m();
    report.center = y;
    const LiftedInt s = liftedInt(f);
    for (const LatticePoint& x : inner.points) {
        ++report.pointsTested;
        if (!containsPoint(outer, s.apply(x - y) + y)) report.failures.push_back(x);
    }
    return report;
}

std::string reportJson(const VerificationReport& r) {
    nlohmann::ordered_json doc;
    doc["k"] = r.k;
    doc["m"] = r.m;
    doc["center"] = r.center.coords();
    doc["points_tested"] = r.pointsTested;
    auto& failures = doc["failures"] = nlohmann::ordered_json::array();
    for (const LatticePoint& x : r.failures) failures.push_back(x.coords());
    return doc.dump(2) + "\n";
}

}  // namespace penrose
