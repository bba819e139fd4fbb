#pragma once

#include <optional>

#include "penrose/generator.hpp"

namespace penrose {

/**
 * A candidate scaling factor lambda = k + m*tau with its Galois conjugate
 * lambda' = k + m*tau'. Admissible factors (2m-k+1 = 0 mod 5, |lambda'| < 1/2)
 * are exactly the members of the self-similarity family Lambda.
 */
class ScalingFactor {
public:
    ScalingFactor(std::int64_t k, std::int64_t m);

    std::int64_t k() const { return k_; }
    std::int64_t m() const { return m_; }
    Golden lambda() const { return Golden(Rational(k_), Rational(m_)); }
    Golden lambdaConj() const { return Golden(Rational(k_ + m_), Rational(-m_)); }
    std::int64_t norm() const { return k_ * k_ + k_ * m_ - m_ * m_; }
    bool admissible() const { return admissible_; }

    bool operator==(const ScalingFactor& o) const { return k_ == o.k_ && m_ == o.m_; }

private:
    std::int64_t k_, m_;
    bool admissible_;
};

/// Exact evaluation of both Lambda membership conditions.
bool isAdmissible(std::int64_t k, std::int64_t m);

/// All admissible factors in the box, sorted by (|lambda| ascending, k, m).
std::vector<ScalingFactor> enumerateFactors(std::int64_t kLo, std::int64_t kHi, std::int64_t mLo,
                                            std::int64_t mHi);

/// A-parameters of lambda*pi + lambda'*pi' + pi'' for arbitrary integer (k,m);
/// entries are integers exactly when 2m-k+1 = 0 mod 5.
SymCirculant scalingMatrixParams(std::int64_t k, std::int64_t m);

/// The lifted integer scaling matrix S~ for an admissible factor.
SymCirculant liftedScalingMatrix(const ScalingFactor& f);

/// The 4x4 matrix of S = lambda*p + lambda'*p' in the w-basis: B(k, k+m, m).
GridMatrix gridScalingMatrix(const ScalingFactor& f);

/// z = S~(x - y) + y on integer 5-tuples; the lattice form of the inflation map.
LatticePoint scaleAboutCenter(const ScalingFactor& f, const LatticePoint& y,
                              const LatticePoint& x);

/**
 * A sum-zero lattice point y whose internal projection admits the shifted
 * contraction lambda'(K_n - pi'y) + pi'y inside every window. deltaSquared is
 * set when y also satisfies the delta-ball criterion ||pi'y - v||^2 < delta^2.
 */
struct InflationCenter {
    LatticePoint y;
    bool certified = false;
    std::optional<Golden> deltaSquared;
};

/// All certified centers with ||pi y||^2 <= searchRadiusSquared, sorted by
/// physical norm then lexicographically.
std::vector<InflationCenter> findCenters(const ScalingFactor& f, const InternalPoint& v,
                                         const Golden& searchRadiusSquared,
                                         const GenerateOptions& opts = {});

struct VerificationReport {
    std::int64_t k = 0, m = 0;
    LatticePoint center;
    std::size_t pointsTested = 0;
    std::vector<LatticePoint> failures;  // sorted; pattern points whose image left the pattern
};

/**
 * Exact invariance check: for every pattern point x with ||pi x||^2 inside
 * the inner radius, the image z = S~(x-y)+y must keep the coset index and
 * classify strictly inside its window. Requires an admissible factor and a
 * certified center; boundary hits during classification abort (non-generic v).
 */
VerificationReport verifyInvariance(const ScalingFactor& f, const InflationCenter& center,
                                    const InternalPoint& v, const Golden& innerRadiusSquared,
                                    const GenerateOptions& opts = {});

struct InvarianceScanResult {
    VerificationReport report;
    std::vector<LatticePoint> boundaryHits;
};

/**
 * Verification core with an injectable internal contraction scalar. Without
 * an override the image's own projection pi'z is classified; an override
 * classifies internalScale*(pi'x - pi'y) + pi'y instead, which lets a test
 * harness corrupt the contraction (e.g. lambda in place of lambda') and watch
 * the invariance fail.
 */
InvarianceScanResult runInvarianceScan(const ScalingFactor& f, const LatticePoint& y,
                                       const InternalPoint& v, const Golden& innerRadiusSquared,
                                       const std::optional<Golden>& internalScaleOverride,
                                       const GenerateOptions& opts = {});

/// Cross-check mode: image membership by set lookup in an enclosing patch
/// instead of the direct window test.
VerificationReport verifyInvarianceByLookup(const ScalingFactor& f, const LatticePoint& y,
                                            const InternalPoint& v,
                                            const Golden& innerRadiusSquared,
                                            const GenerateOptions& opts = {});

std::string reportJson(const VerificationReport& r);

}  // namespace penrose
