#pragma once

// Internal enumeration helpers shared by the patch generator and the
// inflation-center search. Candidates are integer 5-tuples inside an exact
// Euclidean ball, walked with prefix pruning; the quadratic-form filters are
// the int64 fast path of the exact golden-arithmetic comparisons.

#include <array>
#include <cstdint>
#include <functional>

#include "penrose/golden.hpp"

namespace penrose::detail {

using I64 = std::int64_t;
using ICoords = std::array<I64, 5>;

/// Exact sign of a + b*tau for integer coefficients.
int signumIntGolden(__int128 a, __int128 b);

I64 floorToI64(const Golden& g);
I64 ceilToI64(const Golden& g);
I64 isqrtI64(I64 v);

/**
 * Exact test  q(x) <= threshold  where q is one of the two projector
 * quadratic forms on integer tuples:
 *   5*||pi  x||^2 = 2(q1-q2) + 2(q2-q3) tau     (physical)
 *   5*||pi' x||^2 = 2(q1-q3) + 2(q3-q2) tau     (internal)
 * with q1 = sum x_i^2, q2/q3 the circulant distance-1/2 correlations.
 * Integers all the way when the scaled threshold fits; exact rational
 * fallback otherwise.
 */
class QuadFormFilter {
public:
    enum class Form { Physical, Internal };

    QuadFormFilter(Form form, const Golden& threshold, I64 ballHint);

    bool operator()(const ICoords& x) const;

private:
    Form form_;
    bool fast_ = false;
    I64 p_ = 0, q_ = 0, m_ = 1;  // 5*threshold = (p + q*tau)/m
    Golden fiveThreshold_;
};

/// Smallest admissible sum-of-squares bound for the candidate ball.
I64 ballBound(const Golden& radiusSquared, const Golden& internalBound2, const Golden& symBound2);

/**
 * Visits every integer 5-tuple with sum of squares <= ball and coordinate
 * sum in [nLo, nHi], restricted to x1 in {x1Start, x1Start+step, ...}.
 * fn(coords, n) is called for each candidate.
 */
template <class Fn>
void scanSumSlices(I64 ball, I64 x1Start, I64 step, int nLo, int nHi, Fn&& fn) {
    const I64 r = isqrtI64(ball);
    for (I64 x1 = x1Start; x1 <= r; x1 += step) {
        const I64 rem1 = ball - x1 * x1;
        const I64 r2 = isqrtI64(rem1);
        for (I64 x2 = -r2; x2 <= r2; ++x2) {
            const I64 rem2 = rem1 - x2 * x2;
            const I64 r3 = isqrtI64(rem2);
            for (I64 x3 = -r3; x3 <= r3; ++x3) {
                const I64 rem3 = rem2 - x3 * x3;
                const I64 r4 = isqrtI64(rem3);
                for (I64 x4 = -r4; x4 <= r4; ++x4) {
                    const I64 rem4 = rem3 - x4 * x4;
                    const I64 s4 = x1 + x2 + x3 + x4;
                    for (int n = nLo; n <= nHi; ++n) {
                        const I64 x5 = n - s4;
                        if (x5 * x5 <= rem4) fn(ICoords{x1, x2, x3, x4, x5}, n);
                    }
                }
            }
        }
    }
}

/// Runs worker(t) for t = 0..threads-1 on separate threads and rethrows the
/// lowest-index worker exception after joining.
void runWorkers(unsigned threads, const std::function<void(unsigned)>& worker);

}  // namespace penrose::detail
