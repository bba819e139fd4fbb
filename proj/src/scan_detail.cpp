#include "scan_detail.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace penrose::detail {

namespace {

// Keeps |2a+b| within a range whose square fits __int128 comfortably.
constexpr I64 kFastLimit = I64(1) << 59;

bool toI64Checked(const boost::multiprecision::cpp_int& v, I64& out) {
    if (v < -kFastLimit || v > kFastLimit) return false;
    out = v.convert_to<I64>();
    return true;
}

}  // namespace

int signumIntGolden(__int128 a, __int128 b) {
    __int128 x = 2 * a + b;
    __int128 y = b;
    if (x >= 0 && y >= 0) return (x != 0 || y != 0) ? 1 : 0;
    if (x <= 0 && y <= 0) return (x != 0 || y != 0) ? -1 : 0;
    __int128 d = x * x - 5 * y * y;
    int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    return x > 0 ? s : -s;
}

I64 floorToI64(const Golden& g) {
    double est = g.toDouble();
    if (!(std::abs(est) < 9.0e15)) throw std::overflow_error("floorToI64: value out of range");
    I64 n = static_cast<I64>(std::floor(est));
    while (Golden(static_cast<long long>(n)) > g) --n;
    while (Golden(static_cast<long long>(n + 1)) <= g) ++n;
    return n;
}

I64 ceilToI64(const Golden& g) { return -floorToI64(-g); }

I64 isqrtI64(I64 v) {
    if (v < 0) throw std::domain_error("isqrtI64: negative input");
    I64 r = static_cast<I64>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

QuadFormFilter::QuadFormFilter(Form form, const Golden& threshold, I64 ballHint)
    : form_(form), fiveThreshold_(Golden(5) * threshold) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;

    cpp_int da = denominator(fiveThreshold_.a());
    cpp_int db = denominator(fiveThreshold_.b());
    cpp_int m = lcm(da, db);
    cpp_int p = numerator(fiveThreshold_.a()) * (m / da);
    cpp_int q = numerator(fiveThreshold_.b()) * (m / db);

    I64 mi, pi, qi;
    if (toI64Checked(m, mi) && toI64Checked(p, pi) && toI64Checked(q, qi)) {
        // Per-candidate magnitudes stay below 8*ball; require the cross
        // products to stay inside the __int128-safe window.
        double worst = 8.0 * static_cast<double>(ballHint) * static_cast<double>(mi);
        if (worst + std::abs(static_cast<double>(pi)) + std::abs(static_cast<double>(qi)) <
            static_cast<double>(kFastLimit)) {
            fast_ = true;
            m_ = mi;
            p_ = pi;
            q_ = qi;
        }
    }
}

bool QuadFormFilter::operator()(const ICoords& x) const {
    I64 q1 = 0, q2 = 0, q3 = 0;
    for (int i = 0; i < 5; ++i) {
        q1 += x[i] * x[i];
        q2 += x[i] * x[(i + 1) % 5];
        q3 += x[i] * x[(i + 2) % 5];
    }
    I64 u, w;
    if (form_ == Form::Physical) {
        u = 2 * (q1 - q2);
        w = 2 * (q2 - q3);
    } else {
        u = 2 * (q1 - q3);
        w = 2 * (q3 - q2);
    }
    if (fast_) {
        // value <= (p + q tau)/m  <=>  (u m - p) + (w m - q) tau <= 0.
        return signumIntGolden(static_cast<__int128>(u) * m_ - p_,
                               static_cast<__int128>(w) * m_ - q_) <= 0;
    }
    Golden value{Rational(u), Rational(w)};
    return value <= fiveThreshold_;
}

I64 ballBound(const Golden& radiusSquared, const Golden& internalBound2,
              const Golden& symBound2) {
    Golden total = radiusSquared + internalBound2 + symBound2;
    if (total.signum() < 0) return -1;
    return ceilToI64(total);
}

void runWorkers(unsigned threads, const std::function<void(unsigned)>& worker) {
    if (threads <= 1) {
        worker(0);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                worker(t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    try {
        worker(0);
    } catch (...) {
        errors[0] = std::current_exception();
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace penrose::detail
