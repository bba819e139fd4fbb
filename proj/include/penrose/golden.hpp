#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace penrose {

using Rational = boost::multiprecision::cpp_rational;

/**
 * Golden: an element a + b*tau of the quadratic field Q(tau), tau^2 = tau + 1.
 *
 * Coefficients are arbitrary-precision rationals kept in lowest terms, so
 * equality is componentwise and every predicate built on top of signum() is
 * exact. The Galois conjugate maps tau to tau' = 1 - tau.
 */
class Golden {
public:
    Golden() : a_(0), b_(0) {}
    template <std::integral T>
    Golden(T v) : a_(v), b_(0) {}
    Golden(Rational a) : a_(std::move(a)), b_(0) {}
    Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Golden tau() { return Golden(Rational(0), Rational(1)); }
    static Golden tauConj() { return Golden(Rational(1), Rational(-1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool isZero() const { return a_.is_zero() && b_.is_zero(); }
    bool isRational() const { return b_.is_zero(); }
    bool isInteger() const {
        using boost::multiprecision::denominator;
        return b_.is_zero() && denominator(a_) == 1;
    }

    Golden operator-() const { return Golden(-a_, -b_); }

    Golden& operator+=(const Golden& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Golden& operator-=(const Golden& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Golden& operator*=(const Golden& o) {
        // (a + b tau)(c + d tau) = ac + bd + (ad + bc + bd) tau
        Rational bd = b_ * o.b_;
        Rational na = a_ * o.a_ + bd;
        b_ = a_ * o.b_ + b_ * o.a_ + bd;
        a_ = std::move(na);
        return *this;
    }
    Golden& operator/=(const Golden& o) { return *this *= o.inverse(); }

    friend Golden operator+(Golden x, const Golden& y) { return x += y; }
    friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
    friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
    friend Golden operator/(Golden x, const Golden& y) { return x /= y; }

    /// Galois conjugate: a + b*tau -> (a+b) - b*tau.
    Golden conjugate() const { return Golden(a_ + b_, -b_); }

    /// x * conjugate(x) = a(a+b) - b^2, always rational.
    Rational galoisNorm() const { return a_ * (a_ + b_) - b_ * b_; }

    Golden inverse() const;

    /**
     * Exact sign of the real value a + b(1+sqrt5)/2.
     *
     * Writes the value as ((2a+b) + b*sqrt5)/2 and decides the mixed-sign
     * case by comparing squares, so no floating point is involved.
     */
    int signum() const {
        Rational x = 2 * a_ + b_;
        const Rational& y = b_;
        int sx = x.sign();
        int sy = y.sign();
        if (sx >= 0 && sy >= 0) return (sx != 0 || sy != 0) ? 1 : 0;
        if (sx <= 0 && sy <= 0) return (sx != 0 || sy != 0) ? -1 : 0;
        int s = Rational(x * x - 5 * y * y).sign();
        return sx > 0 ? s : -s;
    }

    Golden abs() const { return signum() >= 0 ? *this : -*this; }

    friend bool operator==(const Golden& x, const Golden& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Golden& x, const Golden& y) { return !(x == y); }
    friend bool operator<(const Golden& x, const Golden& y) { return (x - y).signum() < 0; }
    friend bool operator<=(const Golden& x, const Golden& y) { return (x - y).signum() <= 0; }
    friend bool operator>(const Golden& x, const Golden& y) { return (x - y).signum() > 0; }
    friend bool operator>=(const Golden& x, const Golden& y) { return (x - y).signum() >= 0; }

    /// Render-only double approximation; never used in exact predicates.
    double toDouble() const;

    /// Canonical text form "a/b+c/dt" (t denotes tau); round-trips via parse().
    std::string str() const;

    /// Parses str() output plus convenient shorthands ("400", "1/4", "5-3t", "-t").
    static Golden parse(std::string_view text);

private:
    Rational a_, b_;
};

inline Golden Golden::inverse() const {
    Rational n = galoisNorm();
    if (n.is_zero()) throw std::domain_error("Golden: division by zero");
    return Golden((a_ + b_) / n, -b_ / n);
}

// Fixed-length vectors over the golden field; the carriers for all projected
// geometry (lengths 2, 4 and 5 by use site).
template <std::size_t N>
using GVec = std::array<Golden, N>;

using GVec2 = GVec<2>;
using GVec4 = GVec<4>;
using GVec5 = GVec<5>;

template <std::size_t N>
GVec<N> operator+(const GVec<N>& x, const GVec<N>& y) {
    GVec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + y[i];
    return r;
}

template <std::size_t N>
GVec<N> operator-(const GVec<N>& x, const GVec<N>& y) {
    GVec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = x[i] - y[i];
    return r;
}

template <std::size_t N>
GVec<N> operator-(const GVec<N>& x) {
    GVec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = -x[i];
    return r;
}

template <std::size_t N>
GVec<N> operator*(const Golden& s, const GVec<N>& x) {
    GVec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = s * x[i];
    return r;
}

template <std::size_t N>
Golden dot(const GVec<N>& x, const GVec<N>& y) {
    Golden r;
    for (std::size_t i = 0; i < N; ++i) r += x[i] * y[i];
    return r;
}

template <std::size_t N>
Golden normSquared(const GVec<N>& x) {
    return dot(x, x);
}

template <std::size_t N>
bool isZeroVec(const GVec<N>& x) {
    for (const Golden& g : x)
        if (!g.isZero()) return false;
    return true;
}

}  // namespace penrose
