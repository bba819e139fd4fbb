#include "penrose/projections.hpp"

#include <stdexcept>

namespace penrose {

namespace {

// Circulant distance between 1-based indices, in {0,1,2}.
int circDist(int i, int j) {
    int d = (i - j) % 5;
    if (d < 0) d += 5;
    return d <= 2 ? d : 5 - d;
}

const Rational kFifth(1, 5);

}  // namespace

Golden SymCirculant::entry(int row, int col) const {
    switch (circDist(row, col)) {
        case 0: return alpha;
        case 1: return beta;
        default: return gamma;
    }
}

std::array<GVec5, 5> SymCirculant::expand() const {
    std::array<GVec5, 5> m;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) m[i - 1][j - 1] = entry(i, j);
    return m;
}

GVec5 SymCirculant::apply(const GVec5& v) const {
    GVec5 r;
    for (int i = 1; i <= 5; ++i) {
        Golden acc;
        for (int j = 1; j <= 5; ++j) acc += entry(i, j) * v[j - 1];
        r[i - 1] = acc;
    }
    return r;
}

SymCirculant SymCirculant::operator*(const SymCirculant& o) const {
    // Convolution of the symbols (alpha,beta,gamma,gamma,beta).
    return {alpha * o.alpha + Golden(2) * (beta * o.beta + gamma * o.gamma),
            alpha * o.beta + beta * o.alpha + gamma * o.beta + gamma * o.gamma + beta * o.gamma,
            alpha * o.gamma + beta * o.beta + gamma * o.alpha + gamma * o.beta + beta * o.gamma};
}

SymCirculant projectorPhys() {
    // pi = A(2/5, -tau'/5, -tau/5); -tau' = tau - 1.
    return {Golden(Rational(2, 5)), Golden(Rational(-1, 5), Rational(1, 5)),
            Golden(Rational(0), Rational(-1, 5))};
}

SymCirculant projectorInternal() {
    // pi' = A(2/5, -tau/5, -tau'/5).
    return {Golden(Rational(2, 5)), Golden(Rational(0), Rational(-1, 5)),
            Golden(Rational(-1, 5), Rational(1, 5))};
}

SymCirculant projectorSym() {
    return {Golden(kFifth), Golden(kFifth), Golden(kFifth)};
}

SymCirculant projectorPerp() {
    // pi_perp = A(3/5, tau'/5, tau/5).
    return {Golden(Rational(3, 5)), Golden(Rational(1, 5), Rational(-1, 5)),
            Golden(Rational(0), Rational(1, 5))};
}

std::array<GVec4, 4> GridMatrix::expand() const {
    const Golden zero;
    return {GVec4{alpha, gamma, zero, -gamma},
            GVec4{zero, beta, gamma, -gamma},
            GVec4{-gamma, gamma, beta, zero},
            GVec4{-gamma, zero, gamma, alpha}};
}

GVec4 GridMatrix::apply(const GVec4& v) const {
    auto m = expand();
    GVec4 r;
    for (int i = 0; i < 4; ++i) {
        Golden acc;
        for (int j = 0; j < 4; ++j) acc += m[i][j] * v[j];
        r[i] = acc;
    }
    return r;
}

GridMatrix gridProjectorPhys() {
    // p = B((5-sqrt5)/10, (5+sqrt5)/10, sqrt5/5) with sqrt5 = 2 tau - 1.
    return {Golden(Rational(3, 5), Rational(-1, 5)), Golden(Rational(2, 5), Rational(1, 5)),
            Golden(Rational(-1, 5), Rational(2, 5))};
}

GridMatrix gridProjectorInternal() {
    return {Golden(Rational(2, 5), Rational(1, 5)), Golden(Rational(3, 5), Rational(-1, 5)),
            Golden(Rational(1, 5), Rational(-2, 5))};
}

LatticePoint LatticePoint::unit(int j) {
    if (j < 1 || j > 5) throw std::out_of_range("LatticePoint::unit: j must be in 1..5");
    Coords c{};
    c[j - 1] = 1;
    return LatticePoint(c);
}

GVec5 LatticePoint::toGolden() const {
    GVec5 r;
    for (int i = 0; i < 5; ++i) r[i] = Golden(static_cast<long long>(c_[i]));
    return r;
}

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
    Coords c;
    for (int i = 0; i < 5; ++i) c[i] = c_[i] + o.c_[i];
    return LatticePoint(c);
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
    Coords c;
    for (int i = 0; i < 5; ++i) c[i] = c_[i] - o.c_[i];
    return LatticePoint(c);
}

LatticePoint LatticePoint::operator-() const {
    Coords c;
    for (int i = 0; i < 5; ++i) c[i] = -c_[i];
    return LatticePoint(c);
}

LatticePoint operator*(std::int64_t s, const LatticePoint& x) {
    LatticePoint::Coords c;
    for (int i = 0; i < 5; ++i) c[i] = s * x.c_[i];
    return LatticePoint(c);
}

GridCoords toGridCoords(const LatticePoint& x) {
    return {x[0] - x[4], x[1] - x[4], x[2] - x[4], x[3] - x[4]};
}

GVec5 latticeBasisVector(int j) {
    if (j < 1 || j > 5) throw std::out_of_range("latticeBasisVector: j must be in 1..5");
    // wj = (pi + pi')(eps_j) = eps_j - (1/5,...,1/5).
    GVec5 r;
    for (int i = 0; i < 5; ++i) r[i] = Golden(Rational(-1, 5));
    r[j - 1] += Golden(1);
    return r;
}

GVec5 expandGridCoords(const GridCoords& c) {
    GVec5 r{};
    for (int j = 1; j <= 4; ++j) {
        Golden s(static_cast<long long>(c[j - 1]));
        GVec5 w = latticeBasisVector(j);
        for (int i = 0; i < 5; ++i) r[i] += s * w[i];
    }
    return r;
}

std::pair<std::int64_t, LatticePoint> cosetOf(const LatticePoint& x) {
    std::int64_t n = x.n();
    return {n, x - n * LatticePoint::unit(1)};
}

LatticePoint groupA(const LatticePoint& x) {
    return LatticePoint(-x[2], -x[3], -x[4], -x[0], -x[1]);
}

LatticePoint groupB(const LatticePoint& x) {
    return LatticePoint(x[0], x[4], x[3], x[2], x[1]);
}

GVec5 groupA(const GVec5& x) {
    return {-x[2], -x[3], -x[4], -x[0], -x[1]};
}

GVec5 groupB(const GVec5& x) {
    return {x[0], x[4], x[3], x[2], x[1]};
}

}  // namespace penrose
