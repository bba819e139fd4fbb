#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>

#include "penrose/golden.hpp"

namespace penrose {

/**
 * Symmetric circulant 5x5 matrix family A(alpha,beta,gamma): rows are cyclic
 * shifts of (alpha,beta,gamma,gamma,beta). Closed under products, so the
 * projectors pi, pi', pi'', pi_perp and the lifted scaling matrices all live
 * in the same three-parameter type; expand() exists for generic matrix tests.
 */
struct SymCirculant {
    Golden alpha, beta, gamma;

    static SymCirculant identity() { return {Golden(1), Golden(0), Golden(0)}; }

    Golden entry(int row, int col) const;
    std::array<GVec5, 5> expand() const;
    GVec5 apply(const GVec5& v) const;
    Golden trace() const { return Golden(5) * alpha; }

    SymCirculant operator*(const SymCirculant& o) const;
    SymCirculant operator+(const SymCirculant& o) const {
        return {alpha + o.alpha, beta + o.beta, gamma + o.gamma};
    }
    SymCirculant operator-(const SymCirculant& o) const {
        return {alpha - o.alpha, beta - o.beta, gamma - o.gamma};
    }
    friend SymCirculant operator*(const Golden& s, const SymCirculant& m) {
        return {s * m.alpha, s * m.beta, s * m.gamma};
    }
    bool operator==(const SymCirculant& o) const {
        return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
    }
};

/// pi = A(2/5, -tau'/5, -tau/5), the orthogonal projector onto physical space E.
SymCirculant projectorPhys();
/// pi' = A(2/5, -tau/5, -tau'/5), projector onto the internal plane E'.
SymCirculant projectorInternal();
/// pi'' = A(1/5, 1/5, 1/5), rank-1 projector onto the diagonal E''.
SymCirculant projectorSym();
/// pi_perp = A(3/5, tau'/5, tau/5) = I - pi.
SymCirculant projectorPerp();

/**
 * The 4x4 matrix family B(alpha,beta,gamma) carrying the projectors p, p' and
 * the scaling matrices in the lattice basis {w1,w2,w3,w4}.
 */
struct GridMatrix {
    Golden alpha, beta, gamma;

    static GridMatrix identity() { return {Golden(1), Golden(1), Golden(0)}; }

    std::array<GVec4, 4> expand() const;
    GVec4 apply(const GVec4& v) const;
    bool operator==(const GridMatrix& o) const {
        return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
    }
};

/// p: matrix of pi restricted to the sum-zero space, in the w-basis.
GridMatrix gridProjectorPhys();
/// p': matrix of pi' in the w-basis; p + p' = B(1,1,0).
GridMatrix gridProjectorInternal();

/**
 * A point of the unit-rescaled lattice Z^5 with its coordinate sum cached;
 * the sum is the coset index n that selects the acceptance window.
 */
class LatticePoint {
public:
    using Coords = std::array<std::int64_t, 5>;

    LatticePoint() : c_{}, n_(0) {}
    explicit LatticePoint(const Coords& c) : c_(c), n_(c[0] + c[1] + c[2] + c[3] + c[4]) {}
    LatticePoint(std::int64_t x1, std::int64_t x2, std::int64_t x3, std::int64_t x4,
                 std::int64_t x5)
        : LatticePoint(Coords{x1, x2, x3, x4, x5}) {}

    static LatticePoint unit(int j);  // epsilon_j, j in 1..5
    static LatticePoint ones() { return LatticePoint(1, 1, 1, 1, 1); }

    const Coords& coords() const { return c_; }
    std::int64_t operator[](int i) const { return c_[i]; }
    std::int64_t n() const { return n_; }

    GVec5 toGolden() const;

    LatticePoint operator+(const LatticePoint& o) const;
    LatticePoint operator-(const LatticePoint& o) const;
    LatticePoint operator-() const;
    friend LatticePoint operator*(std::int64_t s, const LatticePoint& x);

    bool operator==(const LatticePoint& o) const { return c_ == o.c_; }
    auto operator<=>(const LatticePoint& o) const { return c_ <=> o.c_; }

private:
    Coords c_;
    std::int64_t n_;
};

/// Coordinates in the rank-4 lattice basis {w1,w2,w3,w4}, wj = (pi+pi')(eps_j).
using GridCoords = std::array<std::int64_t, 4>;

/// (x1-x5, x2-x5, x3-x5, x4-x5); expanding through w1..w4 gives (pi+pi')x.
GridCoords toGridCoords(const LatticePoint& x);

/// wj as a 5-vector (j in 1..4 gives the lattice basis; j=5 is -(w1+..+w4)).
GVec5 latticeBasisVector(int j);

/// Sum of cj * wj; the 5-vector form of grid coordinates.
GVec5 expandGridCoords(const GridCoords& c);

/// Splits x as n*eps1 + (sum-zero remainder); n is the coset index.
std::pair<std::int64_t, LatticePoint> cosetOf(const LatticePoint& x);

// Generators of the D10 action on 5-tuples:
//   a(x1..x5) = (-x3,-x4,-x5,-x1,-x2),  b(x1..x5) = (x1,x5,x4,x3,x2).
LatticePoint groupA(const LatticePoint& x);
LatticePoint groupB(const LatticePoint& x);
GVec5 groupA(const GVec5& x);
GVec5 groupB(const GVec5& x);

}  // namespace penrose
