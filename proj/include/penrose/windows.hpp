#pragma once

#include <array>

#include "penrose/projections.hpp"

namespace penrose {

/**
 * A point of the internal plane E': a sum-zero 5-vector fixed by pi'.
 * Window centers, window vertices and projected lattice points all live here.
 */
class InternalPoint {
public:
    InternalPoint() : v_{} {}

    /// Checked factory; throws std::invalid_argument unless pi'(v) = v.
    static InternalPoint fromVector(const GVec5& v);

    /// Unchecked wrap; caller guarantees v lies in E'.
    static InternalPoint unchecked(GVec5 v) { return InternalPoint(std::move(v), 0); }

    const GVec5& coords() const { return v_; }

    InternalPoint operator+(const InternalPoint& o) const {
        return InternalPoint(v_ + o.v_, 0);
    }
    InternalPoint operator-(const InternalPoint& o) const {
        return InternalPoint(v_ - o.v_, 0);
    }
    InternalPoint operator-() const { return InternalPoint(-v_, 0); }
    friend InternalPoint operator*(const Golden& s, const InternalPoint& p) {
        return InternalPoint(s * p.v_, 0);
    }

    Golden normSquared() const { return penrose::normSquared(v_); }
    bool isZero() const { return isZeroVec(v_); }
    bool operator==(const InternalPoint& o) const { return v_ == o.v_; }
    bool operator!=(const InternalPoint& o) const { return !(v_ == o.v_); }

private:
    InternalPoint(GVec5 v, int) : v_(std::move(v)) {}
    GVec5 v_;
};

/// pi'(x) for a lattice point.
InternalPoint internalProjection(const LatticePoint& x);

/// Vertex j of the base pentagon Omega: pi'(eps_j), j in 1..5.
InternalPoint omegaVertex(int j);

/// Coordinates of an internal point in the golden-rational chart {pi'eps1, pi'eps2}.
struct PlanarCoords {
    Golden alpha, beta;

    bool operator==(const PlanarCoords& o) const { return alpha == o.alpha && beta == o.beta; }
};

PlanarCoords planarCoords(const InternalPoint& z);

/// Orientation sign of the triangle (p,q,r) in the planar chart: +1, -1 or 0.
int orientation(const PlanarCoords& p, const PlanarCoords& q, const PlanarCoords& r);

enum class Region { Inside, Boundary, Outside };

/**
 * A closed pentagonal window sigma*Omega + center in E'.
 *
 * vertex(j) keeps the Omega labelling (sigma*omegaVertex(j) + center); the
 * convex boundary cycle visits labels (1,4,2,5,3), which the constructor
 * recomputes in the chart and validates.
 */
class WindowPentagon {
public:
    WindowPentagon(const Golden& scale, const InternalPoint& center);

    const Golden& scale() const { return scale_; }
    const InternalPoint& center() const { return center_; }
    const InternalPoint& vertex(int j) const;  // j in 1..5, Omega labelling

    const InternalPoint& cycleVertex(int i) const { return cycle5_[i % 5]; }
    const PlanarCoords& cycleChart(int i) const { return cycleChart_[i % 5]; }
    int orientationSign() const { return orient_; }

private:
    Golden scale_;
    InternalPoint center_;
    std::array<InternalPoint, 5> vertices_;    // Omega order
    std::array<InternalPoint, 5> cycle5_;      // convex boundary order
    std::array<PlanarCoords, 5> cycleChart_;
    int orient_;
};

/**
 * The acceptance window K_n for coset n: scale +1, -tau, +tau, -1 for
 * n = 1,2,3,4, centered at v. Other n have empty interior and are rejected.
 */
WindowPentagon cosetWindow(int n, const InternalPoint& v);

/// Exact convex point-in-pentagon classification.
Region classify(const InternalPoint& z, const WindowPentagon& w);

/**
 * Strip-projection membership oracle: decides whether some y in physical
 * space E puts x - y inside the translated unit cube v + [0,1]^5, i.e.
 * whether the 10 half-plane constraints on the two E-coefficients are
 * feasible. Fourier-Motzkin elimination in exact golden arithmetic.
 */
bool stripFeasible(const LatticePoint& x, const InternalPoint& v);

/**
 * Direct inclusion certificate: true iff for every n in 1..4 each vertex of
 * lambdaConj*(K_n - t) + t classifies Inside-or-Boundary in K_n. Convexity
 * reduces the subset test to the vertex images.
 */
bool contractionCertificate(const Golden& lambdaConj, const InternalPoint& t,
                            const InternalPoint& v);

/**
 * Squared radius delta^2 of the translation ball around v inside which the
 * contraction certificate is guaranteed: delta = s_min/|1-lambdaConj| with
 * s_min the minimum boundary clearance of the contracted window vertices.
 * Requires |lambdaConj| < 1 and a strict certificate at t = v; signals
 * non-positive slack otherwise.
 */
Golden deltaLowerBoundSquared(const Golden& lambdaConj, const InternalPoint& v);

/// Squared distance from a strictly interior point to the pentagon boundary.
Golden distanceSquaredToBoundary(const InternalPoint& z, const WindowPentagon& w);

}  // namespace penrose
