#include "penrose/windows.hpp"

#include <optional>
#include <stdexcept>

namespace penrose {

namespace {

const SymCirculant& piInternal() {
    static const SymCirculant m = projectorInternal();
    return m;
}

// Gram data of the chart basis {pi'eps1, pi'eps2}: g11 = g22 = 2/5,
// g12 = -tau/5, det = (3 - tau)/25.
struct ChartGram {
    Golden g11{Rational(2, 5)};
    Golden g12{Rational(0), Rational(-1, 5)};
    Golden det{Rational(3, 25), Rational(-1, 25)};
};

const ChartGram& gram() {
    static const ChartGram g;
    return g;
}

// Convex boundary order of the Omega vertex labels (0-based).
constexpr int kCycle[5] = {0, 3, 1, 4, 2};

}  // namespace

InternalPoint InternalPoint::fromVector(const GVec5& v) {
    if (piInternal().apply(v) != v)
        throw std::invalid_argument("InternalPoint: vector is not fixed by pi'");
    return InternalPoint(v, 0);
}

InternalPoint internalProjection(const LatticePoint& x) {
    return InternalPoint::unchecked(piInternal().apply(x.toGolden()));
}

InternalPoint omegaVertex(int j) {
    if (j < 1 || j > 5) throw std::out_of_range("omegaVertex: j must be in 1..5");
    GVec5 col;
    for (int i = 1; i <= 5; ++i) col[i - 1] = piInternal().entry(i, j);
    return InternalPoint::unchecked(col);
}

PlanarCoords planarCoords(const InternalPoint& z) {
    const ChartGram& g = gram();
    Golden s1 = dot(z.coords(), omegaVertex(1).coords());
    Golden s2 = dot(z.coords(), omegaVertex(2).coords());
    return {(g.g11 * s1 - g.g12 * s2) / g.det, (g.g11 * s2 - g.g12 * s1) / g.det};
}

int orientation(const PlanarCoords& p, const PlanarCoords& q, const PlanarCoords& r) {
    Golden cross = (q.alpha - p.alpha) * (r.beta - p.beta) -
                   (q.beta - p.beta) * (r.alpha - p.alpha);
    return cross.signum();
}

WindowPentagon::WindowPentagon(const Golden& scale, const InternalPoint& center)
    : scale_(scale), center_(center) {
    if (scale.isZero()) throw std::invalid_argument("WindowPentagon: zero scale is degenerate");
    for (int j = 0; j < 5; ++j) vertices_[j] = scale * omegaVertex(j + 1) + center;
    for (int i = 0; i < 5; ++i) {
        cycle5_[i] = vertices_[kCycle[i]];
        cycleChart_[i] = planarCoords(cycle5_[i]);
    }
    orient_ = orientation(cycleChart_[0], cycleChart_[1], cycleChart_[2]);
    for (int i = 0; i < 5; ++i) {
        int s = orientation(cycleChart_[i], cycleChart_[(i + 1) % 5], cycleChart_[(i + 2) % 5]);
        if (s != orient_ || s == 0)
            throw std::logic_error("WindowPentagon: boundary cycle is not convex");
    }
}

const InternalPoint& WindowPentagon::vertex(int j) const {
    if (j < 1 || j > 5) throw std::out_of_range("WindowPentagon::vertex: j must be in 1..5");
    return vertices_[j - 1];
}

WindowPentagon cosetWindow(int n, const InternalPoint& v) {
    switch (n) {
        case 1: return WindowPentagon(Golden(1), v);
        case 2: return WindowPentagon(-Golden::tau(), v);
        case 3: return WindowPentagon(Golden::tau(), v);
        case 4: return WindowPentagon(Golden(-1), v);
        default:
            throw std::out_of_range("cosetWindow: window has empty interior unless n is in 1..4");
    }
}

Region classify(const InternalPoint& z, const WindowPentagon& w) {
    PlanarCoords pz = planarCoords(z);
    bool onEdge = false;
    for (int i = 0; i < 5; ++i) {
        int s = orientation(w.cycleChart(i), w.cycleChart(i + 1), pz);
        if (s == -w.orientationSign()) return Region::Outside;
        if (s == 0) onEdge = true;
    }
    return onEdge ? Region::Boundary : Region::Inside;
}

namespace {

// Constant part of the strip constraint system. For every j the two
// inequalities L_j <= a_j alpha + b_j beta <= U_j divide by a_j != 0, so the
// beta slopes q_j = -b_j/a_j and the pairwise elimination slopes are fixed;
// only the right-hand sides depend on x and v.
struct StripTables {
    Golden invA[5];
    bool aPos[5];
    int pairSign[5][5];   // sign of q[l] - q[u]
    Golden pairInv[5][5]; // 1/(q[l] - q[u]) where nonzero

    StripTables() {
        const SymCirculant pi = projectorPhys();
        Golden q[5];
        for (int j = 0; j < 5; ++j) {
            Golden a = pi.entry(j + 1, 1);
            Golden b = pi.entry(j + 1, 2);
            invA[j] = a.inverse();
            aPos[j] = a.signum() > 0;
            q[j] = -b * invA[j];
        }
        for (int l = 0; l < 5; ++l)
            for (int u = 0; u < 5; ++u) {
                Golden k = q[l] - q[u];
                pairSign[l][u] = k.signum();
                if (pairSign[l][u] != 0) pairInv[l][u] = k.inverse();
            }
    }
};

}  // namespace

bool stripFeasible(const LatticePoint& x, const InternalPoint& v) {
    // Constraints in the unknown E-coefficients (alpha,beta):
    //   L_j <= a_j alpha + b_j beta <= U_j      (j = 1..5)
    // with a_j = (pi eps1)_j, b_j = (pi eps2)_j, U_j = x_j - v_j, L_j = U_j - 1.
    static const StripTables t;
    Golden pUpper[5], pLower[5];
    for (int j = 0; j < 5; ++j) {
        Golden u = Golden(static_cast<long long>(x[j])) - v.coords()[j];
        Golden l = u - Golden(1);
        if (t.aPos[j]) {
            pUpper[j] = u * t.invA[j];
            pLower[j] = l * t.invA[j];
        } else {
            pUpper[j] = l * t.invA[j];
            pLower[j] = u * t.invA[j];
        }
    }

    // Eliminate alpha: every (lower, upper) pair yields a beta constraint
    //   (q[l] - q[u]) * beta <= pUpper[u] - pLower[l].
    std::optional<Golden> betaMin, betaMax;
    for (int l = 0; l < 5; ++l) {
        for (int u = 0; u < 5; ++u) {
            Golden c = pUpper[u] - pLower[l];
            int sk = t.pairSign[l][u];
            if (sk == 0) {
                if (c.signum() < 0) return false;
            } else if (sk > 0) {
                Golden bound = c * t.pairInv[l][u];
                if (!betaMax || bound < *betaMax) betaMax = bound;
            } else {
                Golden bound = c * t.pairInv[l][u];
                if (!betaMin || bound > *betaMin) betaMin = bound;
            }
        }
    }
    if (betaMin && betaMax && *betaMin > *betaMax) return false;
    return true;
}

bool contractionCertificate(const Golden& lambdaConj, const InternalPoint& t,
                            const InternalPoint& v) {
    for (int n = 1; n <= 4; ++n) {
        WindowPentagon w = cosetWindow(n, v);
        for (int j = 1; j <= 5; ++j) {
            InternalPoint image = lambdaConj * (w.vertex(j) - t) + t;
            if (classify(image, w) == Region::Outside) return false;
        }
    }
    return true;
}

Golden distanceSquaredToBoundary(const InternalPoint& z, const WindowPentagon& w) {
    // For an interior point of a convex polygon the boundary distance is the
    // minimum distance to the supporting lines of the edges; squared distance
    // to the line through p with direction d is |z-p|^2 - <z-p,d>^2/|d|^2.
    std::optional<Golden> best;
    for (int i = 0; i < 5; ++i) {
        GVec5 p = w.cycleVertex(i).coords();
        GVec5 d = w.cycleVertex(i + 1).coords() - p;
        GVec5 zp = z.coords() - p;
        Golden proj = dot(zp, d);
        Golden d2 = normSquared(zp) - proj * proj / normSquared(d);
        if (!best || d2 < *best) best = d2;
    }
    return *best;
}

Golden deltaLowerBoundSquared(const Golden& lambdaConj, const InternalPoint& v) {
    if ((lambdaConj * lambdaConj) >= Golden(1))
        throw std::domain_error("deltaLowerBoundSquared: |lambdaConj| must be < 1");
    std::optional<Golden> sMin2;
    for (int n = 1; n <= 4; ++n) {
        WindowPentagon w = cosetWindow(n, v);
        for (int j = 1; j <= 5; ++j) {
            InternalPoint image = lambdaConj * (w.vertex(j) - v) + v;
            if (classify(image, w) != Region::Inside)
                throw std::domain_error("deltaLowerBoundSquared: non-positive contraction slack");
            Golden d2 = distanceSquaredToBoundary(image, w);
            if (!sMin2 || d2 < *sMin2) sMin2 = d2;
        }
    }
    Golden oneMinus = Golden(1) - lambdaConj;
    return *sMin2 / (oneMinus * oneMinus);
}

}  // namespace penrose
