#pragma once

// Shared oracles for the geometry tests: exact 2D hull in the planar chart
// and the projected unit-cube slices.

#include <algorithm>
#include <vector>

#include "penrose/windows.hpp"

namespace penrose::testsupport {

inline bool chartLess(const PlanarCoords& a, const PlanarCoords& b) {
    int s = (a.alpha - b.alpha).signum();
    if (s != 0) return s < 0;
    return (a.beta - b.beta).signum() < 0;
}

// Andrew monotone chain with exact orientation predicates.
inline std::vector<PlanarCoords> convexHull(std::vector<PlanarCoords> pts) {
    std::sort(pts.begin(), pts.end(), chartLess);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const PlanarCoords& a, const PlanarCoords& b) { return a == b; }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<PlanarCoords> hull;
    auto build = [&](auto begin, auto end) {
        std::size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 &&
                   orientation(hull[hull.size() - 2], hull.back(), *it) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back();
    };
    build(pts.begin(), pts.end());
    build(pts.rbegin(), pts.rend());
    return hull;
}

inline std::vector<PlanarCoords> chartSorted(std::vector<PlanarCoords> pts) {
    std::sort(pts.begin(), pts.end(), chartLess);
    return pts;
}

// pi' of every 0/1 vector of weight n, in chart coordinates: the vertices of
// the unit-cube slice at coordinate sum n.
inline std::vector<PlanarCoords> sliceProjection(int n) {
    std::vector<PlanarCoords> pts;
    for (int mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) != n) continue;
        LatticePoint::Coords c{};
        for (int j = 0; j < 5; ++j) c[j] = (mask >> j) & 1;
        pts.push_back(planarCoords(internalProjection(LatticePoint(c))));
    }
    return pts;
}

// Vertex-set equality of the slice hull against the coset window at offset 0.
inline bool sliceHullMatchesWindow(int n) {
    std::vector<PlanarCoords> hull = convexHull(sliceProjection(n));
    if (hull.size() != 5) return false;
    WindowPentagon w = cosetWindow(n, InternalPoint());
    std::vector<PlanarCoords> expect;
    for (int j = 1; j <= 5; ++j) expect.push_back(planarCoords(w.vertex(j)));
    auto lhs = chartSorted(hull);
    auto rhs = chartSorted(expect);
    for (int i = 0; i < 5; ++i)
        if (!(lhs[i] == rhs[i])) return false;
    return true;
}

}  // namespace penrose::testsupport
