#pragma once

#include <optional>
#include <string>

#include "penrose/similarity.hpp"

namespace penrose {

struct Vec2d {
    double x = 0.0;
    double y = 0.0;
};

/**
 * Float render constants. This is the single floating-point boundary of the
 * artifact: every predicate with correctness consequences stays in the exact
 * modules, and these values only ever feed CSV/SVG output.
 */
struct RenderBasis {
    std::array<Vec2d, 5> e;          // unit decagon directions, e1 = (1,0)
    std::array<Vec2d, 5> internalE;  // doubled-angle directions for internal-space plots
    double c, s;                     // cos/sin(pi/5)
    double cPrime, sPrime;           // cos/sin(2pi/5)
    double rho;                      // sqrt(2/5)
    double kappa;                    // sqrt(5/2)

    RenderBasis();
};

const RenderBasis& renderBasis();

/// Rendered vertex sum_j x_j e_j: the kappa-rescaled pi x, so edges have length 1.
Vec2d renderPhysical(const LatticePoint& x);

/// Rendered internal projection of x in the doubled-angle basis.
Vec2d renderInternal(const LatticePoint& x);

/// CSV export, one row "x1,x2,x3,x4,x5,n,px,py" per point; floats are
/// render-only with 12 significant digits.
std::string exportCsv(const Patch& p);

struct SvgOverlay {
    ScalingFactor factor;
    LatticePoint center;
};

/**
 * Deterministic SVG 1.1 figure: thick/thin rhombi in two fixed fills,
 * vertices as dots, and optionally the lambda-scaled image of every edge in
 * a contrasting stroke. 40 pixels per unit edge, centered on the patch
 * bounding box; byte-identical across runs.
 */
std::string emitSvg(const Patch& p, const std::optional<SvgOverlay>& overlay = std::nullopt);

}  // namespace penrose
