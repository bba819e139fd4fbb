#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "penrose/windows.hpp"

namespace penrose {

enum class FaceKind { Thick, Thin };

/// Tiling edge: points[point] and points[point] + eps_direction are both vertices.
struct Edge {
    std::size_t point;
    int direction;  // 1..5

    bool operator==(const Edge&) const = default;
};

/// Rhombic face spanned by eps_dirA and eps_dirB at points[point]; Thick when
/// the directions subtend 72 degrees (|dirA-dirB| in {1,4}), Thin at 144.
struct Face {
    std::size_t point;
    int dirA, dirB;  // dirA < dirB
    FaceKind kind;

    bool operator==(const Face&) const = default;
};

/**
 * A finite patch of the Penrose vertex pattern: all lattice points x with
 * ||pi x||^2 <= radiusSquared whose internal projection falls strictly inside
 * the coset window K_{n(x)} centered at offset. Edges and faces are derived
 * from the points, never stored independently.
 */
struct Patch {
    InternalPoint offset;
    Golden radiusSquared;
    std::vector<LatticePoint> points;  // lexicographically sorted, unique
    std::vector<Edge> edges;
    std::vector<Face> faces;
};

struct AuditReport {
    std::size_t pointsChecked = 0;
    std::vector<LatticePoint> boundaryHits;  // sorted; empty for a generic offset
};

struct GenerateOptions {
    unsigned threads = 1;
};

/// Raised when a candidate's internal projection lands exactly on a window
/// boundary: the offset is not generic for the requested patch.
class BoundaryHitError : public std::runtime_error {
public:
    BoundaryHitError(InternalPoint offset, LatticePoint hit);

    const InternalPoint& offset() const { return offset_; }
    const LatticePoint& hit() const { return hit_; }

private:
    InternalPoint offset_;
    LatticePoint hit_;
};

/// The default window offset v = (1/4) pi'(eps1); generic at desk scale
/// (auditBoundary reports no hits out to radius^2 = 400).
InternalPoint defaultOffset();

/// Multi-component model-set construction (coset windows K_1..K_4).
Patch generatePatch(const InternalPoint& v, const Golden& radiusSquared,
                    const GenerateOptions& opts = {});

/// Strip-projection construction (cube-slab feasibility); same patch for a
/// generic offset, produced through an independent membership oracle.
Patch generatePatchStrip(const InternalPoint& v, const Golden& radiusSquared,
                         const GenerateOptions& opts = {});

/// Classifies every candidate and reports the exact boundary incidences.
AuditReport auditBoundary(const InternalPoint& v, const Golden& radiusSquared,
                          const GenerateOptions& opts = {});

void deriveEdges(Patch& p);
void deriveFaces(Patch& p);

/// Binary search in the sorted point list.
bool containsPoint(const Patch& p, const LatticePoint& x);

/**
 * Canonical pattern representative: shifts x by multiples of (1,1,1,1,1)
 * (which is invisible to pi) until the coordinate sum lies in {1..4}.
 * Requires sum != 0 mod 5.
 */
LatticePoint canonicalPatternRep(const LatticePoint& x);

/// Deterministic JSON serialization; parsePatchJson inverts it exactly.
std::string exportJson(const Patch& p);
Patch parsePatchJson(std::string_view text);

}  // namespace penrose
