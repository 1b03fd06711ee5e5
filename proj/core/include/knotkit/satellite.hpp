#pragma once

#include <array>
#include <vector>

#include "knotkit/diagram.hpp"
#include "knotkit/moves.hpp"
#include "knotkit/structure.hpp"

namespace knotkit {

/// A diagram drawn in the annulus S^2 minus two points, one in `inner_face`
/// and one in `outer_face`. The marked arcs are the two boundary-parallel arcs
/// (one per hole). Free loops are either parallel to the core (essential) or
/// bound a disk.
struct AnnularDiagram {
  Diagram diagram;
  int inner_face = -1;
  int outer_face = -1;
  std::array<int, 2> marked_arcs{0, 0};
  int essential_loops = 0;
  /// Algebraic intersection of each component with a spanning arc.
  std::vector<int> winding;

  bool operator==(const AnnularDiagram&) const = default;
};

/// The annulus around the companion disk: holes in the faces across the two
/// arcs. Throws InvalidDisk.
AnnularDiagram annular_embed(const Diagram& d, const CompanionDisk& disk);
/// k parallel core circles.
AnnularDiagram core_circles(int k);
/// Any diagram placed in a disk of the annulus (both holes in one face).
AnnularDiagram in_disk(const Diagram& d);

/// Minimum number of transverse intersections of a spanning arc with the
/// curve: a breadth-first search in the face-dual graph plus the essential loops.
int wrapping_number(const AnnularDiagram& a);
/// The same count restricted to the edges of one component.
int component_wrapping(const AnnularDiagram& a, int component);
/// Signed count along one dual path: +1 when the arc crosses from the right
/// of an edge to its left.
std::vector<int> winding(const AnnularDiagram& a);
/// At least two components wrap nontrivially.
bool is_reliable(const AnnularDiagram& a);

/// Two parallel copies of every edge; each crossing becomes a 2x2 grid. The
/// left copy (with respect to the orientation) is component 0 when `forward`
/// holds for it, the right copy component 1. The linking number of the two
/// copies equals the writhe.
struct DoubleOptions {
  bool left_forward = true;
  bool right_forward = true;
};
Diagram blackboard_double(const Diagram& d, DoubleOptions opts = {});

struct SatelliteResult {
  Diagram diagram;
  int pattern_crossings = 0;
  int companion_crossings = 0;
  int normalized_companion_crossings = 0;
  int raw_crossings = 0;
  int reduced_crossings = 0;
  /// Linking number of the two boundary curves of the doubled companion.
  int framing_linking = 0;
  int wrapping = 0;
  /// Wrapping measured across the band of the output diagram.
  int wrapping_after = 0;
  bool reliable = false;
  bool reduced = false;
  MoveTrace normalize_trace;
  MoveTrace reduce_trace;
};

struct EntangleOptions {
  bool reduce = true;
};

/// Replaces the two marked arcs of the pattern by a zero-framed band that
/// follows the companion. Throws WrappingTooSmall, NotAKnot.
SatelliteResult entangle(const AnnularDiagram& pattern, const Diagram& companion,
                         EntangleOptions opts = {});

struct CableOptions {
  int clasp_sign = 1;
};

/// Blackboard double of the companion joined by one clasp crossing into a
/// knot. Throws NotAKnot.
SatelliteResult cable(const Diagram& companion, CableOptions opts = {});

bool verify_zero_framing(const SatelliteResult& r);

}  // namespace knotkit
