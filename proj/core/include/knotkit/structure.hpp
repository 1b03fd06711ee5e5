#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "knotkit/diagram.hpp"

namespace knotkit {

/// A circle meeting the diagram transversely in two points, on edges e1 and
/// e2 (e1 == e2: the circle crosses one edge twice). It runs through the two
/// faces face1, face2 and splits the crossings into side_a and side_b.
struct CutCircle {
  int e1 = 0;
  int e2 = 0;
  int face1 = -1;
  int face2 = -1;
  std::vector<int> side_a;
  std::vector<int> side_b;

  /// Cuts off a crossing-free subarc.
  bool simple() const { return side_a.empty() || side_b.empty(); }
  bool operator==(const CutCircle&) const = default;
};

/// Every 2-point circle up to isotopy in the complement: one per edge pair
/// sharing both adjacent faces, plus one per edge. Throws Disconnected.
std::vector<CutCircle> enumerate_cut_circles(const Diagram& d);

struct PrimeResult {
  bool prime = true;
  std::optional<CutCircle> witness;
};

/// Throws Disconnected.
PrimeResult is_prime_diagram(const Diagram& d);

/// Diagrammatic connected sum, joining edge `ea` of `a` with edge `eb` of `b`.
Diagram connected_sum(const Diagram& a, const Diagram& b, int ea = 0, int eb = 0);

/// Splits along non-simple cut circles until every factor is prime. Factors
/// come out in order of the lowest crossing index they contain.
std::vector<Diagram> split_connected_sum(const Diagram& d);

/// Free loop i of a diagram is addressed as edge -1 - i.
constexpr int free_loop_edge(int i) { return -1 - i; }

/// The disk delta: a corner of face `face` spanned between edge e1 (arc a1)
/// and edge e2 (arc a2). inner_face/outer_face are the faces across e1 and e2
/// from `face`. Crossingless diagrams use face = -1 and free-loop edges.
struct CompanionDisk {
  int crossing = -1;
  int face = -1;
  int e1 = 0;
  int e2 = 0;
  int component1 = 0;
  int component2 = 0;
  int inner_face = -1;
  int outer_face = -1;

  bool operator==(const CompanionDisk&) const = default;
};

/// Validates a hand-picked disk and fills in components and side faces.
/// Throws InvalidDisk.
CompanionDisk make_disk(const Diagram& d, int face, int e1, int e2);

/// Link case: the corner between slots 0 and 1 of the lowest-index crossing
/// between distinct components. Knot case: the first corner whose complementary
/// tangle passes the screen. Throws Disconnected, NoInterComponentCrossing,
/// ScreeningFailed.
CompanionDisk find_companion_disk(const Diagram& d);

/// A 2-string tangle diagram in a disk. Edge labels are arbitrary; every label
/// occurs twice counting the boundary points. boundary[i] is the label at
/// boundary point p(i+1); the points run counterclockwise around the disk and
/// the named corners are p1 = SW, p2 = SE, p3 = NE, p4 = NW. A label occurring
/// twice in `boundary` is a crossingless string.
struct Tangle {
  std::vector<Tuple> crossings;
  std::vector<CrossingTag> tags;
  std::array<int, 4> boundary{};
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  /// Pairs of boundary indices joined by the two strings.
  std::array<std::pair<int, int>, 2> strings() const;
  /// True when the two strings meet at a crossing.
  bool strings_cross() const;
  bool operator==(const Tangle&) const = default;
};

/// Inside: the two arcs of the disk (p1p2 along e1, p3p4 along e2).
/// Outside: everything else. glue(inside, outside) gives back d.
std::pair<Tangle, Tangle> extract_tangle(const Diagram& d, const CompanionDisk& disk);
/// Identifies boundary point i of `a` with boundary point i of `b`.
Diagram glue(const Tangle& a, const Tangle& b);
/// Closures joining p1p2 + p3p4 (numerator) and p2p3 + p4p1 (denominator).
Diagram numerator_closure(const Tangle& t);
Diagram denominator_closure(const Tangle& t);

/// The local-triviality proxy: the strings cross, and neither closure has a
/// non-simple cut circle that cuts off a piece lying inside one string.
bool passes_screen(const Tangle& outside);

}  // namespace knotkit
