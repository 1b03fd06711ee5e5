#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotkit/diagram.hpp"

namespace knotkit {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, Reduce4to2 };

std::string_view to_string(MoveKind kind);
MoveKind move_kind_from_string(std::string_view name);

/// One rewrite together with the parameters needed to replay it.
///   R1Add:      site = edge (-1: a free loop), a = sign
///   R1Remove:   site = crossing
///   R2Add:      site = face, a = edge pushed across, b = edge crossed, c = 1 if `a` goes over
///   R2Remove:   site = bigon face
///   R3:         site = triangle face, a = rotation (0..2) naming the vertex opposite the moved strand
///   Reduce4to2: site = tag group
struct Move {
  MoveKind kind = MoveKind::R1Add;
  int site = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  int crossings_before = 0;
  int crossings_after = 0;

  bool operator==(const Move&) const = default;
};

struct MoveTrace {
  std::vector<Move> moves;
  int crossings_before = 0;
  int crossings_after = 0;

  bool empty() const { return moves.empty(); }
};

/// Adds a kink on `edge` with crossing sign `sign`. The new crossing is tagged
/// as kink-derived. With `edge == -1` the kink goes on a free loop.
Diagram r1_add(const Diagram& d, int edge, int sign);
std::optional<Diagram> r1_remove(const Diagram& d, int crossing);
/// Pushes a finger of edge `a` across edge `b`; both must lie on `face`.
std::optional<Diagram> r2_add(const Diagram& d, int face, int a, int b, bool a_over);
std::optional<Diagram> r2_remove(const Diagram& d, int face);
std::optional<Diagram> r3(const Diagram& d, int face, int rotation);

/// Zeroes the writhe of a knot diagram with |w| kinks of sign -sign(w), all on
/// edge 0. Throws MultiComponent.
std::pair<Diagram, MoveTrace> normalize_writhe(const Diagram& d);

/// Replaces one doubled kink (tag group) by a full twist of the two strands.
std::optional<Diagram> reduce_group(const Diagram& d, int group);
/// Rewrites every doubled-kink group (4 crossings) to a 2-crossing full twist.
/// Diagrams without tags come back unchanged. Throws UntaggedInput when kink
/// tags are present but were never doubled.
std::pair<Diagram, MoveTrace> reduce_kink_quadruples(const Diagram& d);

/// Greedy R1/R2 removal, bounded by `max_iterations`.
std::pair<Diagram, MoveTrace> simplify(const Diagram& d, int max_iterations = 1000);

/// Applies a recorded move; throws InvalidArgument when it does not apply.
Diagram apply_move(const Diagram& d, const Move& m);
Diagram replay(const Diagram& d, const MoveTrace& trace);

}  // namespace knotkit
