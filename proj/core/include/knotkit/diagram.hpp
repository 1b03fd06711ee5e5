#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotkit {

/// A slot of a crossing. Slots run counterclockwise; slot 0 is the incoming
/// under-strand, so slots 0/2 carry the under-strand and 1/3 the over-strand.
struct Position {
  int crossing = 0;
  int slot = 0;

  auto operator<=>(const Position&) const = default;
  int dart() const { return crossing * 4 + slot; }
};

/// Four edge labels in counterclockwise order starting at the incoming under-edge.
using Tuple = std::array<int, 4>;

/// Bookkeeping attached to crossings produced by the doubling construction.
/// A crossing belongs to group `group` (one group per kink crossing of the
/// doubled companion) and sits at grid cell (gx, gy) in {-1,+1}^2; `south_slot`
/// is the slot that faces the incoming direction of the companion strand.
struct CrossingTag {
  int group = -1;
  std::int8_t gx = 0;
  std::int8_t gy = 0;
  std::int8_t south_slot = 0;
  std::int8_t kink_sign = 0;

  bool tagged() const { return group >= 0; }
  bool operator==(const CrossingTag&) const = default;
};

/// An oriented link diagram on the sphere stored as a planar-diagram code.
///
/// Edge labels are 0-based internally and canonical: the components are
/// ordered by the smallest input label they carried, and each component is
/// labelled consecutively along its orientation starting from that label.
/// Crossing order and tuple rotation are preserved from the input.
/// Crossingless components are kept as a count of free loops.
class Diagram {
 public:
  Diagram() = default;

  /// Validates and canonicalizes. Labels are arbitrary integers, each must
  /// occur exactly twice. Throws Error{MalformedCode | NonPlanar | EmptyDiagram}.
  static Diagram from_tuples(std::span<const Tuple> tuples, int free_loops = 0,
                             std::vector<CrossingTag> tags = {});
  static Diagram unknot(int loops = 1);
  /// Like from_tuples but ignores the orientation carried by the tuples: each
  /// component is oriented so its lowest label leaves its first occurrence,
  /// and tuples whose under-strand then enters at slot 2 are rotated by two
  /// (reported through `flipped` when given).
  static Diagram from_unoriented_tuples(std::span<const Tuple> tuples, int free_loops = 0,
                                        std::vector<CrossingTag> tags = {},
                                        std::vector<char>* flipped = nullptr);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  bool empty() const { return crossings_.empty() && free_loops_ == 0; }

  std::span<const Tuple> crossings() const { return crossings_; }
  const Tuple& crossing(int c) const { return crossings_[c]; }
  int edge_at(Position p) const { return crossings_[p.crossing][p.slot]; }

  Position tail(int edge) const { return ends_[edge][0]; }
  Position head(int edge) const { return ends_[edge][1]; }
  Position other_end(Position p) const;
  /// True when the edge at `p` leaves the crossing there.
  bool is_outgoing(Position p) const { return tail(edge_at(p)) == p; }
  int sign(int c) const { return sign_[c]; }

  /// Components through crossings come first (indices follow edge labels),
  /// free loops take the trailing indices.
  int component_count() const { return crossing_components_ + free_loops_; }
  int crossing_component_count() const { return crossing_components_; }
  int component_of_edge(int edge) const { return component_[edge]; }
  std::vector<int> component_edges(int component) const;
  int next_edge(int edge) const;

  /// Connected pieces of the projection (free loops count as pieces).
  int piece_count() const { return pieces_; }
  int piece_of_crossing(int c) const { return piece_[c]; }
  bool is_connected() const { return pieces_ == 1; }

  const std::vector<CrossingTag>& tags() const { return tags_; }
  bool has_tags() const;
  Diagram without_tags() const;

  bool operator==(const Diagram& other) const {
    return crossings_ == other.crossings_ && free_loops_ == other.free_loops_ &&
           tags_ == other.tags_;
  }

 private:
  std::vector<Tuple> crossings_;
  int free_loops_ = 0;
  std::vector<CrossingTag> tags_;

  std::vector<std::array<Position, 2>> ends_;
  std::vector<int> component_;
  std::vector<int> component_start_;
  std::vector<int> component_size_;
  std::vector<int> piece_;
  std::vector<std::int8_t> sign_;
  int crossing_components_ = 0;
  int pieces_ = 0;
};

/// Parses whitespace-separated crossing tuples `X(a,b,c,d)` (square brackets
/// and a surrounding `PD[...]` are tolerated) plus `O` tokens, each denoting
/// one crossingless component.
Diagram parse_pd(std::string_view text);
/// Canonical text form: one `X(a,b,c,d)` per crossing, 1-based labels,
/// followed by one `O` per free loop.
std::string emit_pd(const Diagram& d);

/// Face structure of the crossing part. Faces are traced keeping the face on
/// the right: from a dart, walk along its edge and take the next slot
/// counterclockwise at the arrival crossing.
struct FaceSet {
  std::vector<std::vector<Position>> faces;
  std::vector<int> face_of_dart;  // indexed by Position::dart()

  int size() const { return static_cast<int>(faces.size()); }
  int face_of(Position p) const { return face_of_dart[p.dart()]; }
};

FaceSet faces(const Diagram& d);
/// Face to the right / left of an edge with respect to its orientation.
int right_face(const Diagram& d, const FaceSet& fs, int edge);
int left_face(const Diagram& d, const FaceSet& fs, int edge);

int writhe(const Diagram& d);

struct LinkingMatrix {
  std::vector<std::vector<int>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int operator()(int i, int j) const { return entries[i][j]; }
};

/// Off-diagonal: linking numbers. Diagonal: self-writhe of each component.
LinkingMatrix linking_matrix(const Diagram& d);

/// Swap over and under at every crossing.
Diagram mirror(const Diagram& d);
/// Reverse the orientation of one component.
Diagram reverse_component(const Diagram& d, int component);

struct KeyOptions {
  bool allow_reflection = false;  // orientation-reversing homeomorphisms of the sphere
  bool allow_mirror = false;      // global over/under swap
  bool allow_reflected_mirror = false;  // reflection and swap together (same link type)
};

/// Isomorphism-invariant code of the unoriented diagram up to orientation-
/// preserving homeomorphisms of the sphere (plus the symmetries enabled in
/// `opts`). Tags are ignored.
std::vector<int> canonical_key(const Diagram& d, KeyOptions opts = {});
bool same_diagram(const Diagram& a, const Diagram& b, KeyOptions opts = {});

}  // namespace knotkit
