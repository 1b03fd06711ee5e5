#include "knotkit/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

// Mutable copy of a diagram's code; new labels are allocated past 2n.
struct Draft {
  std::vector<Tuple> tuples;
  std::vector<CrossingTag> tags;
  int free_loops = 0;
  int next_label = 0;

  explicit Draft(const Diagram& d)
      : tuples(d.crossings().begin(), d.crossings().end()),
        tags(d.tags()),
        free_loops(d.free_loops()),
        next_label(d.edge_count()) {
    tags.resize(tuples.size());
  }

  int fresh() { return next_label++; }

  void set(Position p, int label) { tuples[p.crossing][p.slot] = label; }

  void erase(std::vector<int> crossings) {
    std::sort(crossings.begin(), crossings.end(), std::greater<>());
    for (int c : crossings) {
      tuples.erase(tuples.begin() + c);
      tags.erase(tags.begin() + c);
    }
  }

  Diagram build() const {
    const bool any_tag = std::any_of(tags.begin(), tags.end(),
                                     [](const CrossingTag& t) { return t.tagged(); });
    return Diagram::from_tuples(tuples, free_loops,
                                any_tag ? tags : std::vector<CrossingTag>{});
  }
};

int next_group(const Diagram& d) {
  int g = -1;
  for (const auto& t : d.tags()) g = std::max(g, t.group);
  return g + 1;
}

Tuple rotated(const Tuple& geo, int start) {
  return {geo[start % 4], geo[(start + 1) % 4], geo[(start + 2) % 4], geo[(start + 3) % 4]};
}

// Removes crossings and glues edge classes given as label pairs. Classes with
// no remaining occurrence close up into free loops.
std::optional<Diagram> excise(const Draft& base, std::vector<int> removed,
                              const std::vector<std::pair<int, int>>& glue) {
  Draft draft = base;
  std::map<int, int> parent;
  auto find = [&](int x) {
    while (parent.count(x) && parent[x] != x) x = parent[x];
    return x;
  };
  for (auto [a, b] : glue) {
    parent.emplace(a, a);
    parent.emplace(b, b);
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::set<int> removed_set(removed.begin(), removed.end());
  draft.erase(removed);
  std::map<int, int> uses;
  for (auto& t : draft.tuples)
    for (int& x : t) {
      x = find(x);
      ++uses[x];
    }
  std::set<int> roots;
  for (const auto& [x, p] : parent) roots.insert(find(x));
  for (int r : roots) {
    const int u = uses.count(r) ? uses[r] : 0;
    if (u == 0)
      ++draft.free_loops;
    else if (u != 2)
      return std::nullopt;
  }
  try {
    if (draft.tuples.empty() && draft.free_loops == 0) return std::nullopt;
    return draft.build();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::Reduce4to2: return "Reduce4to2";
  }
  return "?";
}

MoveKind move_kind_from_string(std::string_view name) {
  for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove,
                     MoveKind::R3, MoveKind::Reduce4to2})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::InvalidArgument, "unknown move kind '" + std::string(name) + "'");
}

Diagram r1_add(const Diagram& d, int edge, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "kink sign must be +-1");
  CrossingTag tag;
  tag.group = next_group(d);
  tag.kink_sign = static_cast<std::int8_t>(sign);
  Draft draft(d);
  int ea, eb;
  if (edge < 0) {
    if (d.free_loops() == 0) throw Error(ErrorKind::InvalidArgument, "no free loop for a kink");
    --draft.free_loops;
    ea = eb = draft.fresh();
  } else {
    if (edge >= d.edge_count())
      throw Error(ErrorKind::InvalidArgument, "edge " + std::to_string(edge) + " out of range");
    ea = edge;
    eb = draft.fresh();
    draft.set(d.head(edge), eb);
  }
  const int loop = draft.fresh();
  draft.tuples.push_back(sign > 0 ? Tuple{ea, eb, loop, loop} : Tuple{ea, loop, loop, eb});
  draft.tags.push_back(tag);
  return draft.build();
}

std::optional<Diagram> r1_remove(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) return std::nullopt;
  const Tuple& t = d.crossing(crossing);
  for (int s = 0; s < 4; ++s) {
    if (t[s] != t[(s + 1) % 4]) continue;
    const int p = t[(s + 2) % 4], q = t[(s + 3) % 4];
    Draft draft(d);
    return excise(draft, {crossing}, {{p, q}});
  }
  return std::nullopt;
}

std::optional<Diagram> r2_remove(const Diagram& d, int face) {
  const FaceSet fs = faces(d);
  if (face < 0 || face >= fs.size() || fs.faces[face].size() != 2) return std::nullopt;
  const Position d1 = fs.faces[face][0], d2 = fs.faces[face][1];
  const int x1 = d1.crossing, x2 = d2.crossing;
  if (x1 == x2) return std::nullopt;
  const int s1 = d1.slot, s2 = d2.slot;
  // e1 runs x1:s1 -> x2:s2-1 and e2 runs x2:s2 -> x1:s1-1.
  const bool e1_over_at_x1 = s1 % 2 == 1;
  const bool e1_over_at_x2 = ((s2 + 3) % 4) % 2 == 1;
  if (e1_over_at_x1 != e1_over_at_x2) return std::nullopt;
  const Tuple& a = d.crossing(x1);
  const Tuple& b = d.crossing(x2);
  const int p1 = a[(s1 + 2) % 4], q1 = b[(s2 + 1) % 4];
  const int p2 = a[(s1 + 1) % 4], q2 = b[(s2 + 2) % 4];
  Draft draft(d);
  return excise(draft, {x1, x2}, {{p1, q1}, {p2, q2}});
}

std::optional<Diagram> r2_add(const Diagram& d, int face, int a, int b, bool a_over) {
  if (a == b || a < 0 || b < 0 || a >= d.edge_count() || b >= d.edge_count()) return std::nullopt;
  const FaceSet fs = faces(d);
  if (face < 0 || face >= fs.size()) return std::nullopt;
  std::optional<Position> dart_a, dart_b;
  for (const Position& p : fs.faces[face]) {
    if (!dart_a && d.edge_at(p) == a) dart_a = p;
    if (!dart_b && d.edge_at(p) == b) dart_b = p;
  }
  if (!dart_a || !dart_b) return std::nullopt;
  // Picture: a along the bottom of the face, b along the top.
  const bool a_east = *dart_a == d.head(a);
  const bool b_east = *dart_b == d.tail(b);

  Draft draft(d);
  const int a1 = a, a2 = draft.fresh(), a3 = draft.fresh();
  const int b1 = b, b2 = draft.fresh(), b3 = draft.fresh();
  draft.set(a_east ? d.head(a) : d.tail(a), a3);
  draft.set(b_east ? d.head(b) : d.tail(b), b3);

  Tuple x1, x2;
  if (!a_over) {
    x1 = a_east ? Tuple{a1, b2, a2, b1} : Tuple{a2, b1, a1, b2};
    x2 = a_east ? Tuple{a2, b2, a3, b3} : Tuple{a3, b3, a2, b2};
  } else {
    x1 = b_east ? Tuple{b1, a1, b2, a2} : Tuple{b2, a2, b1, a1};
    x2 = b_east ? Tuple{b2, a3, b3, a2} : Tuple{b3, a2, b2, a3};
  }
  draft.tuples.push_back(x1);
  draft.tuples.push_back(x2);
  draft.tags.resize(draft.tuples.size());
  try {
    return draft.build();
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Diagram> r3(const Diagram& d, int face, int rotation) {
  const FaceSet fs = faces(d);
  if (face < 0 || face >= fs.size() || fs.faces[face].size() != 3) return std::nullopt;
  if (rotation < 0 || rotation > 2) return std::nullopt;
  const auto& f = fs.faces[face];
  const Position pa = f[rotation], pc = f[(rotation + 1) % 3], pb = f[(rotation + 2) % 3];
  const int A = pa.crossing, B = pb.crossing, C = pc.crossing;
  if (A == B || B == C || A == C) return std::nullopt;
  const int sA = pa.slot, sB = pb.slot, sC = pc.slot;
  // s3 is the strand along the side C-B; it must pass over both or under both.
  const bool s3_under_at_b = (sB + 1) % 2 == 0;
  const bool s3_under_at_c = sC % 2 == 0;
  if (s3_under_at_b != s3_under_at_c) return std::nullopt;

  auto at = [&](int c, int s) { return d.edge_at({c, s % 4}); };
  const int s1A = at(A, sA + 1), s2A = at(A, sA + 2), s2C = at(C, sC + 1);
  const int s3C = at(C, sC + 2), s3B = at(B, sB + 1), s1B = at(B, sB + 2);
  const bool f1 = d.is_outgoing({A, (sA + 1) % 4});  // s1 flows toward s1A
  const bool f2 = d.is_outgoing({A, (sA + 2) % 4});  // s2 flows toward s2A
  const bool f3 = d.is_outgoing({C, (sC + 2) % 4});  // s3 flows toward s3C
  const bool s1_under_at_a = (sA + 1) % 2 == 0;
  const bool s1_under_at_b = sB % 2 == 0;
  const bool s2_under_at_c = (sC + 1) % 2 == 0;

  Draft draft(d);
  const int m1 = draft.fresh(), m2 = draft.fresh(), m3 = draft.fresh();
  const Tuple ga{m1, m2, s1B, s2C};
  const Tuple gx1{s3C, s1A, m3, m1};
  const Tuple gx2{m3, s2A, s3B, m2};
  const Tuple na = s1_under_at_a ? rotated(ga, f1 ? 2 : 0) : rotated(ga, f2 ? 3 : 1);
  const Tuple nx1 = s1_under_at_b ? rotated(gx1, f1 ? 3 : 1) : rotated(gx1, f3 ? 2 : 0);
  const Tuple nx2 = s2_under_at_c ? rotated(gx2, f2 ? 3 : 1) : rotated(gx2, f3 ? 2 : 0);
  draft.tuples[A] = na;
  draft.tuples[B] = nx1;
  draft.tuples[C] = nx2;
  draft.tags[A] = draft.tags[B] = draft.tags[C] = CrossingTag{};
  try {
    return draft.build();
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::pair<Diagram, MoveTrace> normalize_writhe(const Diagram& d) {
  if (d.component_count() != 1)
    throw Error(ErrorKind::MultiComponent, "writhe normalization needs a knot diagram");
  MoveTrace trace;
  trace.crossings_before = d.crossing_count();
  const int w = writhe(d);
  Diagram out = d;
  const int sign = w > 0 ? -1 : 1;
  for (int i = 0; i < std::abs(w); ++i) {
    Move m{MoveKind::R1Add, 0, sign, 0, 0, out.crossing_count(), 0};
    out = r1_add(out, 0, sign);
    m.crossings_after = out.crossing_count();
    trace.moves.push_back(m);
  }
  trace.crossings_after = out.crossing_count();
  return {out, trace};
}

std::optional<Diagram> reduce_group(const Diagram& d, int group) {
  std::map<std::pair<int, int>, int> cell;
  int kink_sign = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const CrossingTag& t = d.tags()[c];
    if (t.group != group || t.gx == 0) continue;
    cell[{t.gx, t.gy}] = c;
    kink_sign = t.kink_sign;
  }
  if (cell.size() != 4 || kink_sign == 0) return std::nullopt;
  auto slot_edge = [&](int gx, int gy, int offset) {
    const int c = cell.at({gx, gy});
    return Position{c, (d.tags()[c].south_slot + offset) % 4};
  };
  const Position pa_l = slot_edge(-1, -1, 0), pa_r = slot_edge(1, -1, 0);
  const Position pb_l = kink_sign > 0 ? slot_edge(1, 1, 1) : slot_edge(-1, -1, 3);
  const Position pb_r = kink_sign > 0 ? slot_edge(1, -1, 1) : slot_edge(-1, 1, 3);
  const int a_l = d.edge_at(pa_l), a_r = d.edge_at(pa_r);
  const int b_l = d.edge_at(pb_l), b_r = d.edge_at(pb_r);
  const bool fwd_l = !d.is_outgoing(pa_l);
  const bool fwd_r = !d.is_outgoing(pa_r);

  Draft draft(d);
  const int m_l = draft.fresh(), m_r = draft.fresh();
  const Tuple g1{a_l, a_r, m_l, m_r};
  const Tuple g2{m_r, m_l, b_r, b_l};
  Tuple x1, x2;
  if (kink_sign > 0) {
    x1 = rotated(g1, fwd_r ? 1 : 3);
    x2 = rotated(g2, fwd_l ? 1 : 3);
  } else {
    x1 = rotated(g1, fwd_l ? 0 : 2);
    x2 = rotated(g2, fwd_r ? 0 : 2);
  }
  std::vector<int> removed;
  for (const auto& [k, c] : cell) removed.push_back(c);
  const int first = *std::min_element(removed.begin(), removed.end());
  std::vector<int> after_first;
  draft.tuples[first] = x1;
  draft.tags[first] = CrossingTag{};
  for (int c : removed)
    if (c != first) after_first.push_back(c);
  // The second twist crossing takes the slot of the next removed crossing.
  std::sort(after_first.begin(), after_first.end());
  draft.tuples[after_first[0]] = x2;
  draft.tags[after_first[0]] = CrossingTag{};
  draft.erase({after_first[1], after_first[2]});
  try {
    return draft.build();
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::pair<Diagram, MoveTrace> reduce_kink_quadruples(const Diagram& d) {
  MoveTrace trace;
  trace.crossings_before = trace.crossings_after = d.crossing_count();
  std::map<int, int> group_sizes;
  for (const auto& t : d.tags())
    if (t.tagged()) {
      if (t.gx == 0)
        throw Error(ErrorKind::UntaggedInput,
                    "kink tags present but the diagram was never doubled");
      ++group_sizes[t.group];
    }
  Diagram out = d;
  for (const auto& [g, size] : group_sizes) {
    if (size != 4)
      throw Error(ErrorKind::UntaggedInput,
                  "tag group " + std::to_string(g) + " has " + std::to_string(size) + " crossings");
    Move m{MoveKind::Reduce4to2, g, 0, 0, 0, out.crossing_count(), 0};
    auto next = reduce_group(out, g);
    if (!next) throw Error(ErrorKind::UntaggedInput, "tag group " + std::to_string(g) + " is not a doubled kink");
    out = std::move(*next);
    m.crossings_after = out.crossing_count();
    trace.moves.push_back(m);
  }
  trace.crossings_after = out.crossing_count();
  return {out, trace};
}

std::pair<Diagram, MoveTrace> simplify(const Diagram& d, int max_iterations) {
  MoveTrace trace;
  trace.crossings_before = d.crossing_count();
  Diagram cur = d;
  for (int it = 0; it < max_iterations; ++it) {
    std::optional<Move> done;
    for (int c = 0; c < cur.crossing_count() && !done; ++c) {
      if (auto next = r1_remove(cur, c)) {
        done = Move{MoveKind::R1Remove, c, 0, 0, 0, cur.crossing_count(), next->crossing_count()};
        cur = std::move(*next);
      }
    }
    if (!done) {
      const FaceSet fs = faces(cur);
      for (int f = 0; f < fs.size() && !done; ++f) {
        if (fs.faces[f].size() != 2) continue;
        if (auto next = r2_remove(cur, f)) {
          done = Move{MoveKind::R2Remove, f, 0, 0, 0, cur.crossing_count(), next->crossing_count()};
          cur = std::move(*next);
        }
      }
    }
    if (!done) break;
    trace.moves.push_back(*done);
  }
  trace.crossings_after = cur.crossing_count();
  return {cur, trace};
}

Diagram apply_move(const Diagram& d, const Move& m) {
  std::optional<Diagram> out;
  switch (m.kind) {
    case MoveKind::R1Add: out = r1_add(d, m.site, m.a); break;
    case MoveKind::R1Remove: out = r1_remove(d, m.site); break;
    case MoveKind::R2Add: out = r2_add(d, m.site, m.a, m.b, m.c != 0); break;
    case MoveKind::R2Remove: out = r2_remove(d, m.site); break;
    case MoveKind::R3: out = r3(d, m.site, m.a); break;
    case MoveKind::Reduce4to2: out = reduce_group(d, m.site); break;
  }
  if (!out)
    throw Error(ErrorKind::InvalidArgument,
                std::string(to_string(m.kind)) + " does not apply at site " + std::to_string(m.site));
  return *out;
}

Diagram replay(const Diagram& d, const MoveTrace& trace) {
  Diagram cur = d;
  for (const Move& m : trace.moves) cur = apply_move(cur, m);
  return cur;
}

}  // namespace knotkit
