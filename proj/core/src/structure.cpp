#include "knotkit/structure.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

void require_connected(const Diagram& d) {
  if (!d.is_connected())
    throw Error(ErrorKind::Disconnected,
                "diagram has " + std::to_string(d.piece_count()) + " pieces");
}

// Crossings reachable from `start` without using the edges in `cut`.
std::vector<char> reach(const Diagram& d, int start, const std::set<int>& cut) {
  std::vector<char> seen(d.crossing_count(), 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    const int c = q.front();
    q.pop();
    for (int s = 0; s < 4; ++s) {
      const int e = d.edge_at({c, s});
      if (cut.count(e)) continue;
      const int next = d.other_end({c, s}).crossing;
      if (!seen[next]) {
        seen[next] = 1;
        q.push(next);
      }
    }
  }
  return seen;
}

struct Assembled {
  Diagram d;
  std::vector<char> flipped;
};

// Builds a diagram keeping the tuple orientation when it is consistent.
Assembled assemble(const std::vector<Tuple>& tuples, std::vector<CrossingTag> tags,
                   int free_loops) {
  Assembled out;
  out.flipped.assign(tuples.size(), 0);
  try {
    out.d = Diagram::from_tuples(tuples, free_loops, tags);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::MalformedCode) throw;
    out.d = Diagram::from_unoriented_tuples(tuples, free_loops, std::move(tags), &out.flipped);
  }
  return out;
}

// Union-find over arbitrary integer keys; the representative is the smallest key.
class LabelClasses {
 public:
  void join(long long a, long long b) {
    const long long ra = find(a), rb = find(b);
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }
  long long find(long long x) {
    parent_.emplace(x, x);
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  std::vector<long long> keys() const {
    std::vector<long long> out;
    for (const auto& [k, v] : parent_) out.push_back(k);
    return out;
  }

 private:
  std::map<long long, long long> parent_;
};

// Positions in `t.crossings` where each boundary label occurs (if any).
std::array<std::optional<Position>, 4> boundary_positions(const Tangle& t) {
  std::array<std::optional<Position>, 4> out;
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < t.crossing_count() && !out[i]; ++c)
      for (int s = 0; s < 4; ++s)
        if (t.crossings[c][s] == t.boundary[i]) {
          out[i] = Position{c, s};
          break;
        }
  return out;
}

struct Closure {
  Diagram d;
  std::vector<int> closure_edges;
};

Closure close_up(const Tangle& t, const std::array<std::pair<int, int>, 2>& joins) {
  LabelClasses classes;
  for (auto [i, j] : joins) classes.join(t.boundary[i], t.boundary[j]);
  std::vector<Tuple> tuples = t.crossings;
  std::set<long long> used;
  for (auto& tu : tuples)
    for (int& x : tu) {
      x = static_cast<int>(classes.find(x));
      used.insert(x);
    }
  int loops = t.free_loops;
  std::set<long long> roots;
  for (long long k : classes.keys()) roots.insert(classes.find(k));
  for (long long r : roots)
    if (!used.count(r)) ++loops;
  Assembled a = assemble(tuples, t.tags, loops);
  Closure out{a.d, {}};
  const auto pos = boundary_positions(t);
  for (auto [i, j] : joins) {
    const auto& p = pos[i] ? pos[i] : pos[j];
    if (!p) continue;
    const int slot = a.flipped[p->crossing] ? (p->slot + 2) % 4 : p->slot;
    out.closure_edges.push_back(out.d.edge_at({p->crossing, slot}));
  }
  return out;
}

bool closure_ok(const Closure& cl) {
  const Diagram& d = cl.d;
  if (!d.is_connected()) return false;
  if (d.crossing_count() == 0) return true;
  const std::set<int> closing(cl.closure_edges.begin(), cl.closure_edges.end());
  for (const CutCircle& cc : enumerate_cut_circles(d)) {
    if (cc.simple() || closing.count(cc.e1) || closing.count(cc.e2)) continue;
    const std::set<int> a(cc.side_a.begin(), cc.side_a.end());
    int on_a = 0;
    for (int e : cl.closure_edges) on_a += a.count(d.tail(e).crossing) ? 1 : 0;
    const int total = static_cast<int>(cl.closure_edges.size());
    if (on_a == total || on_a == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<CutCircle> enumerate_cut_circles(const Diagram& d) {
  require_connected(d);
  std::vector<CutCircle> out;
  if (d.crossing_count() == 0) {
    out.push_back(CutCircle{free_loop_edge(0), free_loop_edge(0), -1, -1, {}, {}});
    return out;
  }
  const FaceSet fs = faces(d);
  const int m = d.edge_count();
  std::vector<std::pair<int, int>> side_faces(m);
  std::vector<int> all(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) all[c] = c;
  for (int e = 0; e < m; ++e) {
    const int r = right_face(d, fs, e), l = left_face(d, fs, e);
    side_faces[e] = {std::min(r, l), std::max(r, l)};
  }
  for (int e1 = 0; e1 < m; ++e1) {
    out.push_back(CutCircle{e1, e1, side_faces[e1].first, side_faces[e1].second, all, {}});
    for (int e2 = e1 + 1; e2 < m; ++e2) {
      if (side_faces[e1] != side_faces[e2] || side_faces[e1].first == side_faces[e1].second)
        continue;
      const auto seen = reach(d, d.tail(e1).crossing, {e1, e2});
      CutCircle cc{e1, e2, side_faces[e1].first, side_faces[e1].second, {}, {}};
      for (int c = 0; c < d.crossing_count(); ++c) (seen[c] ? cc.side_a : cc.side_b).push_back(c);
      out.push_back(std::move(cc));
    }
  }
  return out;
}

PrimeResult is_prime_diagram(const Diagram& d) {
  PrimeResult r;
  for (auto& cc : enumerate_cut_circles(d)) {
    if (!cc.simple()) {
      r.prime = false;
      r.witness = std::move(cc);
      break;
    }
  }
  return r;
}

Diagram connected_sum(const Diagram& a, const Diagram& b, int ea, int eb) {
  if (a.crossing_count() == 0) {
    if (b.crossing_count() == 0) return Diagram::unknot(a.free_loops() + b.free_loops() - 1);
    return Diagram::from_tuples(b.crossings(), b.free_loops() + a.free_loops() - 1);
  }
  if (b.crossing_count() == 0)
    return Diagram::from_tuples(a.crossings(), a.free_loops() + b.free_loops() - 1);
  if (ea < 0 || ea >= a.edge_count() || eb < 0 || eb >= b.edge_count())
    throw Error(ErrorKind::InvalidArgument, "connected sum edge out of range");
  std::vector<Tuple> tuples(a.crossings().begin(), a.crossings().end());
  const int shift = a.edge_count();
  for (Tuple t : b.crossings()) {
    for (int& x : t) x += shift;
    tuples.push_back(t);
  }
  const int l1 = shift + b.edge_count(), l2 = l1 + 1;
  auto set = [&](Position p, int offset, int label) {
    tuples[p.crossing + offset][p.slot] = label;
  };
  set(a.tail(ea), 0, l1);
  set(b.head(eb), a.crossing_count(), l1);
  set(b.tail(eb), a.crossing_count(), l2);
  set(a.head(ea), 0, l2);
  return Diagram::from_tuples(tuples, a.free_loops() + b.free_loops());
}

std::vector<Diagram> split_connected_sum(const Diagram& d) {
  const PrimeResult pr = is_prime_diagram(d);
  if (pr.prime) return {d};
  const CutCircle& cc = *pr.witness;
  const bool a_first = std::find(cc.side_a.begin(), cc.side_a.end(), 0) != cc.side_a.end();
  const std::vector<int>& first = a_first ? cc.side_a : cc.side_b;
  const std::vector<int>& second = a_first ? cc.side_b : cc.side_a;
  std::vector<Diagram> out;
  int loops = d.free_loops();
  for (const auto* side : {&first, &second}) {
    std::vector<Tuple> tuples;
    for (int c : *side) {
      Tuple t = d.crossing(c);
      for (int& x : t)
        if (x == cc.e2) x = cc.e1;
      tuples.push_back(t);
    }
    auto parts = split_connected_sum(Diagram::from_tuples(tuples, loops));
    loops = 0;
    for (auto& p : parts) out.push_back(std::move(p));
  }
  return out;
}

CompanionDisk make_disk(const Diagram& d, int face, int e1, int e2) {
  CompanionDisk disk;
  disk.face = face;
  disk.e1 = e1;
  disk.e2 = e2;
  if (e1 == e2) throw Error(ErrorKind::InvalidDisk, "the two arcs must lie on distinct edges");
  if (d.crossing_count() == 0) {
    const int k = d.free_loops();
    auto loop_index = [&](int e) {
      const int i = -1 - e;
      if (e >= 0 || i >= k)
        throw Error(ErrorKind::InvalidDisk, "crossingless diagram: arcs must be free loops");
      return i;
    };
    disk.component1 = loop_index(e1);
    disk.component2 = loop_index(e2);
    disk.face = -1;
    return disk;
  }
  if (e1 < 0 || e2 < 0 || e1 >= d.edge_count() || e2 >= d.edge_count())
    throw Error(ErrorKind::InvalidDisk, "arc edge out of range");
  const FaceSet fs = faces(d);
  if (face < 0 || face >= fs.size()) throw Error(ErrorKind::InvalidDisk, "face out of range");
  auto across = [&](int e) {
    const int r = right_face(d, fs, e), l = left_face(d, fs, e);
    if (r != face && l != face)
      throw Error(ErrorKind::InvalidDisk,
                  "edge " + std::to_string(e) + " is not on face " + std::to_string(face));
    if (r == l) throw Error(ErrorKind::InvalidDisk, "edge has the same face on both sides");
    return r == face ? l : r;
  };
  disk.inner_face = across(e1);
  disk.outer_face = across(e2);
  disk.component1 = d.component_of_edge(e1);
  disk.component2 = d.component_of_edge(e2);
  // Record the crossing when the two arcs meet at a corner of the face.
  const auto& walk = fs.faces[face];
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Position next = walk[(i + 1) % walk.size()];
    if (d.edge_at(walk[i]) == e1 && d.edge_at(next) == e2) disk.crossing = next.crossing;
  }
  return disk;
}

CompanionDisk find_companion_disk(const Diagram& d) {
  require_connected(d);
  if (d.crossing_count() == 0)
    throw Error(ErrorKind::InvalidDisk, "crossingless diagram: pick the disk explicitly");
  const FaceSet fs = faces(d);
  if (d.component_count() >= 2) {
    for (int c = 0; c < d.crossing_count(); ++c) {
      const Tuple& t = d.crossing(c);
      if (d.component_of_edge(t[0]) == d.component_of_edge(t[1])) continue;
      CompanionDisk disk = make_disk(d, fs.face_of({c, 1}), t[0], t[1]);
      disk.crossing = c;
      return disk;
    }
    throw Error(ErrorKind::NoInterComponentCrossing,
                "connected multi-component diagram without a crossing between components");
  }
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Tuple& t = d.crossing(c);
    for (int s = 0; s < 4; ++s) {
      const int e1 = t[s], e2 = t[(s + 1) % 4];
      if (e1 == e2) continue;
      CompanionDisk disk;
      try {
        disk = make_disk(d, fs.face_of({c, (s + 1) % 4}), e1, e2);
      } catch (const Error&) {
        continue;
      }
      disk.crossing = c;
      if (passes_screen(extract_tangle(d, disk).second)) return disk;
    }
  }
  throw Error(ErrorKind::ScreeningFailed, "no corner disk has a complementary tangle passing the screen");
}

namespace {

// Follows the string starting at boundary point i; returns the boundary
// point where it ends and marks the darts it passes with `mark`.
int walk_string(const Tangle& t, int i, std::vector<int>* darts, int mark) {
  std::map<int, std::vector<Position>> occ;
  for (int c = 0; c < t.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) occ[t.crossings[c][s]].push_back({c, s});
  int label = t.boundary[i];
  std::optional<Position> came;
  for (int step = 0; step <= 2 * t.crossing_count() + 1; ++step) {
    for (int j = 0; j < 4; ++j)
      if ((came || j != i) && t.boundary[j] == label) return j;
    std::optional<Position> p;
    for (const Position& q : occ[label])
      if (!came || q != *came) p = q;
    if (!p) break;
    const Position q{p->crossing, (p->slot + 2) % 4};
    if (darts) (*darts)[p->dart()] = (*darts)[q.dart()] = mark;
    came = q;
    label = t.crossings[q.crossing][q.slot];
  }
  throw Error(ErrorKind::InvalidArgument, "tangle string does not end on the boundary");
}

}  // namespace

std::array<std::pair<int, int>, 2> Tangle::strings() const {
  const int j = walk_string(*this, 0, nullptr, 0);
  int k = 1;
  while (k == j) ++k;
  return {std::pair{0, j}, std::pair{k, walk_string(*this, k, nullptr, 0)}};
}

bool Tangle::strings_cross() const {
  std::vector<int> strand_of(4 * crossing_count(), -1);
  const auto ss = strings();
  walk_string(*this, ss[0].first, &strand_of, 0);
  walk_string(*this, ss[1].first, &strand_of, 1);
  for (int c = 0; c < crossing_count(); ++c) {
    const int u = strand_of[c * 4], o = strand_of[c * 4 + 1];
    if (u >= 0 && o >= 0 && u != o) return true;
  }
  return false;
}

std::pair<Tangle, Tangle> extract_tangle(const Diagram& d, const CompanionDisk& disk) {
  Tangle inside, outside;
  if (d.crossing_count() == 0) {
    make_disk(d, disk.face, disk.e1, disk.e2);
    inside.boundary = {0, 0, 1, 1};
    outside.boundary = {0, 0, 1, 1};
    outside.free_loops = d.free_loops() - 2;
    return {inside, outside};
  }
  const CompanionDisk checked = make_disk(d, disk.face, disk.e1, disk.e2);
  const FaceSet fs = faces(d);
  outside.crossings.assign(d.crossings().begin(), d.crossings().end());
  outside.tags = d.tags();
  outside.free_loops = d.free_loops();
  int fresh = d.edge_count();
  std::array<int, 4> labels{};
  for (int k = 0; k < 2; ++k) {
    const int e = k == 0 ? checked.e1 : checked.e2;
    // The face walk passes e from crossing u to crossing v.
    const Position dart = fs.face_of(d.tail(e)) == checked.face ? d.tail(e) : d.head(e);
    const bool along = dart == d.tail(e);
    const int split = fresh++;
    outside.crossings[d.head(e).crossing][d.head(e).slot] = split;
    const int at_tail = e, at_head = split;
    const int u_label = along ? at_tail : at_head;
    const int v_label = along ? at_head : at_tail;
    // p1 = e1 near u1, p2 = e1 near v1, p3 = e2 near u2, p4 = e2 near v2.
    labels[2 * k] = u_label;
    labels[2 * k + 1] = v_label;
  }
  outside.boundary = labels;
  inside.boundary = {checked.e1, checked.e1, checked.e2, checked.e2};
  return {inside, outside};
}

Diagram glue(const Tangle& a, const Tangle& b) {
  // Keys: a-labels as 2x, b-labels as 2x+1. A class is named by its smallest
  // raw label; clashes between classes get fresh labels.
  LabelClasses classes;
  auto key = [](int label, int side) { return 2LL * label + side; };
  for (int i = 0; i < 4; ++i) classes.join(key(a.boundary[i], 0), key(b.boundary[i], 1));
  std::vector<std::pair<long long, int>> keyed;
  for (const Tangle* t : {&a, &b}) {
    const int side = t == &a ? 0 : 1;
    for (const auto& tu : t->crossings)
      for (int x : tu) keyed.push_back({key(x, side), 0});
    for (int x : t->boundary) keyed.push_back({key(x, side), 0});
  }
  std::map<long long, int> min_raw;
  int top = 0;
  for (auto& [k, unused] : keyed) {
    const long long r = classes.find(k);
    const int raw = static_cast<int>(k >> 1);
    auto [it, inserted] = min_raw.emplace(r, raw);
    if (!inserted) it->second = std::min(it->second, raw);
    top = std::max(top, raw);
  }
  std::map<int, long long> owner;
  std::map<long long, int> final_label;
  for (const auto& [r, raw] : min_raw) {
    auto [it, inserted] = owner.emplace(raw, r);
    final_label[r] = inserted ? raw : ++top;
  }
  std::vector<Tuple> tuples;
  std::vector<CrossingTag> tags;
  std::set<int> used;
  for (const Tangle* t : {&a, &b}) {
    const int side = t == &a ? 0 : 1;
    for (Tuple tu : t->crossings) {
      for (int& x : tu) {
        x = final_label.at(classes.find(key(x, side)));
        used.insert(x);
      }
      tuples.push_back(tu);
    }
    auto tt = t->tags;
    tt.resize(t->crossings.size());
    tags.insert(tags.end(), tt.begin(), tt.end());
  }
  int loops = a.free_loops + b.free_loops;
  for (const auto& [r, label] : final_label)
    if (!used.count(label)) ++loops;
  const bool any_tag = std::any_of(tags.begin(), tags.end(),
                                   [](const CrossingTag& t) { return t.tagged(); });
  return assemble(tuples, any_tag ? tags : std::vector<CrossingTag>{}, loops).d;
}

Diagram numerator_closure(const Tangle& t) {
  return close_up(t, {std::pair{0, 1}, std::pair{2, 3}}).d;
}

Diagram denominator_closure(const Tangle& t) {
  return close_up(t, {std::pair{1, 2}, std::pair{3, 0}}).d;
}

bool passes_screen(const Tangle& outside) {
  if (!outside.strings_cross()) return false;
  for (const auto& joins : {std::array{std::pair{0, 1}, std::pair{2, 3}},
                            std::array{std::pair{1, 2}, std::pair{3, 0}}}) {
    if (!closure_ok(close_up(outside, joins))) return false;
  }
  return true;
}

}  // namespace knotkit
