#include "knotkit/satellite.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

constexpr int kLeft = 0;
constexpr int kRight = 1;

struct DoubleBuild {
  std::vector<Tuple> tuples;
  std::vector<CrossingTag> tags;
  // Where copy k of edge e meets its head / tail crossing group.
  std::vector<std::array<Position, 2>> head_occ, tail_occ;
};

// Labels: copy k of edge e is offset + 2e + k; the four inner edges of the
// grid of crossing c follow from offset + 4n + 4c. Tuple indices start at
// tuple_offset.
DoubleBuild build_double(const Diagram& d, std::array<bool, 2> forward, int offset,
                         int tuple_offset) {
  const int n = d.crossing_count();
  DoubleBuild b;
  b.head_occ.resize(d.edge_count());
  b.tail_occ.resize(d.edge_count());
  auto ext = [&](int e, int copy) { return offset + 2 * e + copy; };
  const std::array<std::pair<int, int>, 4> cells{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
  for (int c = 0; c < n; ++c) {
    const Tuple& t = d.crossing(c);
    const int sign = d.sign(c);
    const int base = offset + 4 * n + 4 * c;
    auto mid_v = [&](int x) { return base + (x < 0 ? 0 : 1); };
    auto mid_h = [&](int y) { return base + (y < 0 ? 2 : 3); };
    // The over strand runs west to east at a positive crossing.
    auto copy_h = [&](int y) { return (sign > 0) == (y > 0) ? kLeft : kRight; };
    auto copy_v = [&](int x) { return x < 0 ? kLeft : kRight; };
    for (auto [x, y] : cells) {
      std::array<int, 4> geo{};
      std::array<int, 4> src{-1, -1, -1, -1};  // companion slot feeding this geometric side
      std::array<int, 4> copy{};
      geo[0] = y < 0 ? ext(t[0], copy_v(x)) : mid_v(x);
      geo[1] = x > 0 ? ext(t[1], copy_h(y)) : mid_h(y);
      geo[2] = y > 0 ? ext(t[2], copy_v(x)) : mid_v(x);
      geo[3] = x < 0 ? ext(t[3], copy_h(y)) : mid_h(y);
      if (y < 0) src[0] = 0;
      if (x > 0) src[1] = 1;
      if (y > 0) src[2] = 2;
      if (x < 0) src[3] = 3;
      copy = {copy_v(x), copy_h(y), copy_v(x), copy_h(y)};
      const int rot = forward[copy_v(x)] ? 0 : 2;
      Tuple tu;
      const int index = tuple_offset + static_cast<int>(b.tuples.size());
      for (int i = 0; i < 4; ++i) {
        const int g = (i + rot) % 4;
        tu[i] = geo[g];
        if (src[g] < 0) continue;
        const Position kp{c, src[g]};
        const int e = t[src[g]];
        if (d.head(e) == kp) b.head_occ[e][copy[g]] = {index, i};
        if (d.tail(e) == kp) b.tail_occ[e][copy[g]] = {index, i};
      }
      b.tuples.push_back(tu);
      CrossingTag tag;
      if (d.tags()[c].tagged()) {
        tag.group = d.tags()[c].group;
        tag.gx = static_cast<std::int8_t>(x);
        tag.gy = static_cast<std::int8_t>(y);
        tag.south_slot = static_cast<std::int8_t>(rot);
        tag.kink_sign = static_cast<std::int8_t>(sign);
      }
      b.tags.push_back(tag);
    }
  }
  return b;
}

bool any_tagged(const std::vector<CrossingTag>& tags) {
  return std::any_of(tags.begin(), tags.end(), [](const CrossingTag& t) { return t.tagged(); });
}

void require_single_piece(const AnnularDiagram& a) {
  const Diagram& d = a.diagram;
  if (d.crossing_count() > 0 && d.piece_count() - d.free_loops() != 1)
    throw Error(ErrorKind::InvalidArgument, "annular diagram: crossings must form one piece");
}

// 0-1 BFS over faces; edges of `component` (or all edges when -1) cost 1.
// Returns distances and, per face, the edge used to reach it.
std::pair<std::vector<int>, std::vector<int>> dual_search(const AnnularDiagram& a,
                                                          const FaceSet& fs, int component) {
  const Diagram& d = a.diagram;
  std::vector<std::vector<std::pair<int, int>>> adj(fs.size());
  for (int e = 0; e < d.edge_count(); ++e) {
    const int r = right_face(d, fs, e), l = left_face(d, fs, e);
    adj[r].push_back({l, e});
    adj[l].push_back({r, e});
  }
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(fs.size(), inf), via(fs.size(), -1);
  std::deque<int> q;
  dist[a.inner_face] = 0;
  q.push_back(a.inner_face);
  while (!q.empty()) {
    const int f = q.front();
    q.pop_front();
    for (auto [g, e] : adj[f]) {
      const int w = (component < 0 || d.component_of_edge(e) == component) ? 1 : 0;
      if (dist[f] + w < dist[g]) {
        dist[g] = dist[f] + w;
        via[g] = e;
        if (w == 0)
          q.push_front(g);
        else
          q.push_back(g);
      }
    }
  }
  return {dist, via};
}

int essential_in(const AnnularDiagram& a, int component) {
  const int first_loop = a.diagram.crossing_component_count();
  if (component < 0) return a.essential_loops;
  return (component >= first_loop && component < first_loop + a.essential_loops) ? 1 : 0;
}

AnnularDiagram finish(AnnularDiagram a) {
  a.winding = winding(a);
  return a;
}

}  // namespace

AnnularDiagram annular_embed(const Diagram& d, const CompanionDisk& disk) {
  AnnularDiagram a;
  a.diagram = d;
  if (!d.is_connected() && d.crossing_count() > 0)
    throw Error(ErrorKind::InvalidDisk, "diagram must be connected");
  const CompanionDisk checked = make_disk(d, disk.face, disk.e1, disk.e2);
  a.marked_arcs = {checked.e1, checked.e2};
  if (d.crossing_count() == 0) {
    a.essential_loops = 2;
    a.marked_arcs = {free_loop_edge(0), free_loop_edge(1)};
  } else {
    a.inner_face = checked.inner_face;
    a.outer_face = checked.outer_face;
  }
  return finish(a);
}

AnnularDiagram core_circles(int k) {
  AnnularDiagram a;
  a.diagram = Diagram::unknot(k);
  a.essential_loops = k;
  a.marked_arcs = {free_loop_edge(0), free_loop_edge(k > 1 ? 1 : 0)};
  return finish(a);
}

AnnularDiagram in_disk(const Diagram& d) {
  AnnularDiagram a;
  a.diagram = d;
  if (d.crossing_count() > 0) a.inner_face = a.outer_face = 0;
  a.marked_arcs = {-1, -1};
  return finish(a);
}

int wrapping_number(const AnnularDiagram& a) { return component_wrapping(a, -1); }

int component_wrapping(const AnnularDiagram& a, int component) {
  int total = essential_in(a, component);
  if (a.diagram.crossing_count() == 0) return total;
  require_single_piece(a);
  const FaceSet fs = faces(a.diagram);
  const auto [dist, via] = dual_search(a, fs, component);
  return total + dist[a.outer_face];
}

std::vector<int> winding(const AnnularDiagram& a) {
  const Diagram& d = a.diagram;
  std::vector<int> out(d.component_count(), 0);
  const int first_loop = d.crossing_component_count();
  for (int i = 0; i < a.essential_loops && first_loop + i < d.component_count(); ++i)
    out[first_loop + i] = 1;
  if (d.crossing_count() == 0) return out;
  require_single_piece(a);
  const FaceSet fs = faces(d);
  const auto [dist, via] = dual_search(a, fs, -1);
  int f = a.outer_face;
  while (f != a.inner_face) {
    const int e = via[f];
    const int r = right_face(d, fs, e), l = left_face(d, fs, e);
    const int from = r == f ? l : r;
    out[d.component_of_edge(e)] += (from == r && f == l) ? 1 : -1;
    f = from;
  }
  return out;
}

bool is_reliable(const AnnularDiagram& a) {
  int count = 0;
  for (int c = 0; c < a.diagram.component_count(); ++c)
    if (component_wrapping(a, c) >= 1) ++count;
  return count >= 2;
}

Diagram blackboard_double(const Diagram& d, DoubleOptions opts) {
  if (d.crossing_count() == 0) return Diagram::unknot(2 * d.free_loops());
  DoubleBuild b = build_double(d, {opts.left_forward, opts.right_forward}, 0, 0);
  return Diagram::from_tuples(b.tuples, 2 * d.free_loops(),
                              any_tagged(b.tags) ? b.tags : std::vector<CrossingTag>{});
}

SatelliteResult entangle(const AnnularDiagram& pattern, const Diagram& companion,
                         EntangleOptions opts) {
  if (companion.component_count() != 1)
    throw Error(ErrorKind::NotAKnot, "companion has " +
                                         std::to_string(companion.component_count()) +
                                         " components");
  SatelliteResult r;
  r.wrapping = wrapping_number(pattern);
  if (r.wrapping < 2)
    throw Error(ErrorKind::WrappingTooSmall,
                "pattern wrapping number " + std::to_string(r.wrapping) + " < 2");
  const Diagram& p = pattern.diagram;
  r.pattern_crossings = p.crossing_count();
  r.companion_crossings = companion.crossing_count();
  r.reliable = is_reliable(pattern);
  if (companion.crossing_count() == 0) {
    r.diagram = p;
    r.raw_crossings = r.reduced_crossings = p.crossing_count();
    r.wrapping_after = r.wrapping;
    return r;
  }

  auto [dk, trace] = normalize_writhe(companion);
  r.normalize_trace = trace;
  r.normalized_companion_crossings = dk.crossing_count();
  {
    const LinkingMatrix lk = linking_matrix(blackboard_double(dk));
    r.framing_linking = lk(0, 1);
  }

  const auto [e1, e2] = pattern.marked_arcs;
  const bool loops = e1 < 0 && e2 < 0;
  if ((e1 < 0) != (e2 < 0))
    throw Error(ErrorKind::InvalidDisk, "marked arcs must both be edges or both free loops");
  std::array<int, 2> arc_copy{kLeft, kRight};
  std::array<bool, 2> copy_forward{true, true};
  if (!loops) {
    const FaceSet fs = faces(p);
    const bool f_left_of_e1 = left_face(p, fs, e1) != pattern.inner_face;
    const bool f_left_of_e2 = left_face(p, fs, e2) != pattern.outer_face;
    arc_copy = f_left_of_e1 ? std::array{kRight, kLeft} : std::array{kLeft, kRight};
    copy_forward[arc_copy[0]] = true;
    copy_forward[arc_copy[1]] = f_left_of_e1 != f_left_of_e2;
  }

  const int offset = p.edge_count();
  DoubleBuild b = build_double(dk, copy_forward, offset, p.crossing_count());
  std::vector<Tuple> tuples(p.crossings().begin(), p.crossings().end());
  int next = offset + 8 * dk.crossing_count();
  auto set = [&](Position pos, int label) {
    if (pos.crossing < p.crossing_count())
      tuples[pos.crossing][pos.slot] = label;
    else
      b.tuples[pos.crossing - p.crossing_count()][pos.slot] = label;
  };
  int loops_used = 0;
  for (int k = 0; k < 2; ++k) {
    const int e = k == 0 ? e1 : e2;
    const int copy = arc_copy[k];
    if (loops) {
      ++loops_used;
      continue;
    }
    const Position start = b.head_occ[0][copy];
    const Position end = b.tail_occ[0][copy];
    const int x = next++;
    set(p.tail(e), x);
    if (copy_forward[copy]) {
      set(start, x);
      set(end, e);
    } else {
      set(end, x);
      set(start, e);
    }
  }
  std::vector<CrossingTag> tags(p.crossing_count());
  tags.insert(tags.end(), b.tags.begin(), b.tags.end());
  tuples.insert(tuples.end(), b.tuples.begin(), b.tuples.end());
  Diagram raw = Diagram::from_tuples(tuples, p.free_loops() - loops_used,
                                     any_tagged(tags) ? tags : std::vector<CrossingTag>{});
  r.raw_crossings = raw.crossing_count();

  // Re-measure across the band at companion edge 1.
  {
    AnnularDiagram band;
    band.diagram = raw;
    const FaceSet fs = faces(raw);
    const int el = raw.edge_at(b.tail_occ[1][kLeft]);
    const int er = raw.edge_at(b.tail_occ[1][kRight]);
    band.inner_face = copy_forward[kLeft] ? left_face(raw, fs, el) : right_face(raw, fs, el);
    band.outer_face = copy_forward[kRight] ? right_face(raw, fs, er) : left_face(raw, fs, er);
    band.essential_loops = 0;
    r.wrapping_after = raw.piece_count() - raw.free_loops() == 1 ? wrapping_number(band) : -1;
  }

  if (opts.reduce) {
    auto [reduced, rtrace] = reduce_kink_quadruples(raw);
    r.diagram = reduced.without_tags();
    r.reduce_trace = rtrace;
    r.reduced = true;
  } else {
    r.diagram = raw;
  }
  r.reduced_crossings = r.diagram.crossing_count();
  return r;
}

SatelliteResult cable(const Diagram& companion, CableOptions opts) {
  if (companion.component_count() != 1)
    throw Error(ErrorKind::NotAKnot, "companion has " +
                                         std::to_string(companion.component_count()) +
                                         " components");
  if (opts.clasp_sign != 1 && opts.clasp_sign != -1)
    throw Error(ErrorKind::InvalidArgument, "clasp sign must be +-1");
  SatelliteResult r;
  r.companion_crossings = r.normalized_companion_crossings = companion.crossing_count();
  r.framing_linking = writhe(companion);
  r.wrapping = r.wrapping_after = 2;
  const Diagram plain = companion.without_tags();
  DoubleBuild b = build_double(plain, {true, true}, 0, 0);
  int l_t = 2 * 0 + kLeft, r_t = 2 * 0 + kRight;
  int l_h = l_t, r_h = r_t;
  if (plain.crossing_count() > 0) {
    l_h = 8 * plain.crossing_count();
    r_h = l_h + 1;
    b.tuples[b.head_occ[0][kLeft].crossing][b.head_occ[0][kLeft].slot] = l_h;
    b.tuples[b.head_occ[0][kRight].crossing][b.head_occ[0][kRight].slot] = r_h;
  }
  // Corners: SW = L_t, SE = R_t, NE = R_h, NW = L_h.
  b.tuples.push_back(opts.clasp_sign > 0 ? Tuple{r_t, r_h, l_h, l_t} : Tuple{l_t, r_t, r_h, l_h});
  r.diagram = Diagram::from_tuples(b.tuples, 0);
  r.raw_crossings = r.reduced_crossings = r.diagram.crossing_count();
  return r;
}

bool verify_zero_framing(const SatelliteResult& r) { return r.framing_linking == 0; }

}  // namespace knotkit
