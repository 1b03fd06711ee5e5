#include "knotkit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "knotkit/error.hpp"

namespace knotkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::UntaggedInput: return "UntaggedInput";
    case ErrorKind::InvalidDisk: return "InvalidDisk";
    case ErrorKind::NoInterComponentCrossing: return "NoInterComponentCrossing";
    case ErrorKind::ScreeningFailed: return "ScreeningFailed";
    case ErrorKind::WrappingTooSmall: return "WrappingTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::XOutOfRange: return "XOutOfRange";
    case ErrorKind::TableMismatch: return "TableMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

Position opposite(Position p) { return {p.crossing, (p.slot + 2) % 4}; }

}  // namespace

Diagram Diagram::unknot(int loops) {
  if (loops < 1) throw Error(ErrorKind::EmptyDiagram, "unknot needs at least one loop");
  Diagram d;
  d.free_loops_ = loops;
  d.pieces_ = loops;
  return d;
}

Diagram Diagram::from_tuples(std::span<const Tuple> tuples, int free_loops,
                             std::vector<CrossingTag> tags) {
  if (free_loops < 0) throw Error(ErrorKind::InvalidArgument, "negative free loop count");
  if (tuples.empty() && free_loops == 0) throw Error(ErrorKind::EmptyDiagram, "no crossings");
  if (tuples.empty()) return unknot(free_loops);

  const int n = static_cast<int>(tuples.size());
  if (!tags.empty() && static_cast<int>(tags.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "tag count does not match crossing count");

  std::map<int, std::vector<Position>> occurrences;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) occurrences[tuples[c][s]].push_back({c, s});
  for (const auto& [label, ps] : occurrences) {
    if (ps.size() != 2)
      throw Error(ErrorKind::MalformedCode, "edge label " + std::to_string(label) + " occurs " +
                                                std::to_string(ps.size()) + " times");
  }
  auto label_at = [&](Position p) { return tuples[p.crossing][p.slot]; };
  auto other = [&](Position p) {
    const auto& ps = occurrences.at(label_at(p));
    return ps[0] == p ? ps[1] : ps[0];
  };
  auto walk = [&](Position start) {
    std::vector<Position> entries;
    Position p = start;
    do {
      entries.push_back(p);
      p = other(opposite(p));
    } while (p != start);
    return entries;
  };

  struct Cycle {
    int min_label;
    std::vector<int> labels;            // in orientation order starting at min_label
    std::vector<Position> tails, heads;
  };
  std::vector<Cycle> cycles;
  std::vector<char> seen(4 * n, 0);
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const Position start{c, s};
      if (seen[start.dart()]) continue;
      auto entries = walk(start);
      bool enters_at_0 = false, enters_at_2 = false;
      for (const auto& p : entries) {
        enters_at_0 |= p.slot == 0;
        enters_at_2 |= p.slot == 2;
      }
      if (enters_at_0 && enters_at_2)
        throw Error(ErrorKind::MalformedCode,
                    "a component passes under in both directions; slot 0 must be the incoming "
                    "under-edge");
      bool reverse = enters_at_2;
      if (!enters_at_0 && !enters_at_2) {
        // Over-only component: the lowest label leaves its first occurrence.
        int best = std::numeric_limits<int>::max();
        Position best_tail{};
        for (const auto& p : entries) {
          const Position q = opposite(p);
          if (label_at(q) < best) {
            best = label_at(q);
            best_tail = q;
          }
        }
        reverse = best_tail != occurrences.at(best).front();
      }
      if (reverse) entries = walk(opposite(entries.front()));

      Cycle cyc;
      const std::size_t len = entries.size();
      for (std::size_t i = 0; i < len; ++i) {
        const Position tail = opposite(entries[i]);
        cyc.labels.push_back(label_at(tail));
        cyc.tails.push_back(tail);
        cyc.heads.push_back(entries[(i + 1) % len]);
        seen[entries[i].dart()] = 1;
        seen[tail.dart()] = 1;
      }
      const auto it = std::min_element(cyc.labels.begin(), cyc.labels.end());
      const auto shift = it - cyc.labels.begin();
      std::rotate(cyc.labels.begin(), cyc.labels.begin() + shift, cyc.labels.end());
      std::rotate(cyc.tails.begin(), cyc.tails.begin() + shift, cyc.tails.end());
      std::rotate(cyc.heads.begin(), cyc.heads.begin() + shift, cyc.heads.end());
      cyc.min_label = cyc.labels.front();
      cycles.push_back(std::move(cyc));
    }
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.min_label < b.min_label; });

  Diagram d;
  d.free_loops_ = free_loops;
  d.tags_ = tags.empty() ? std::vector<CrossingTag>(n) : std::move(tags);
  d.crossings_.assign(n, Tuple{});
  d.ends_.resize(2 * n);
  d.component_.resize(2 * n);
  std::map<int, int> relabel;
  int next = 0;
  for (const auto& cyc : cycles) {
    d.component_start_.push_back(next);
    d.component_size_.push_back(static_cast<int>(cyc.labels.size()));
    for (std::size_t i = 0; i < cyc.labels.size(); ++i) {
      relabel[cyc.labels[i]] = next;
      d.ends_[next] = {cyc.tails[i], cyc.heads[i]};
      d.component_[next] = d.crossing_components_;
      ++next;
    }
    ++d.crossing_components_;
  }
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) d.crossings_[c][s] = relabel.at(tuples[c][s]);

  d.sign_.resize(n);
  for (int c = 0; c < n; ++c) d.sign_[c] = d.is_outgoing({c, 1}) ? 1 : -1;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < 2 * n; ++e) {
    const int a = find_root(parent, d.ends_[e][0].crossing);
    const int b = find_root(parent, d.ends_[e][1].crossing);
    if (a != b) parent[a] = b;
  }
  std::map<int, int> piece_ids;
  d.piece_.resize(n);
  for (int c = 0; c < n; ++c) {
    const int r = find_root(parent, c);
    auto [it, inserted] = piece_ids.emplace(r, static_cast<int>(piece_ids.size()));
    d.piece_[c] = it->second;
  }
  const int crossing_pieces = static_cast<int>(piece_ids.size());
  d.pieces_ = crossing_pieces + free_loops;

  // Each piece must be a genus-0 map: V - E + F = 2.
  const FaceSet fs = faces(d);
  std::vector<int> piece_faces(crossing_pieces, 0), piece_vertices(crossing_pieces, 0);
  for (const auto& f : fs.faces) ++piece_faces[d.piece_[f.front().crossing]];
  for (int c = 0; c < n; ++c) ++piece_vertices[d.piece_[c]];
  for (int p = 0; p < crossing_pieces; ++p) {
    if (piece_faces[p] != piece_vertices[p] + 2)
      throw Error(ErrorKind::NonPlanar, "rotation system has " + std::to_string(piece_faces[p]) +
                                            " faces on " + std::to_string(piece_vertices[p]) +
                                            " crossings; the sphere needs n + 2");
  }
  return d;
}

Diagram Diagram::from_unoriented_tuples(std::span<const Tuple> tuples, int free_loops,
                                        std::vector<CrossingTag> tags,
                                        std::vector<char>* flipped) {
  const int n = static_cast<int>(tuples.size());
  std::map<int, std::vector<Position>> occurrences;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) occurrences[tuples[c][s]].push_back({c, s});
  for (const auto& [label, ps] : occurrences)
    if (ps.size() != 2)
      throw Error(ErrorKind::MalformedCode, "edge label " + std::to_string(label) + " occurs " +
                                                std::to_string(ps.size()) + " times");
  auto other = [&](Position p) {
    const auto& ps = occurrences.at(tuples[p.crossing][p.slot]);
    return ps[0] == p ? ps[1] : ps[0];
  };
  std::vector<char> seen(4 * n, 0), flip(n, 0);
  for (const auto& [label, ps] : occurrences) {
    if (seen[ps[0].dart()]) continue;
    // Leave through ps[0]; entries are the far ends of each edge.
    Position out = ps[0];
    do {
      const Position in = other(out);
      seen[out.dart()] = seen[in.dart()] = 1;
      if (in.slot == 2) flip[in.crossing] = 1;
      out = opposite(in);
    } while (out != ps[0]);
  }
  std::vector<Tuple> fixed(tuples.begin(), tuples.end());
  for (int c = 0; c < n; ++c) {
    if (!flip[c]) continue;
    fixed[c] = {tuples[c][2], tuples[c][3], tuples[c][0], tuples[c][1]};
    if (c < static_cast<int>(tags.size()))
      tags[c].south_slot = static_cast<std::int8_t>((tags[c].south_slot + 2) % 4);
  }
  if (flipped) *flipped = flip;
  return from_tuples(fixed, free_loops, std::move(tags));
}

Position Diagram::other_end(Position p) const {
  const auto& e = ends_[edge_at(p)];
  return e[0] == p ? e[1] : e[0];
}

std::vector<int> Diagram::component_edges(int component) const {
  std::vector<int> out;
  if (component >= crossing_components_) return out;
  for (int i = 0; i < component_size_[component]; ++i)
    out.push_back(component_start_[component] + i);
  return out;
}

int Diagram::next_edge(int edge) const {
  const int comp = component_[edge];
  const int start = component_start_[comp];
  return start + (edge - start + 1) % component_size_[comp];
}

bool Diagram::has_tags() const {
  return std::any_of(tags_.begin(), tags_.end(), [](const CrossingTag& t) { return t.tagged(); });
}

Diagram Diagram::without_tags() const {
  Diagram d = *this;
  std::fill(d.tags_.begin(), d.tags_.end(), CrossingTag{});
  return d;
}

// ---------------------------------------------------------------------------

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  Diagram parse() {
    std::vector<Tuple> tuples;
    int loops = 0;
    strip_wrapper();
    while (true) {
      skip_separators();
      if (pos_ >= text_.size()) break;
      const char ch = text_[pos_];
      if (ch == 'X') {
        ++pos_;
        tuples.push_back(parse_tuple());
      } else if (ch == 'O') {
        ++pos_;
        ++loops;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
    }
    if (tuples.empty() && loops == 0) throw Error(ErrorKind::EmptyDiagram, "no crossings in input");
    const int n = static_cast<int>(tuples.size());
    std::vector<int> count(2 * n + 1, 0);
    for (const auto& t : tuples) {
      for (int label : t) {
        if (label < 1 || label > 2 * n)
          throw Error(ErrorKind::MalformedCode, "edge label " + std::to_string(label) +
                                                    " outside 1.." + std::to_string(2 * n));
        ++count[label];
      }
    }
    for (int label = 1; label <= 2 * n; ++label) {
      if (count[label] != 2)
        throw Error(ErrorKind::MalformedCode, "edge label " + std::to_string(label) + " occurs " +
                                                  std::to_string(count[label]) + " times");
    }
    return Diagram::from_tuples(tuples, loops);
  }

 private:
  void strip_wrapper() {
    std::size_t b = 0, e = text_.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text_[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text_[e - 1]))) --e;
    text_ = text_.substr(b, e - b);
    if (text_.size() >= 4 && text_.substr(0, 2) == "PD" && (text_[2] == '[' || text_[2] == '(')) {
      const char close = text_[2] == '[' ? ']' : ')';
      if (text_.back() != close) fail("unterminated PD wrapper");
      text_ = text_.substr(3, text_.size() - 4);
    }
  }

  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char a, char b) {
    skip_spaces();
    if (pos_ >= text_.size() || (text_[pos_] != a && text_[pos_] != b))
      fail(std::string("expected '") + a + "'");
    ++pos_;
  }

  int parse_int() {
    skip_spaces();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Tuple parse_tuple() {
    const char open = (skip_spaces(), pos_ < text_.size() ? text_[pos_] : '\0');
    expect('(', '[');
    Tuple t{};
    for (int i = 0; i < 4; ++i) {
      t[i] = parse_int();
      if (i < 3) expect(',', ',');
    }
    expect(open == '[' ? ']' : ')', open == '[' ? ']' : ')');
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::MalformedCode, msg + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_pd(std::string_view text) { return PdParser(text).parse(); }

std::string emit_pd(const Diagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : d.crossings()) {
    if (!first) out << ' ';
    first = false;
    out << "X(" << t[0] + 1 << ',' << t[1] + 1 << ',' << t[2] + 1 << ',' << t[3] + 1 << ')';
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    if (!first) out << ' ';
    first = false;
    out << 'O';
  }
  return out.str();
}

FaceSet faces(const Diagram& d) {
  FaceSet fs;
  const int darts = 4 * d.crossing_count();
  fs.face_of_dart.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (fs.face_of_dart[start] != -1) continue;
    const int id = fs.size();
    fs.faces.emplace_back();
    Position p{start / 4, start % 4};
    while (fs.face_of_dart[p.dart()] == -1) {
      fs.face_of_dart[p.dart()] = id;
      fs.faces.back().push_back(p);
      const Position q = d.other_end(p);
      p = {q.crossing, (q.slot + 1) % 4};
    }
  }
  return fs;
}

int right_face(const Diagram& d, const FaceSet& fs, int edge) { return fs.face_of(d.tail(edge)); }
int left_face(const Diagram& d, const FaceSet& fs, int edge) { return fs.face_of(d.head(edge)); }

int writhe(const Diagram& d) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += d.sign(c);
  return w;
}

LinkingMatrix linking_matrix(const Diagram& d) {
  const int k = d.component_count();
  LinkingMatrix m;
  m.entries.assign(k, std::vector<int>(k, 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int i = d.component_of_edge(d.crossing(c)[0]);
    const int j = d.component_of_edge(d.crossing(c)[1]);
    if (i == j) {
      m.entries[i][i] += d.sign(c);
    } else {
      m.entries[i][j] += d.sign(c);
      m.entries[j][i] += d.sign(c);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) m.entries[i][j] /= 2;
  return m;
}

Diagram mirror(const Diagram& d) {
  if (d.crossing_count() == 0) return d;
  std::vector<Tuple> out;
  std::vector<CrossingTag> tags = d.tags();
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Tuple& t = d.crossing(c);
    // The old over-strand enters at slot 3 on positive crossings and slot 1 on negative ones.
    const int start = d.sign(c) > 0 ? 3 : 1;
    out.push_back({t[start], t[(start + 1) % 4], t[(start + 2) % 4], t[(start + 3) % 4]});
    if (tags[c].tagged()) tags[c].south_slot = static_cast<std::int8_t>((tags[c].south_slot - start + 4) % 4);
  }
  return Diagram::from_tuples(out, d.free_loops(), std::move(tags));
}

Diagram reverse_component(const Diagram& d, int component) {
  if (component >= d.crossing_component_count()) return d;
  std::vector<Tuple> out(d.crossings().begin(), d.crossings().end());
  std::vector<CrossingTag> tags = d.tags();
  bool passes_under = false;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (d.component_of_edge(out[c][0]) == component) {
      passes_under = true;
      const Tuple t = out[c];
      out[c] = {t[2], t[3], t[0], t[1]};
      if (tags[c].tagged()) tags[c].south_slot = static_cast<std::int8_t>((tags[c].south_slot + 2) % 4);
    }
  }
  if (!passes_under) {
    // Over-only components are oriented by their smallest label, which must leave
    // its first occurrence. Give that role to an edge whose current head comes first.
    for (int e : d.component_edges(component)) {
      if (d.head(e) < d.tail(e)) {
        for (auto& t : out)
          for (auto& label : t)
            if (label == e) label = std::numeric_limits<int>::min();
        break;
      }
    }
  }
  return Diagram::from_tuples(out, d.free_loops(), std::move(tags));
}

namespace {

std::vector<int> rooted_code(const Diagram& d, Position root, int dir, bool swap) {
  const int n = d.crossing_count();
  std::vector<int> label(n, -1), first(n, 0), order;
  label[root.crossing] = 0;
  first[root.crossing] = root.slot;
  order.push_back(root.crossing);
  std::vector<int> code;
  for (std::size_t l = 0; l < 4 * order.size(); ++l) {
    const int v = order[l / 4];
    const Position p{v, ((first[v] + dir * static_cast<int>(l % 4)) % 4 + 4) % 4};
    const Position q = d.other_end(p);
    if (label[q.crossing] == -1) {
      label[q.crossing] = static_cast<int>(order.size());
      first[q.crossing] = q.slot;
      order.push_back(q.crossing);
    }
    const int k = (((q.slot - first[q.crossing]) * dir) % 4 + 4) % 4;
    code.push_back(label[q.crossing] * 4 + k);
  }
  for (int v : order) code.push_back(((first[v] % 2 == 0) != swap) ? 1 : 0);
  return code;
}

}  // namespace

std::vector<int> canonical_key(const Diagram& d, KeyOptions opts) {
  const int n = d.crossing_count();
  const int crossing_pieces = d.piece_count() - d.free_loops();
  std::vector<std::vector<int>> piece_codes(crossing_pieces);
  for (int c = 0; c < n; ++c) {
    auto& best = piece_codes[d.piece_of_crossing(c)];
    for (int s = 0; s < 4; ++s) {
      for (int dir : {1, -1}) {
        for (bool swap : {false, true}) {
          const bool ok = dir == 1 ? (!swap || opts.allow_mirror)
                                   : (swap ? (opts.allow_reflection && opts.allow_mirror) ||
                                                 opts.allow_reflected_mirror
                                           : opts.allow_reflection);
          if (!ok) continue;
          auto code = rooted_code(d, {c, s}, dir, swap);
          if (best.empty() || code < best) best = std::move(code);
        }
      }
    }
  }
  // A reflection or mirror acts on all pieces at once; for split diagrams the
  // per-piece minimum is a slightly coarser key, which is acceptable here.
  std::sort(piece_codes.begin(), piece_codes.end());
  std::vector<int> key{crossing_pieces};
  for (const auto& pc : piece_codes) {
    key.push_back(static_cast<int>(pc.size()));
    key.insert(key.end(), pc.begin(), pc.end());
  }
  key.push_back(d.free_loops());
  return key;
}

bool same_diagram(const Diagram& a, const Diagram& b, KeyOptions opts) {
  return a.crossing_count() == b.crossing_count() && canonical_key(a, opts) == canonical_key(b, opts);
}

}  // namespace knotkit
