#pragma once

// Brute-force reference implementations used by the tests. They work on raw
// PD tuples and share no code with the library beyond the tuple type.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotkit/diagram.hpp"
#include "knotkit/laurent.hpp"

namespace oracle {

using Tuples = std::vector<std::array<int, 4>>;
using Poly = std::map<int, long long>;

inline Tuples tuples_of(const knotkit::Diagram& d) {
  return Tuples(d.crossings().begin(), d.crossings().end());
}

inline void add(Poly& p, int e, long long c) {
  if ((p[e] += c) == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [e1, c1] : a)
    for (auto [e2, c2] : b) add(r, e1 + e2, c1 * c2);
  return r;
}

inline knotkit::LaurentPoly to_laurent(const Poly& p) {
  knotkit::LaurentPoly out;
  for (auto [e, c] : p) out += knotkit::LaurentPoly::monomial(mpz_class(static_cast<long>(c)), e);
  return out;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Relabels edges 0..m-1 in order of first appearance.
inline std::pair<Tuples, int> compact(const Tuples& t) {
  std::map<int, int> ids;
  Tuples out = t;
  for (auto& x : out)
    for (int& l : x) l = ids.emplace(l, static_cast<int>(ids.size())).first->second;
  return {out, static_cast<int>(ids.size())};
}

// <D> as a sum over all 2^n smoothings. A-smoothing of X(a,b,c,d) joins a-b
// and c-d, the B-smoothing a-d and b-c.
inline Poly bracket(const Tuples& raw, int free_loops = 0) {
  auto [t, m] = compact(raw);
  const int n = static_cast<int>(t.size());
  const Poly delta{{-2, -1}, {2, -1}};
  std::vector<Poly> dpow{{{0, 1}}};
  Poly total;
  for (long long state = 0; state < (1LL << n); ++state) {
    UnionFind uf(m);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = t[c];
      if ((state >> c) & 1) {
        uf.join(x[0], x[3]);
        uf.join(x[1], x[2]);
      } else {
        ++a_count;
        uf.join(x[0], x[1]);
        uf.join(x[2], x[3]);
      }
    }
    int loops = free_loops;
    for (int l = 0; l < m; ++l) loops += uf.find(l) == l;
    while (static_cast<int>(dpow.size()) < loops) dpow.push_back(mul(dpow.back(), delta));
    for (auto [e, c] : dpow[loops - 1]) add(total, e + a_count - (n - a_count), c);
  }
  return total;
}

// Occurrences of each label as (crossing, slot).
inline std::map<int, std::vector<std::pair<int, int>>> occurrences(const Tuples& t) {
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int c = 0; c < static_cast<int>(t.size()); ++c)
    for (int s = 0; s < 4; ++s) occ[t[c][s]].push_back({c, s});
  return occ;
}

inline std::pair<int, int> other_occurrence(
    const std::map<int, std::vector<std::pair<int, int>>>& occ, int label, std::pair<int, int> at) {
  const auto& v = occ.at(label);
  if (v.size() != 2) throw std::runtime_error("label does not occur twice");
  return v[0] == at ? v[1] : v[0];
}

// Signs from walking each component; a component is oriented so that its
// under-passes enter at slot 0. Sign +1 when the over-strand leaves at slot 1.
inline std::vector<int> signs(const Tuples& t) {
  const int n = static_cast<int>(t.size());
  const auto occ = occurrences(t);
  std::vector<std::array<int, 4>> seen(n, {0, 0, 0, 0});
  std::vector<int> sign(n, 0);
  for (int c0 = 0; c0 < n; ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[c0][s0]) continue;
      std::vector<std::pair<int, int>> passes;  // (crossing, entry slot)
      std::pair<int, int> cur{c0, s0};
      do {
        auto [c, s] = cur;
        seen[c][s] = seen[c][(s + 2) % 4] = 1;
        passes.push_back(cur);
        const int out = (s + 2) % 4;
        cur = other_occurrence(occ, t[c][out], {c, out});
      } while (cur != std::pair<int, int>{c0, s0});
      bool reversed = false;
      for (auto [c, s] : passes)
        if (s % 2 == 0) {
          reversed = s == 2;
          break;
        }
      for (auto [c, s] : passes) {
        const int entry = reversed ? (s + 2) % 4 : s;
        if (entry % 2 == 1) sign[c] = entry == 3 ? 1 : -1;
      }
    }
  return sign;
}

inline int writhe(const Tuples& t) {
  const auto s = signs(t);
  return std::accumulate(s.begin(), s.end(), 0);
}

// Jones in A (t = A^-4): (-A^3)^-w <D>.
inline Poly jones_in_a(const Tuples& t, int free_loops = 0) {
  const int w = writhe(t);
  Poly f{{-3 * w, (w % 2 == 0) ? 1 : -1}};
  return mul(f, bracket(t, free_loops));
}

// Faces by the rule: from (c, s) travel along the edge to (c', s'), then
// continue at (c', s' + 1). Returns the face id of every dart 4c + s.
inline std::vector<int> faces(const Tuples& t, int* count = nullptr) {
  const int n = static_cast<int>(t.size());
  const auto occ = occurrences(t);
  std::vector<int> f(4 * n, -1);
  int id = 0;
  for (int d = 0; d < 4 * n; ++d) {
    if (f[d] >= 0) continue;
    int x = d;
    while (f[x] < 0) {
      f[x] = id;
      auto [c2, s2] = other_occurrence(occ, t[x / 4][x % 4], {x / 4, x % 4});
      x = 4 * c2 + (s2 + 1) % 4;
    }
    ++id;
  }
  if (count) *count = id;
  return f;
}

// Crossing graph connectivity with some labels removed.
inline int pieces_without(const Tuples& t, const std::vector<int>& removed) {
  const int n = static_cast<int>(t.size());
  UnionFind uf(n);
  int pieces = n;
  for (const auto& [label, v] : occurrences(t)) {
    if (std::find(removed.begin(), removed.end(), label) != removed.end()) continue;
    if (v.size() == 2 && uf.join(v[0].first, v[1].first)) --pieces;
  }
  return pieces;
}

// A connected diagram is composite iff two edges form a cut of the crossing
// graph: the graph is 4-regular, so such a cut is a bond, i.e. a circle
// through two faces meeting the projection in two points with crossings on
// both sides.
inline bool prime_by_bonds(const Tuples& t) {
  std::vector<int> labels;
  for (const auto& [label, v] : occurrences(t)) labels.push_back(label);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (pieces_without(t, {labels[i], labels[j]}) > 1) return false;
  return true;
}

// Minimum, over every simple path in the face-dual from face `from` to face
// `to`, of the number of crossed edges whose label satisfies `counts`.
inline int min_dual_crossings(const Tuples& t, int from, int to,
                              const std::function<bool(int)>& counts) {
  int nf = 0;
  const auto f = faces(t, &nf);
  const auto occ = occurrences(t);
  std::vector<std::vector<std::pair<int, int>>> adj(nf);  // (face, weight)
  for (const auto& [label, v] : occ) {
    const int a = f[4 * v[0].first + v[0].second], b = f[4 * v[1].first + v[1].second];
    const int w = counts(label) ? 1 : 0;
    adj[a].push_back({b, w});
    adj[b].push_back({a, w});
  }
  int best = 1 << 30;
  std::vector<char> on_path(nf, 0);
  std::function<void(int, int)> dfs = [&](int at, int cost) {
    if (cost >= best) return;
    if (at == to) {
      best = cost;
      return;
    }
    on_path[at] = 1;
    for (auto [next, w] : adj[at])
      if (!on_path[next]) dfs(next, cost + w);
    on_path[at] = 0;
  };
  dfs(from, 0);
  return best;
}

// PD code of the closure of the 2-braid sigma^m (T(2, m)); m != 0.
inline Tuples two_braid(int m) {
  const int n = std::abs(m);
  Tuples t;
  for (int i = 0; i < n; ++i) {
    const int a = 2 * i, b = 2 * i + 1, a2 = 2 * ((i + 1) % n), b2 = a2 + 1;
    if (m > 0) t.push_back({b, b2, a2, a});
    else t.push_back({a, b, b2, a2});
  }
  return t;
}

}  // namespace oracle
