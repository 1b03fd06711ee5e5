#include "knotkit/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <thread>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

// Union-find with rollback: no path compression, union by size.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Returns the absorbed root, or -1 when already joined.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return b;
  }

  void undo(int absorbed) {
    if (absorbed < 0) return;
    const int root = parent_[absorbed];
    size_[root] -= size_[absorbed];
    parent_[absorbed] = absorbed;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// counts[a][loops]: number of states with `a` A-smoothings and `loops` loops.
using StateCounts = std::vector<std::vector<std::int64_t>>;

class StateSum {
 public:
  StateSum(const Diagram& d, StateCounts& counts) : d_(d), uf_(d.edge_count()), counts_(counts) {}

  void fix_prefix(int depth, std::uint64_t bits) {
    for (int c = 0; c < depth; ++c) apply(c, (bits >> c) & 1u);
  }

  void run(int c) {
    if (c == d_.crossing_count()) {
      counts_[a_count_][d_.edge_count() - joins_]++;
      return;
    }
    for (int choice = 0; choice < 2; ++choice) {
      const auto undo = apply(c, choice);
      run(c + 1);
      revert(undo, choice);
    }
  }

 private:
  struct Undo {
    int first, second;
  };

  // choice 0: A-smoothing joins (t0,t1),(t2,t3); choice 1: B joins (t0,t3),(t1,t2).
  Undo apply(int c, int choice) {
    const Tuple& t = d_.crossing(c);
    Undo u{};
    if (choice == 0) {
      u.first = uf_.unite(t[0], t[1]);
      u.second = uf_.unite(t[2], t[3]);
      ++a_count_;
    } else {
      u.first = uf_.unite(t[0], t[3]);
      u.second = uf_.unite(t[1], t[2]);
    }
    joins_ += (u.first >= 0) + (u.second >= 0);
    return u;
  }

  void revert(const Undo& u, int choice) {
    uf_.undo(u.second);
    uf_.undo(u.first);
    joins_ -= (u.first >= 0) + (u.second >= 0);
    if (choice == 0) --a_count_;
  }

  const Diagram& d_;
  RollbackUnionFind uf_;
  StateCounts& counts_;
  int a_count_ = 0;
  int joins_ = 0;
};

LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

}  // namespace

LaurentPoly r1_factor(int k) {
  const mpz_class sign = (k % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(sign, 3 * k);
}

LaurentPoly kauffman_bracket(const Diagram& d, const StateSumOptions& opts) {
  const int n = d.crossing_count();
  if (n > opts.max_crossings)
    throw Error(ErrorKind::BudgetExceeded, "state sum over " + std::to_string(n) +
                                               " crossings exceeds budget of " +
                                               std::to_string(opts.max_crossings));
  const LaurentPoly delta = loop_value();
  if (n == 0) return delta.pow(d.free_loops() - 1);

  const int max_loops = d.edge_count();
  auto fresh = [&] { return StateCounts(n + 1, std::vector<std::int64_t>(max_loops + 1, 0)); };
  StateCounts total = fresh();

  unsigned threads = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  int prefix = 0;
  while ((1u << prefix) < threads && prefix < n && prefix < 6) ++prefix;
  const std::uint64_t jobs = std::uint64_t{1} << prefix;
  if (jobs == 1) {
    StateSum(d, total).run(0);
  } else {
    std::vector<StateCounts> partial(jobs, fresh());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t j = w; j < jobs; j += threads) {
          StateSum s(d, partial[j]);
          s.fix_prefix(prefix, j);
          s.run(prefix);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial)
      for (int a = 0; a <= n; ++a)
        for (int l = 0; l <= max_loops; ++l) total[a][l] += p[a][l];
  }

  LaurentPoly result;
  std::vector<LaurentPoly> delta_pow;
  delta_pow.push_back(LaurentPoly(1));
  for (int a = 0; a <= n; ++a) {
    for (int l = 1; l <= max_loops; ++l) {
      if (total[a][l] == 0) continue;
      const int k = l + d.free_loops() - 1;
      while (static_cast<int>(delta_pow.size()) <= k) delta_pow.push_back(delta_pow.back() * delta);
      result += LaurentPoly::monomial(mpz_class(static_cast<long>(total[a][l])), a - (n - a)) *
                delta_pow[k];
    }
  }
  return result;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  const LaurentPoly in_a = r1_factor(-writhe) * bracket;
  // A^k = t^(-k/4) = (t^(1/2))^(-k/2).
  return in_a.compress_exponents(2).substitute_power(-1);
}

LaurentPoly jones(const Diagram& d, const StateSumOptions& opts) {
  return jones_from_bracket(kauffman_bracket(d, opts), writhe(d));
}

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "c=" << components << ";lk=";
  for (std::size_t i = 0; i < abs_linking.size(); ++i) out << (i ? "," : "") << abs_linking[i];
  out << ";V=" << jones.to_string("t", 2);
  return out.str();
}

Fingerprint invariant_fingerprint(const Diagram& d, const StateSumOptions& opts) {
  Fingerprint fp;
  fp.components = d.component_count();
  const LinkingMatrix lk = linking_matrix(d);
  for (int i = 0; i < lk.size(); ++i)
    for (int j = i + 1; j < lk.size(); ++j) fp.abs_linking.push_back(std::abs(lk(i, j)));
  std::sort(fp.abs_linking.begin(), fp.abs_linking.end());

  const LaurentPoly bracket = kauffman_bracket(d, opts);
  const int k = d.crossing_component_count();
  bool have = false;
  // Reversing the last component is redundant with reversing all the others.
  const int choices = k > 0 ? (1 << (k - 1)) : 1;
  for (int flips = 0; flips < choices; ++flips) {
    int w = 0;
    for (int c = 0; c < d.crossing_count(); ++c) {
      const int i = d.component_of_edge(d.crossing(c)[0]);
      const int j = d.component_of_edge(d.crossing(c)[1]);
      const bool flipped = (((flips >> i) & 1) != 0) != (((flips >> j) & 1) != 0);
      w += flipped ? -d.sign(c) : d.sign(c);
    }
    const LaurentPoly v = jones_from_bracket(bracket, w);
    for (const LaurentPoly& cand : {v, v.substitute_power(-1)}) {
      if (!have || cand.lex_less(fp.jones)) {
        fp.jones = cand;
        have = true;
      }
    }
  }
  return fp;
}

}  // namespace knotkit
