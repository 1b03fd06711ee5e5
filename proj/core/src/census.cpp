#include "knotkit/census.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "knotkit/error.hpp"
#include "knotkit/invariants.hpp"
#include "knotkit/structure.hpp"

#ifndef KNOTKIT_VERSION
#define KNOTKIT_VERSION "unknown"
#endif

namespace knotkit {

namespace {

int worker_count(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count). Results go to per-index slots so the
// outcome does not depend on scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Builds maps dart by dart in breadth-first order. Vertex v is created when
// a dangling dart is attached to its slot 0; otherwise the dart is joined to
// another dangling dart on the same partial face. Faces are kept as cyclic
// lists of dangling darts, so every join is planar by construction.
class MapGenerator {
 public:
  MapGenerator(int n, std::function<void(const std::vector<int>&)> emit)
      : n_(n), emit_(std::move(emit)) {}

  void run() {
    State s;
    s.partner.assign(4 * n_, -1);
    s.face_of.assign(4 * n_, -1);
    s.vertices = 1;
    s.faces.push_back({0, 1, 2, 3});
    for (int i = 0; i < 4; ++i) s.face_of[i] = 0;
    step(s, 0);
  }

 private:
  struct State {
    std::vector<int> partner;
    std::vector<int> face_of;
    std::vector<std::vector<int>> faces;
    int vertices = 0;
  };

  void step(State& s, int d) {
    while (d < 4 * s.vertices && s.partner[d] >= 0) ++d;
    if (d == 4 * s.vertices) {
      if (s.vertices == n_) emit_(s.partner);
      return;
    }
    const int fid = s.face_of[d];
    const std::vector<int>& face = s.faces[fid];
    const auto pos = std::find(face.begin(), face.end(), d) - face.begin();
    std::vector<int> rot(face.size());
    for (std::size_t i = 0; i < face.size(); ++i) rot[i] = face[(pos + i) % face.size()];

    if (s.vertices < n_) {
      State t = s;
      const int v = t.vertices++;
      t.partner[d] = 4 * v;
      t.partner[4 * v] = d;
      std::vector<int> nf{4 * v + 1, 4 * v + 2, 4 * v + 3};
      nf.insert(nf.end(), rot.begin() + 1, rot.end());
      for (int x : nf) t.face_of[x] = fid;
      t.faces[fid] = std::move(nf);
      step(t, d + 1);
    }
    for (std::size_t j = 1; j < rot.size(); ++j) {
      State t = s;
      const int b = rot[j];
      t.partner[d] = b;
      t.partner[b] = d;
      t.faces[fid].assign(rot.begin() + 1, rot.begin() + j);
      std::vector<int> other(rot.begin() + j + 1, rot.end());
      const int nid = static_cast<int>(t.faces.size());
      for (int x : other) t.face_of[x] = nid;
      t.faces.push_back(std::move(other));
      step(t, d + 1);
    }
  }

  int n_;
  std::function<void(const std::vector<int>&)> emit_;
};

// A relabelling of the map onto its own canonical labelling, found by a
// breadth-first walk from another root.
struct Automorphism {
  int dir = 1;
  std::vector<int> label;  // old vertex -> canonical vertex
  std::vector<int> first;  // slot of the old vertex that becomes slot 0
};

// Compares the code read from (root, dir) with the identity code. Returns
// -1 if smaller (the map is not canonical), 0 if equal, 1 if larger.
int compare_from(const std::vector<int>& partner, int root, int dir, Automorphism* out) {
  const int n = static_cast<int>(partner.size()) / 4;
  std::vector<int> label(n, -1), first(n, 0), order;
  order.reserve(n);
  label[root / 4] = 0;
  first[root / 4] = root % 4;
  order.push_back(root / 4);
  int pos = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int k = 0; k < 4; ++k, ++pos) {
      const int s = ((first[v] + dir * k) % 4 + 4) % 4;
      const int p = partner[4 * v + s];
      const int u = p / 4;
      if (label[u] < 0) {
        label[u] = static_cast<int>(order.size());
        first[u] = p % 4;
        order.push_back(u);
      }
      const int code = 4 * label[u] + (((p % 4 - first[u]) * dir) % 4 + 4) % 4;
      if (code != partner[pos]) return code < partner[pos] ? -1 : 1;
    }
  }
  if (out) *out = {dir, std::move(label), std::move(first)};
  return 0;
}

bool is_canonical(const std::vector<int>& partner) {
  for (int r = 0; r < static_cast<int>(partner.size()); ++r)
    for (int dir : {1, -1})
      if (compare_from(partner, r, dir, nullptr) < 0) return false;
  return true;
}

std::vector<Automorphism> automorphisms(const Shadow& s) {
  std::vector<Automorphism> out;
  for (int r = 0; r < static_cast<int>(s.partner.size()); ++r)
    for (int dir : {1, -1}) {
      Automorphism a;
      if (compare_from(s.partner, r, dir, &a) == 0) out.push_back(std::move(a));
    }
  return out;
}

std::uint32_t apply(const Automorphism& a, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t v = 0; v < a.label.size(); ++v) {
    const std::uint32_t bit = ((mask >> v) & 1u) ^ static_cast<std::uint32_t>(a.first[v] & 1);
    out |= bit << a.label[v];
  }
  return out;
}

// Crossing assignments on one shadow, one per orbit of its symmetry group.
std::vector<std::uint32_t> orbit_representatives(const Shadow& s, bool identify_mirrors) {
  const int n = s.vertices();
  const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  const auto autos = automorphisms(s);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t m = 0; m <= full; ++m) {
    bool least = true;
    for (const auto& a : autos) {
      const std::uint32_t img = apply(a, m);
      const std::uint32_t flip = img ^ full;
      if (identify_mirrors) {
        if (img < m || flip < m) least = false;
      } else if ((a.dir == 1 ? img : flip) < m) {
        least = false;
      }
      if (!least) break;
    }
    if (least) reps.push_back(m);
    if (m == full) break;
  }
  return reps;
}

struct ShadowTally {
  bool prime = false;
  std::uint64_t diagrams = 0;
  std::vector<std::string> fingerprints;
};

constexpr const char* kColumns =
    "n rooted_maps shadows prime_shadows diagrams prime_diagrams buckets new_buckets cumulative";

std::string header_text(const CensusTable& t) {
  std::ostringstream out;
  out << "# " << t.format << "\n";
  out << "# generator: " << t.generator << "\n";
  out << "# identify_mirrors: " << (t.identify_mirrors ? 1 : 0) << "\n";
  out << "# columns: " << kColumns << "\n";
  out << "# buckets are a lower bound on distinct link classes\n";
  return out.str();
}

std::string row_text(const CensusTable& t, std::size_t i) {
  const CensusRow& r = t.rows[i];
  std::ostringstream out;
  out << "row " << r.n << ' ' << r.rooted_maps << ' ' << r.shadows << ' ' << r.prime_shadows
      << ' ' << r.diagrams << ' ' << r.prime_diagrams << ' ' << r.buckets << ' '
      << r.new_buckets << ' ' << r.cumulative << "\n";
  if (i < t.buckets.size())
    for (const auto& [fp, count] : t.buckets[i])
      out << "bucket " << r.n << ' ' << count << ' ' << fp << "\n";
  return out.str();
}

[[noreturn]] void bad_table(const std::string& why) {
  throw Error(ErrorKind::MalformedCode, "census table: " + why);
}

}  // namespace

Diagram shadow_diagram(const Shadow& s, std::uint32_t under_mask) {
  const int n = s.vertices();
  std::vector<int> label(4 * n, -1);
  int next = 0;
  for (int d = 0; d < 4 * n; ++d)
    if (label[d] < 0) label[d] = label[s.partner[d]] = next++;
  std::vector<Tuple> tuples(n);
  for (int v = 0; v < n; ++v) {
    const int shift = (under_mask >> v) & 1u;
    for (int k = 0; k < 4; ++k) tuples[v][k] = label[4 * v + (k + shift) % 4];
  }
  return Diagram::from_unoriented_tuples(tuples);
}

bool CensusTable::cumulative_ok() const {
  std::uint64_t sum = 0;
  for (const auto& r : rows) {
    sum += r.new_buckets;
    if (r.cumulative != sum) return false;
  }
  return true;
}

std::vector<Shadow> rooted_maps(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one vertex");
  std::vector<Shadow> out;
  MapGenerator(n, [&](const std::vector<int>& p) { out.push_back({p}); }).run();
  return out;
}

namespace {

std::vector<Shadow> shadows_counted(int n, int threads, std::uint64_t& rooted) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one vertex");
  constexpr std::size_t kBatch = 1 << 15;
  std::vector<Shadow> out;
  std::vector<std::vector<int>> batch;
  rooted = 0;
  auto flush = [&] {
    std::vector<char> keep(batch.size());
    parallel_for(batch.size(), threads, [&](std::size_t i) { keep[i] = is_canonical(batch[i]); });
    for (std::size_t i = 0; i < batch.size(); ++i)
      if (keep[i]) out.push_back({std::move(batch[i])});
    batch.clear();
  };
  MapGenerator(n, [&](const std::vector<int>& p) {
    ++rooted;
    batch.push_back(p);
    if (batch.size() == kBatch) flush();
  }).run();
  flush();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Shadow> enumerate_shadows(int n, int threads) {
  std::uint64_t rooted = 0;
  return shadows_counted(n, threads, rooted);
}

CensusTable enumerate_diagrams(int n_max, const CensusOptions& opts) {
  if (n_max > opts.budget)
    throw Error(ErrorKind::BudgetExceeded, "census up to " + std::to_string(n_max) +
                                               " crossings exceeds budget " +
                                               std::to_string(opts.budget));
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be positive");
  if (n_max > 16) throw Error(ErrorKind::BudgetExceeded, "census is limited to 16 crossings");

  CensusTable table;
  table.generator = std::string("knotkit ") + KNOTKIT_VERSION;
  table.identify_mirrors = opts.identify_mirrors;
  std::set<std::string> seen;
  std::uint64_t cumulative = 0;
  StateSumOptions sso;
  sso.threads = 1;
  sso.max_crossings = std::max(sso.max_crossings, n_max);

  for (int n = 1; n <= n_max; ++n) {
    CensusRow row;
    row.n = n;
    const std::vector<Shadow> shadows = shadows_counted(n, opts.threads, row.rooted_maps);
    row.shadows = shadows.size();

    std::vector<ShadowTally> tally(shadows.size());
    parallel_for(shadows.size(), opts.threads, [&](std::size_t i) {
      const Shadow& s = shadows[i];
      const auto reps = orbit_representatives(s, opts.identify_mirrors);
      ShadowTally& t = tally[i];
      t.diagrams = reps.size();
      t.prime = is_prime_diagram(shadow_diagram(s, 0)).prime;
      if (!t.prime) return;
      for (std::uint32_t m : reps)
        t.fingerprints.push_back(invariant_fingerprint(shadow_diagram(s, m), sso).to_string());
    });

    std::map<std::string, std::uint64_t> buckets;
    for (const auto& t : tally) {
      row.diagrams += t.diagrams;
      if (!t.prime) continue;
      ++row.prime_shadows;
      row.prime_diagrams += t.diagrams;
      for (const auto& fp : t.fingerprints) ++buckets[fp];
    }
    row.buckets = buckets.size();
    for (const auto& [fp, count] : buckets)
      if (seen.insert(fp).second) ++row.new_buckets;
    cumulative += row.new_buckets;
    row.cumulative = cumulative;
    table.rows.push_back(row);
    table.buckets.push_back(std::move(buckets));
  }
  return table;
}

std::string format_table(const CensusTable& t) {
  std::string out = header_text(t);
  for (std::size_t i = 0; i < t.rows.size(); ++i) out += row_text(t, i);
  return out;
}

CensusTable parse_table(const std::string& text) {
  CensusTable t;
  t.generator.clear();
  std::istringstream in(text);
  std::string line;
  bool saw_format = false, saw_mirrors = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = line.size() > 2 ? line.substr(2) : "";
      if (!saw_format) {
        t.format = body;
        saw_format = true;
      } else if (body.rfind("generator: ", 0) == 0) {
        t.generator = body.substr(11);
      } else if (body.rfind("identify_mirrors: ", 0) == 0) {
        t.identify_mirrors = body.substr(18) == "1";
        saw_mirrors = true;
      } else if (body.rfind("columns: ", 0) == 0 && body.substr(9) != kColumns) {
        bad_table("unexpected column list");
      }
      continue;
    }
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "row") {
      CensusRow r;
      if (!(ls >> r.n >> r.rooted_maps >> r.shadows >> r.prime_shadows >> r.diagrams >>
            r.prime_diagrams >> r.buckets >> r.new_buckets >> r.cumulative))
        bad_table("short row: " + line);
      if (r.n != static_cast<int>(t.rows.size()) + 1) bad_table("rows must run 1, 2, 3, ...");
      t.rows.push_back(r);
      t.buckets.emplace_back();
    } else if (kind == "bucket") {
      int n = 0;
      std::uint64_t count = 0;
      if (!(ls >> n >> count) || n != static_cast<int>(t.rows.size()))
        bad_table("bucket line out of place: " + line);
      std::string fp;
      std::getline(ls >> std::ws, fp);
      t.buckets.back()[fp] = count;
    } else {
      bad_table("unknown line: " + line);
    }
  }
  if (!saw_format || t.format != CensusTable{}.format) bad_table("missing or unknown format line");
  if (!saw_mirrors) bad_table("missing identify_mirrors");
  return t;
}

CensusTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

PersistResult persist_table(const CensusTable& t, const std::string& path) {
  PersistResult res;
  if (!std::filesystem::exists(path)) {
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
      out << format_table(t);
    }
    std::filesystem::rename(tmp, path);
    res.appended = static_cast<int>(t.rows.size());
    return res;
  }
  const CensusTable old = load_table(path);
  if (old.identify_mirrors != t.identify_mirrors)
    throw Error(ErrorKind::TableMismatch, path + " was built with a different mirror convention");
  const std::size_t common = std::min(old.rows.size(), t.rows.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (old.rows[i] != t.rows[i] || old.buckets[i] != t.buckets[i])
      throw Error(ErrorKind::TableMismatch,
                  path + ": stored row n=" + std::to_string(old.rows[i].n) + " disagrees");
  }
  res.verified = static_cast<int>(common);
  if (t.rows.size() > common) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot append to " + path);
    for (std::size_t i = common; i < t.rows.size(); ++i) out << row_text(t, i);
    res.appended = static_cast<int>(t.rows.size() - common);
  }
  return res;
}

}  // namespace knotkit
