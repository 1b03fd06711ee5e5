#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knotkit/diagram.hpp"

namespace knotkit {

/// A connected planar 4-valent map in canonical form: partner[4v + s] is the
/// dart joined to slot s of vertex v, slots counterclockwise.
struct Shadow {
  std::vector<int> partner;

  int vertices() const { return static_cast<int>(partner.size()) / 4; }
  bool operator==(const Shadow&) const = default;
  auto operator<=>(const Shadow&) const = default;
};

/// under_mask bit v set: the under strand of vertex v uses slots 1 and 3.
Diagram shadow_diagram(const Shadow& s, std::uint32_t under_mask);

struct CensusOptions {
  int budget = 8;
  int threads = 0;  // 0 = hardware concurrency
  /// Identify a diagram with its mirror image. Off: only symmetries that keep
  /// the link type count (rotations, and reflections composed with a swap).
  bool identify_mirrors = true;
};

struct CensusRow {
  int n = 0;
  std::uint64_t rooted_maps = 0;
  std::uint64_t shadows = 0;
  std::uint64_t prime_shadows = 0;
  std::uint64_t diagrams = 0;
  std::uint64_t prime_diagrams = 0;
  /// Distinct fingerprints among the prime diagrams with n crossings.
  std::uint64_t buckets = 0;
  /// Fingerprints not seen at any smaller n (p_n).
  std::uint64_t new_buckets = 0;
  /// Running sum of new_buckets (P_n).
  std::uint64_t cumulative = 0;

  bool operator==(const CensusRow&) const = default;
};

/// Per-n counts. Bucket counts are a lower bound on the number of distinct
/// link classes: equal fingerprints may hide different links.
struct CensusTable {
  std::string format = "knotkit-census 1";
  std::string generator;
  bool identify_mirrors = true;
  std::vector<CensusRow> rows;
  /// buckets[n - 1]: fingerprint -> number of prime diagrams at n.
  std::vector<std::map<std::string, std::uint64_t>> buckets;

  bool cumulative_ok() const;
  bool operator==(const CensusTable&) const = default;
};

/// Every connected rooted planar 4-valent map with n vertices, in generation
/// order. Exposed for testing.
std::vector<Shadow> rooted_maps(int n);
/// The maps above up to sphere homeomorphism (both orientations).
std::vector<Shadow> enumerate_shadows(int n, int threads = 0);

/// Throws BudgetExceeded when n_max > opts.budget.
CensusTable enumerate_diagrams(int n_max, const CensusOptions& opts = {});

/// The table file. Lines starting with '#' form the header; then one
/// `row` line per n followed by its `bucket` lines.
std::string format_table(const CensusTable& t);
/// Throws MalformedCode.
CensusTable parse_table(const std::string& text);

struct PersistResult {
  int verified = 0;
  int appended = 0;
};

/// Writes `t` to `path`. An existing file must agree on the header and on
/// every row it already holds (TableMismatch otherwise); only missing rows
/// are appended.
PersistResult persist_table(const CensusTable& t, const std::string& path);
CensusTable load_table(const std::string& path);

}  // namespace knotkit
