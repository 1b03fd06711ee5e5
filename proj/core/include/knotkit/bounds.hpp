#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knotkit/census.hpp"

namespace knotkit {

/// One inequality lhs < rhs (or lhs <= rhs, etc.), evaluated exactly.
struct BoundCheck {
  std::string name;
  std::string statement;  // the inequality as displayed
  std::string relation;   // "<", "<=", ">", ">="
  mpq_class lhs;
  mpq_class rhs;
  bool pass = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  /// 1 / (1 + min_n P_{n+6c} / P_n) over the supplied window.
  std::optional<mpq_class> implied_bound;

  bool all_pass() const;
};

/// Every constant of Theorem 1, Corollary 2 and the regularity section.
/// Square roots are removed by squaring both (positive) sides.
BoundReport evaluate_constants();

/// Checks S_{n+6c} >= P_n - S_n - N_n for every n whose shifted index lies
/// in range (index 0 is n = 1), plus the threshold 1/(1+10.4^{6c}) > 10^{-7c}.
/// Throws LengthMismatch, InvalidArgument (c < 1).
BoundReport theorem1_recursion_check(const std::vector<mpz_class>& P, int crK,
                                     const std::vector<mpz_class>& S,
                                     const std::vector<mpz_class>& N);
/// P_n taken from the cumulative column of the table.
BoundReport theorem1_recursion_check(const CensusTable& t, int crK,
                                     const std::vector<mpz_class>& S,
                                     const std::vector<mpz_class>& N);

/// card / (152 x). Throws XOutOfRange unless 0 < x <= 1, InvalidArgument if
/// card < 0.
mpq_class regularity_budget(const mpz_class& card, const mpq_class& x);

/// (sum of factor crossings) / 152 <= composite. Throws InvalidArgument on
/// non-positive input.
bool lackenby_check(const std::vector<long>& factor_crossings, long composite_crossings);

/// Parses "3/4", "0.75" or "2" exactly. Throws InvalidArgument.
mpq_class parse_rational(const std::string& text);

}  // namespace knotkit
