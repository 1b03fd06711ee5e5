#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace knotkit {

/// Integer Laurent polynomial in one variable with arbitrary-precision
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit on purpose, reads like arithmetic
  static LaurentPoly monomial(const mpz_class& coeff, int exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, mpz_class>& terms() const { return terms_; }
  mpz_class coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly pow(int k) const;
  /// Multiply by x^k.
  LaurentPoly shifted(int k) const;
  /// x -> x^factor (factor may be negative; -1 is the mirror substitution).
  LaurentPoly substitute_power(int factor) const;
  /// Divide every exponent by `divisor`; throws if one is not divisible.
  LaurentPoly compress_exponents(int divisor) const;

  /// Ascending-exponent text, e.g. "-A^-7 + A^-3 - 2*A^5". Exponents are
  /// printed divided by `exponent_scale` ("t^(3/2)") when not divisible.
  std::string to_string(std::string_view var = "A", int exponent_scale = 1) const;
  /// Inverse of to_string for scale 1.
  static LaurentPoly parse(std::string_view text, std::string_view var = "A");

  /// Lexicographic order on (exponent, coefficient) pairs; used only to pick
  /// a deterministic representative among mirror images.
  bool lex_less(const LaurentPoly& o) const;

 private:
  void add_term(int exponent, const mpz_class& coeff);
  std::map<int, mpz_class> terms_;
};

}  // namespace knotkit
