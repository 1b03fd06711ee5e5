#include "knotkit/bounds.hpp"

#include <algorithm>

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

const mpq_class kTenPointFour(52, 5);

mpq_class qpow(const mpq_class& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

BoundCheck make_check(std::string name, std::string statement, const mpq_class& lhs,
                      std::string relation, const mpq_class& rhs) {
  BoundCheck c{std::move(name), std::move(statement), relation, lhs, rhs, false};
  if (relation == "<") c.pass = lhs < rhs;
  else if (relation == "<=") c.pass = lhs <= rhs;
  else if (relation == ">") c.pass = lhs > rhs;
  else c.pass = lhs >= rhs;
  return c;
}

// 1/(1+a) > 1/b  <=>  1 + a < b for positive a, b.
BoundCheck threshold_check(const std::string& name, unsigned long six_c, unsigned long ten_exp) {
  const std::string stmt = "1/(1+10.4^" + std::to_string(six_c) + ") > 10^-" +
                           std::to_string(ten_exp);
  return make_check(name, stmt + "  <=>  1+10.4^" + std::to_string(six_c) + " < 10^" +
                              std::to_string(ten_exp),
                    1 + qpow(kTenPointFour, six_c), "<", qpow(mpq_class(10), ten_exp));
}

}  // namespace

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

BoundReport evaluate_constants() {
  BoundReport r;
  // (sqrt(13681)+91)/20 < 10.4 <=> sqrt(13681) < 117 <=> 13681 < 117^2.
  r.checks.push_back(make_check("stoimenow_growth", "(sqrt(13681)+91)/20 < 10.4  <=>  13681 < 117^2",
                                mpq_class(13681), "<", mpq_class(117 * 117)));
  // (sqrt(21001)+101)/40 > 6.14 <=> sqrt(21001) > 144.6 <=> 21001 > 144.6^2.
  r.checks.push_back(make_check("sundberg_thistlethwaite_growth",
                                "(sqrt(21001)+101)/40 > 6.14  <=>  21001 > 144.6^2",
                                mpq_class(21001), ">", qpow(mpq_class(723, 5), 2)));
  for (unsigned long c = 1; c <= 20; ++c)
    r.checks.push_back(threshold_check("prime_threshold_c" + std::to_string(c), 6 * c, 7 * c));
  for (unsigned long c = 6; c <= 20; ++c) {
    const std::string cs = std::to_string(c);
    r.checks.push_back(threshold_check("composite_threshold_c" + cs, 6 * (4 * c + 1), 26 * c));
    // The displayed chain passes through 10.4^{24c+6} <= 10.4^{25c}, valid for c >= 6.
    r.checks.push_back(make_check("composite_exponent_c" + cs, "24c+6 <= 25c for c = " + cs,
                                  mpq_class(24 * c + 6), "<=", mpq_class(25 * c)));
    r.checks.push_back(threshold_check("composite_chain_c" + cs, 25 * c, 26 * c));
  }
  r.checks.push_back(threshold_check("corollary2", 18, 19));
  // (10.4)^{3/4} < 5.8 <=> 10.4^3 < 5.8^4, then 5.8 < 6.14.
  r.checks.push_back(make_check("regular_growth", "10.4^(3/4) < 5.8  <=>  10.4^3 < 5.8^4",
                                qpow(kTenPointFour, 3), "<", qpow(mpq_class(29, 5), 4)));
  r.checks.push_back(make_check("regular_vs_all", "5.8 < 6.14", mpq_class(29, 5), "<",
                                mpq_class(307, 50)));
  return r;
}

BoundReport theorem1_recursion_check(const std::vector<mpz_class>& P, int crK,
                                     const std::vector<mpz_class>& S,
                                     const std::vector<mpz_class>& N) {
  if (P.size() != S.size() || P.size() != N.size())
    throw Error(ErrorKind::LengthMismatch,
                "series lengths differ: P " + std::to_string(P.size()) + ", S " +
                    std::to_string(S.size()) + ", N " + std::to_string(N.size()));
  if (crK < 1) throw Error(ErrorKind::InvalidArgument, "crossing number must be positive");
  BoundReport r;
  const std::size_t shift = 6 * static_cast<std::size_t>(crK);
  std::optional<mpq_class> min_ratio;
  for (std::size_t i = 0; i + shift < P.size(); ++i) {
    const std::string n = std::to_string(i + 1), m = std::to_string(i + 1 + shift);
    r.checks.push_back(make_check("recursion_n" + n,
                                  "S_" + m + " >= P_" + n + " - S_" + n + " - N_" + n,
                                  mpq_class(S[i + shift]), ">=", mpq_class(P[i] - S[i] - N[i])));
    if (sgn(P[i]) > 0) {
      mpq_class ratio(P[i + shift], P[i]);
      ratio.canonicalize();
      if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
    }
  }
  if (min_ratio) r.implied_bound = 1 / (1 + *min_ratio);
  r.checks.push_back(threshold_check("threshold_c" + std::to_string(crK), shift, 7 * crK));
  return r;
}

BoundReport theorem1_recursion_check(const CensusTable& t, int crK,
                                     const std::vector<mpz_class>& S,
                                     const std::vector<mpz_class>& N) {
  std::vector<mpz_class> P;
  for (const auto& row : t.rows) P.emplace_back(std::to_string(row.cumulative));
  return theorem1_recursion_check(P, crK, S, N);
}

mpq_class regularity_budget(const mpz_class& card, const mpq_class& x) {
  if (sgn(x) <= 0 || x > 1) throw Error(ErrorKind::XOutOfRange, "x must lie in (0, 1]");
  if (sgn(card) < 0) throw Error(ErrorKind::InvalidArgument, "card must be non-negative");
  mpq_class out = mpq_class(card) / (152 * x);
  out.canonicalize();
  return out;
}

bool lackenby_check(const std::vector<long>& factor_crossings, long composite_crossings) {
  if (factor_crossings.empty() || composite_crossings <= 0)
    throw Error(ErrorKind::InvalidArgument, "need factors and a positive composite count");
  mpz_class sum = 0;
  for (long f : factor_crossings) {
    if (f <= 0) throw Error(ErrorKind::InvalidArgument, "factor crossings must be positive");
    sum += f;
  }
  mpq_class lhs(sum, 152);
  lhs.canonicalize();
  return lhs <= mpq_class(composite_crossings);
}

mpq_class parse_rational(const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::InvalidArgument, "not a rational number: " + text); };
  if (text.empty()) throw bad();
  try {
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      if (text.find('/') != std::string::npos) throw bad();
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const std::size_t frac = text.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw bad();
      if (digits[0] == '+') digits.erase(0, 1);
      mpz_class num(digits, 10), den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    std::string t = text[0] == '+' ? text.substr(1) : text;
    mpq_class q(t, 10);
    if (sgn(q.get_den()) == 0) throw bad();
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

}  // namespace knotkit
