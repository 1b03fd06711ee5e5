#include <doctest.h>

#include "knotkit/bounds.hpp"
#include "knotkit/error.hpp"

using namespace knotkit;

namespace {

const BoundCheck& find(const BoundReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

std::vector<mpz_class> powers_of_two(int len) {
  std::vector<mpz_class> out;
  for (int n = 1; n <= len; ++n) out.push_back(mpz_class(1) << n);
  return out;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("growth constants") {
  const BoundReport r = evaluate_constants();
  CHECK(r.all_pass());
  const auto& st = find(r, "stoimenow_growth");
  CHECK(st.lhs == 13681);
  CHECK(st.rhs == 13689);
  const auto& sth = find(r, "sundberg_thistlethwaite_growth");
  CHECK(sth.rhs == mpq_class(522729, 25));  // 20909.16
  CHECK(sth.pass);
  for (int c = 1; c <= 20; ++c) CHECK(find(r, "prime_threshold_c" + std::to_string(c)).pass);
  for (int c = 6; c <= 20; ++c) CHECK(find(r, "composite_threshold_c" + std::to_string(c)).pass);
  const auto& cor = find(r, "corollary2");
  CHECK(cor.pass);
  CHECK(cor.rhs == mpq_class(mpz_class("10000000000000000000")));
}

TEST_CASE("the first composite exponent step needs c >= 6") {
  // 24c + 6 <= 25c fails for c = 5; the report only lists c >= 6.
  const BoundReport r = evaluate_constants();
  CHECK_THROWS(find(r, "composite_exponent_c5"));
  CHECK(find(r, "composite_exponent_c6").lhs == find(r, "composite_exponent_c6").rhs);
}

TEST_CASE("recursion on synthetic series") {
  const auto P = powers_of_two(20);
  const std::vector<mpz_class> zero(20, 0);
  const BoundReport r = theorem1_recursion_check(P, 1, zero, zero);
  REQUIRE(r.implied_bound);
  CHECK(*r.implied_bound == mpq_class(1, 65));
  // S = 0 cannot satisfy S_{n+6} >= 2^n.
  const auto& first = find(r, "recursion_n1");
  CHECK_FALSE(first.pass);
  CHECK(first.rhs == 2);

  // S_{n+6} = P_n satisfies every instance.
  std::vector<mpz_class> S(20, 0);
  for (int i = 0; i + 6 < 20; ++i) S[i + 6] = P[i];
  std::vector<mpz_class> N(20, 0);
  for (int i = 0; i < 20; ++i) N[i] = P[i] - S[i];  // keeps the right side at zero or below
  const BoundReport ok = theorem1_recursion_check(P, 1, S, N);
  CHECK(ok.all_pass());

  CHECK_THROWS_AS(theorem1_recursion_check(P, 1, zero, std::vector<mpz_class>(19, 0)), Error);
  try {
    theorem1_recursion_check(P, 1, zero, std::vector<mpz_class>(19, 0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
}

TEST_CASE("corollary threshold for crK = 3") {
  const auto P = powers_of_two(30);
  const std::vector<mpz_class> zero(30, 0);
  const BoundReport r = theorem1_recursion_check(P, 3, zero, zero);
  const auto& th = find(r, "threshold_c3");
  CHECK(th.pass);
  // 1 + 10.4^18 = (52^18 + 5^18) / 5^18
  CHECK(th.lhs == mpq_class(mpz_class("7727876721872448750606219012569"), mpz_class("3814697265625")));
  // The corollary states the sharper 10^-19 as well.
  CHECK(find(evaluate_constants(), "corollary2").pass);
}

TEST_CASE("regularity budget") {
  CHECK(regularity_budget(114, mpq_class(3, 4)) == 1);
  CHECK(regularity_budget(0, mpq_class(1, 2)) == 0);
  CHECK(regularity_budget(152, 1) == 1);
  CHECK(regularity_budget(1, 1) == mpq_class(1, 152));
  for (const mpq_class& x : {mpq_class(0), mpq_class(-1, 2), mpq_class(3, 2)}) {
    try {
      regularity_budget(1, x);
      FAIL("accepted x outside (0, 1]");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::XOutOfRange);
    }
  }
}

TEST_CASE("Lackenby inequality") {
  CHECK(lackenby_check({3, 3}, 6));
  CHECK(lackenby_check({152}, 1));
  CHECK_FALSE(lackenby_check({304}, 1));
  CHECK_THROWS_AS(lackenby_check({0}, 1), Error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("0.75") == mpq_class(3, 4));
  CHECK(parse_rational("6/8") == mpq_class(3, 4));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("-1.5") == mpq_class(-3, 2));
  for (const char* bad : {"", "x", "1/0", "1.2.3", "3/4.0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

}  // TEST_SUITE
