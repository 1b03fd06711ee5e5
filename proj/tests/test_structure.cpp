#include <doctest.h>

#include <set>

#include "knotkit/census.hpp"
#include "knotkit/error.hpp"
#include "knotkit/invariants.hpp"
#include "knotkit/structure.hpp"
#include "support/corpus.hpp"

using namespace knotkit;

TEST_SUITE("structure") {

TEST_CASE("primality matches the bond oracle on every diagram up to 5 crossings") {
  int composite = 0, total = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Shadow& s : enumerate_shadows(n)) {
      const std::uint32_t masks = n <= 4 ? (1u << n) : 2;
      for (std::uint32_t mask = 0; mask < masks; ++mask) {
        const Diagram d = shadow_diagram(s, mask);
        const bool expected = oracle::prime_by_bonds(oracle::tuples_of(d));
        const PrimeResult r = is_prime_diagram(d);
        CAPTURE(emit_pd(d));
        REQUIRE(r.prime == expected);
        ++total;
        if (r.prime) continue;
        ++composite;
        REQUIRE(r.witness);
        CHECK_FALSE(r.witness->simple());
        const int pieces = oracle::pieces_without(oracle::tuples_of(d), {r.witness->e1, r.witness->e2});
        CHECK(pieces == 2);
      }
    }
  CHECK(total > 300);
  CHECK(composite > 0);
}

TEST_CASE("cut circles run through two faces shared by both edges") {
  for (const auto& e : corpus::knots()) {
    const Diagram d = parse_pd(e.pd);
    const FaceSet fs = faces(d);
    for (const CutCircle& c : enumerate_cut_circles(d)) {
      const std::set<int> f1{right_face(d, fs, c.e1), left_face(d, fs, c.e1)};
      const std::set<int> f2{right_face(d, fs, c.e2), left_face(d, fs, c.e2)};
      CHECK(f1 == f2);
      CHECK(f1.count(c.face1) == 1);
      CHECK(f1.count(c.face2) == 1);
      CHECK(static_cast<int>(c.side_a.size() + c.side_b.size()) == d.crossing_count());
    }
  }
  CHECK_THROWS_AS(enumerate_cut_circles(parse_pd("X(1,1,2,2) X(3,3,4,4)")), Error);
}

TEST_CASE("connected sums are detected and split") {
  const Diagram t = corpus::diagram("3_1");
  const Diagram f = corpus::diagram("4_1");
  const Diagram tf = connected_sum(t, f);
  CHECK(tf.crossing_count() == 7);
  CHECK(tf.component_count() == 1);
  CHECK_FALSE(is_prime_diagram(tf).prime);
  CHECK(jones(tf) == jones(t) * jones(f));

  const auto parts = split_connected_sum(tf);
  REQUIRE(parts.size() == 2);
  int sum = 0;
  LaurentPoly product = 1;
  for (const auto& p : parts) {
    CHECK(is_prime_diagram(p).prime);
    sum += p.crossing_count();
    product *= jones(p);
  }
  CHECK(sum == 7);
  CHECK(product == jones(tf));

  const Diagram three = connected_sum(connected_sum(t, mirror(t), 2, 1), corpus::diagram("5_2"), 4, 3);
  const auto pieces = split_connected_sum(three);
  CHECK(pieces.size() == 3);
  int total = 0;
  for (const auto& p : pieces) total += p.crossing_count();
  CHECK(total == three.crossing_count());

  // A link summand keeps its components.
  const Diagram hk = connected_sum(corpus::diagram("hopf"), t);
  CHECK(hk.component_count() == 2);
  CHECK(split_connected_sum(hk).size() == 2);
  CHECK(split_connected_sum(t).size() == 1);
}

TEST_CASE("tangle extraction and gluing are inverse") {
  for (const auto* list : {&corpus::knots(), &corpus::links()})
    for (const auto& e : *list) {
      CAPTURE(e.name);
      const Diagram d = parse_pd(e.pd);
      const CompanionDisk disk = find_companion_disk(d);
      const auto [inside, outside] = extract_tangle(d, disk);
      CHECK(inside.crossing_count() == 0);
      CHECK(outside.crossing_count() == d.crossing_count());
      CHECK(glue(inside, outside) == d);
      CHECK(outside.strings_cross());
    }
}

TEST_CASE("companion disks") {
  const Diagram hopf = corpus::diagram("hopf");
  const CompanionDisk hd = find_companion_disk(hopf);
  CHECK(hd.component1 != hd.component2);
  CHECK(hd.crossing == 0);
  CHECK(hd.inner_face != hd.outer_face);

  const Diagram t = corpus::diagram("3_1");
  const CompanionDisk td = find_companion_disk(t);
  CHECK(td.component1 == 0);
  CHECK(td.component2 == 0);
  CHECK(passes_screen(extract_tangle(t, td).second));
  CHECK(make_disk(t, td.face, td.e1, td.e2) == td);

  CHECK_THROWS_AS(make_disk(t, 0, 0, 99), Error);
  CHECK_THROWS_AS(find_companion_disk(parse_pd("X(1,1,2,2) X(3,3,4,4)")), Error);
}

TEST_CASE("closures of a crossingless tangle") {
  const Diagram t = corpus::diagram("3_1");
  const auto [inside, outside] = extract_tangle(t, find_companion_disk(t));
  // The inside joins p1-p2 and p3-p4.
  const auto s = inside.strings();
  CHECK(((s[0] == std::pair{0, 1} && s[1] == std::pair{2, 3}) ||
         (s[0] == std::pair{2, 3} && s[1] == std::pair{0, 1})));
  CHECK(numerator_closure(inside).component_count() == 2);
  CHECK(denominator_closure(inside).component_count() == 1);
}

}  // TEST_SUITE
