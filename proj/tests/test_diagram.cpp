#include <doctest.h>

#include "knotkit/diagram.hpp"
#include "knotkit/error.hpp"
#include "support/census_oracle.hpp"
#include "support/corpus.hpp"

using namespace knotkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("parse and emit round trip") {
  for (const auto* list : {&corpus::knots(), &corpus::links()})
    for (const auto& e : *list) {
      CAPTURE(e.name);
      const Diagram d = parse_pd(e.pd);
      CHECK(parse_pd(emit_pd(d)) == d);
      CHECK(d.is_connected());
    }
  const Diagram wrapped = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
  CHECK(wrapped == parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
  const Diagram loops = parse_pd("O O");
  CHECK(loops.crossing_count() == 0);
  CHECK(loops.component_count() == 2);
  CHECK(emit_pd(loops) == "O O");
}

TEST_CASE("malformed codes are rejected") {
  CHECK(kind_of([] { parse_pd("X(1,2,3,4)"); }) == ErrorKind::MalformedCode);
  CHECK(kind_of([] { parse_pd("X(1,1,1,2) X(2,3,3,4)"); }) == ErrorKind::MalformedCode);
  CHECK(kind_of([] { parse_pd("hello"); }) == ErrorKind::MalformedCode);
  CHECK(kind_of([] { parse_pd(""); }) == ErrorKind::EmptyDiagram);
  CHECK(kind_of([] { parse_pd("X(1,1,2,3) X(2,4,3,4)"); }) == ErrorKind::NonPlanar);
}

TEST_CASE("every non-planar 2-vertex rotation system is rejected") {
  // All matchings of 8 darts that are connected but miss Euler's formula.
  std::vector<int> p(8, -1);
  int rejected = 0;
  std::function<void()> rec = [&] {
    int d = 0;
    while (d < 8 && p[d] >= 0) ++d;
    if (d == 8) {
      if (oracle::detail::connected(p) && oracle::detail::face_count(p) != 4) {
        const auto t = oracle::detail::shadow_tuples(p, {0, 0});
        CHECK(kind_of([&] { Diagram::from_unoriented_tuples(t); }) == ErrorKind::NonPlanar);
        ++rejected;
      }
      return;
    }
    for (int e = d + 1; e < 8; ++e)
      if (p[e] < 0) {
        p[d] = e;
        p[e] = d;
        rec();
        p[d] = p[e] = -1;
      }
  };
  rec();
  CHECK(rejected > 0);
}

TEST_CASE("writhe and signs agree with a walk over the raw tuples") {
  for (const auto* list : {&corpus::knots(), &corpus::links()})
    for (const auto& e : *list) {
      CAPTURE(e.name);
      const Diagram d = parse_pd(e.pd);
      const auto s = oracle::signs(oracle::tuples_of(d));
      for (int c = 0; c < d.crossing_count(); ++c) CHECK(d.sign(c) == s[c]);
    }
  CHECK(writhe(corpus::diagram("3_1")) == -3);
  CHECK(writhe(corpus::diagram("4_1")) == 0);
  CHECK(writhe(mirror(corpus::diagram("3_1"))) == 3);
}

TEST_CASE("linking numbers") {
  const Diagram hopf = corpus::diagram("hopf");
  const LinkingMatrix lk = linking_matrix(hopf);
  REQUIRE(lk.size() == 2);
  CHECK(std::abs(lk(0, 1)) == 1);
  CHECK(lk(0, 1) == lk(1, 0));
  CHECK(linking_matrix(corpus::diagram("whitehead"))(0, 1) == 0);
  CHECK(std::abs(linking_matrix(corpus::diagram("L4a1"))(0, 1)) == 2);
  // Reversing one component flips the linking number.
  CHECK(linking_matrix(reverse_component(hopf, 1))(0, 1) == -lk(0, 1));
}

TEST_CASE("faces satisfy Euler's formula and the right/left rule") {
  for (const auto* list : {&corpus::knots(), &corpus::links()})
    for (const auto& e : *list) {
      const Diagram d = parse_pd(e.pd);
      const FaceSet fs = faces(d);
      CHECK(fs.size() == d.crossing_count() + 2);
      int of = 0;
      const auto ofaces = oracle::faces(oracle::tuples_of(d), &of);
      CHECK(of == fs.size());
      for (int dart = 0; dart < 4 * d.crossing_count(); ++dart)
        CHECK(fs.face_of_dart[dart] == ofaces[dart]);
      for (int edge = 0; edge < d.edge_count(); ++edge) {
        CHECK(right_face(d, fs, edge) == fs.face_of(d.tail(edge)));
        CHECK(left_face(d, fs, edge) == fs.face_of(d.head(edge)));
      }
    }
}

TEST_CASE("components and pieces") {
  const Diagram two = parse_pd("X(1,1,2,2) X(3,3,4,4) O");
  CHECK(two.piece_count() == 3);
  CHECK(two.component_count() == 3);
  CHECK(two.free_loops() == 1);
  CHECK_FALSE(two.is_connected());
  const Diagram w = corpus::diagram("whitehead");
  CHECK(w.component_count() == 2);
  int total = 0;
  for (int c = 0; c < 2; ++c) total += static_cast<int>(w.component_edges(c).size());
  CHECK(total == w.edge_count());
}

TEST_CASE("canonical keys") {
  const Diagram t = corpus::diagram("3_1");
  // Relabelling and reordering crossings give the same key.
  auto tuples = oracle::tuples_of(t);
  std::reverse(tuples.begin(), tuples.end());
  for (auto& x : tuples)
    for (int& l : x) l = 50 - 3 * l;
  const Diagram relabelled = Diagram::from_tuples(tuples);
  CHECK(relabelled.crossing(0) != t.crossing(0));
  CHECK(same_diagram(t, relabelled));
  CHECK_FALSE(same_diagram(t, mirror(t)));
  CHECK(same_diagram(t, mirror(t), {.allow_reflection = false, .allow_mirror = true}));
  // Reflecting the sphere turns the trefoil picture into its mirror picture;
  // reflection paired with a crossing swap keeps the knot type, so it cannot.
  CHECK(same_diagram(t, mirror(t), {.allow_reflection = true}));
  CHECK_FALSE(same_diagram(t, mirror(t), {.allow_reflected_mirror = true}));
  CHECK_FALSE(same_diagram(t, corpus::diagram("4_1"), {true, true, true}));
  // Orientation does not enter the key.
  CHECK(same_diagram(corpus::diagram("hopf"), reverse_component(corpus::diagram("hopf"), 0)));
}

TEST_CASE("tags survive construction and can be dropped") {
  const Diagram d = parse_pd("X(1,2,2,1)");
  CHECK_FALSE(d.has_tags());
  std::vector<CrossingTag> tags{{.group = 0, .kink_sign = 1}};
  const Diagram tagged = Diagram::from_tuples(d.crossings(), 0, tags);
  CHECK(tagged.has_tags());
  CHECK(tagged.without_tags() == d);
}

}  // TEST_SUITE
