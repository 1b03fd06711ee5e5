#include <doctest.h>

#include <random>

#include "knotkit/census.hpp"
#include "knotkit/error.hpp"
#include "knotkit/invariants.hpp"
#include "knotkit/moves.hpp"
#include "knotkit/structure.hpp"
#include "support/random_moves.hpp"

using namespace knotkit;

TEST_SUITE("moves") {

TEST_CASE("200 random move sequences keep the Jones polynomial") {
  std::mt19937 rng(20240611);
  const auto base = corpus::move_starts();
  std::map<MoveKind, int> applied;
  for (int run = 0; run < 200; ++run) {
    Diagram d = base[run % base.size()];
    const LaurentPoly v = jones(d);
    MoveTrace trace;
    trace.crossings_before = d.crossing_count();
    const Diagram start = d;
    for (int step = 0, tries = 0; step < 12 && tries < 400; ++tries) {
      Move m;
      auto next = corpus::random_move(d, rng, m, 10);
      if (!next) continue;
      REQUIRE(next->crossing_count() <= 10);
      if (m.kind == MoveKind::R1Add)
        CHECK(kauffman_bracket(*next) == kauffman_bracket(d) * r1_factor(m.a));
      if (m.kind == MoveKind::R1Remove) {
        const int s = d.sign(m.site);
        CHECK(kauffman_bracket(*next) * r1_factor(s) == kauffman_bracket(d));
      }
      m.crossings_before = d.crossing_count();
      m.crossings_after = next->crossing_count();
      trace.moves.push_back(m);
      d = std::move(*next);
      ++applied[m.kind];
      ++step;
      CAPTURE(run);
      CAPTURE(emit_pd(d));
      REQUIRE(jones(d) == v);
    }
    trace.crossings_after = d.crossing_count();
    CHECK(replay(start, trace) == d);
  }
  for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove,
                     MoveKind::R3}) {
    CAPTURE(to_string(k));
    CHECK(applied[k] > 0);
  }
}

TEST_CASE("R3 keeps the bracket itself") {
  // Alternating diagrams have no R3 triangles, so sweep every small diagram.
  int done = 0;
  for (int n = 3; n <= 4; ++n)
    for (const Shadow& s : enumerate_shadows(n))
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const Diagram d = shadow_diagram(s, mask);
        const FaceSet fs = faces(d);
        for (int f = 0; f < fs.size(); ++f)
          for (int rot = 0; rot < 3; ++rot)
            if (auto e = r3(d, f, rot)) {
              CHECK(kauffman_bracket(*e) == kauffman_bracket(d));
              CHECK(e->crossing_count() == d.crossing_count());
              ++done;
            }
      }
  CHECK(done > 0);
}

TEST_CASE("R2 pairs cancel") {
  const Diagram t = corpus::diagram("3_1");
  const FaceSet fs = faces(t);
  int done = 0;
  for (int f = 0; f < fs.size(); ++f) {
    const auto& darts = fs.faces[f];
    for (const auto& pa : darts)
      for (const auto& pb : darts) {
        const int a = t.edge_at(pa), b = t.edge_at(pb);
        auto added = r2_add(t, f, a, b, true);
        if (!added) continue;
        ++done;
        CHECK(added->crossing_count() == 5);
        CHECK(kauffman_bracket(*added) == kauffman_bracket(t));
        const auto [back, trace] = simplify(*added);
        CHECK(back.crossing_count() == 3);
        CHECK(same_diagram(back, t));
      }
  }
  CHECK(done > 0);
}

TEST_CASE("normalize_writhe") {
  for (const auto& e : corpus::knots()) {
    const Diagram d = parse_pd(e.pd);
    const auto [n, trace] = normalize_writhe(d);
    CHECK(writhe(n) == 0);
    CHECK(n.crossing_count() == d.crossing_count() + std::abs(writhe(d)));
    CHECK(jones(n) == jones(d));
    CHECK(static_cast<int>(trace.moves.size()) == std::abs(writhe(d)));
    CHECK(replay(d, trace) == n);
  }
  CHECK_THROWS_AS(normalize_writhe(corpus::diagram("hopf")), Error);
}

TEST_CASE("kinks on free loops and removal") {
  const Diagram k = r1_add(Diagram::unknot(), free_loop_edge(0), 1);
  CHECK(k.crossing_count() == 1);
  CHECK(writhe(k) == 1);
  const auto back = r1_remove(k, 0);
  REQUIRE(back);
  CHECK(back->crossing_count() == 0);
  CHECK(back->free_loops() == 1);
  CHECK_FALSE(r1_remove(corpus::diagram("3_1"), 0));
}

TEST_CASE("move names") {
  for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove,
                     MoveKind::R3, MoveKind::Reduce4to2})
    CHECK(move_kind_from_string(to_string(k)) == k);
  CHECK(to_string(MoveKind::R1Add) == "R1+");
  CHECK_THROWS_AS(move_kind_from_string("R4"), Error);
}

TEST_CASE("untagged input is refused by the quadruple reduction") {
  const Diagram tagged = r1_add(corpus::diagram("3_1"), 0, 1);
  CHECK_THROWS_AS(reduce_kink_quadruples(tagged), Error);
  const auto [same, trace] = reduce_kink_quadruples(corpus::diagram("3_1"));
  CHECK(same == corpus::diagram("3_1"));
  CHECK(trace.empty());
}

}  // TEST_SUITE
