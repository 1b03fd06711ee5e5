#include <doctest.h>

#include "knotkit/error.hpp"
#include "knotkit/serialize.hpp"
#include "support/corpus.hpp"

using namespace knotkit;

namespace {

template <class T>
T round_trip(const T& v) {
  const json j = v;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("diagrams") {
  for (const auto* list : {&corpus::knots(), &corpus::links()})
    for (const auto& e : *list) {
      const Diagram d = parse_pd(e.pd);
      CHECK(round_trip(d) == d);
      const json j = d;
      CHECK(j["crossings"] == d.crossing_count());
      CHECK(j["writhe"] == writhe(d));
    }
  const Diagram u = Diagram::unknot(2);
  CHECK(round_trip(u) == u);

  const Diagram tagged = r1_add(corpus::diagram("3_1"), 0, -1);
  REQUIRE(tagged.has_tags());
  CHECK(round_trip(tagged) == tagged);
}

TEST_CASE("pd labels are 1-based") {
  const json j = corpus::diagram("hopf");
  for (const auto& x : j["pd"])
    for (const auto& l : x) CHECK(l.get<int>() >= 1);
}

TEST_CASE("bad diagram json") {
  for (const char* text : {R"({"pd": 3})", R"({"pd": [[1,2,3]]})", R"({"free_loops": 1})",
                           R"({"pd": [[1,1,2,3],[2,4,3,4]]})"}) {
    CAPTURE(text);
    try {
      (void)json::parse(text).get<Diagram>();
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK((e.kind() == ErrorKind::MalformedCode || e.kind() == ErrorKind::NonPlanar));
    }
  }
}

TEST_CASE("move traces") {
  const auto [n, trace] = normalize_writhe(corpus::diagram("5_2"));
  const MoveTrace back = round_trip(trace);
  REQUIRE(back.moves.size() == trace.moves.size());
  for (std::size_t i = 0; i < back.moves.size(); ++i) CHECK(back.moves[i] == trace.moves[i]);
  CHECK(back.crossings_before == trace.crossings_before);
  CHECK(back.crossings_after == trace.crossings_after);
  CHECK(replay(corpus::diagram("5_2"), back) == n);
  const json j = trace;
  CHECK(j["moves"][0]["kind"].get<std::string>().rfind("R1", 0) == 0);
  CHECK_THROWS_AS((void)json::parse(R"({"kind": "R9", "site": 0})").get<Move>(), Error);
}

TEST_CASE("disks, tangles and annular diagrams") {
  const Diagram t = corpus::diagram("4_1");
  const CompanionDisk disk = find_companion_disk(t);
  CHECK(round_trip(disk) == disk);
  const auto [inside, outside] = extract_tangle(t, disk);
  CHECK(round_trip(inside) == inside);
  CHECK(round_trip(outside) == outside);
  const AnnularDiagram a = annular_embed(t, disk);
  CHECK(round_trip(a) == a);
  const AnnularDiagram c = core_circles(2);
  CHECK(round_trip(c) == c);
}

TEST_CASE("census tables") {
  const CensusTable t = enumerate_diagrams(3);
  CHECK(round_trip(t) == t);
  const json j = t;
  CHECK(j["rows"].size() == 3);
}

TEST_CASE("polynomials") {
  const LaurentPoly v = jones(corpus::diagram("5_2"));
  const json j = laurent_json(v, "t", 2);
  CHECK(j["variable"] == "t");
  CHECK(j["exponent_scale"] == 2);
  CHECK(laurent_from_json(j) == v);
  const LaurentPoly b = kauffman_bracket(corpus::diagram("whitehead"));
  CHECK(laurent_from_json(json::parse(laurent_json(b).dump())) == b);
  CHECK(laurent_from_json(laurent_json(LaurentPoly())) == LaurentPoly());
}

TEST_CASE("satellite and bound reports have the documented keys") {
  const Diagram hopf = corpus::diagram("hopf");
  const SatelliteResult r = entangle(annular_embed(hopf, find_companion_disk(hopf)), corpus::diagram("4_1"));
  const json j = r;
  for (const char* k : {"diagram", "raw", "reduced", "framing", "wrapping", "reliable"}) CHECK(j.contains(k));
  CHECK(j["framing"] == true);
  const json b = evaluate_constants();
  CHECK(b["checks"].size() == evaluate_constants().checks.size());
  CHECK(b["implied_bound"].is_null());
}

}  // TEST_SUITE
