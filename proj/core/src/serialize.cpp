#include "knotkit/serialize.hpp"

#include "knotkit/error.hpp"

namespace knotkit {

namespace {

std::string rational_string(const mpq_class& q) { return q.get_str(); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::MalformedCode, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedCode, std::string("bad field '") + key + "': " + e.what());
  }
}

template <typename T>
T field_or(const json& j, const char* key, T fallback) {
  return j.is_object() && j.contains(key) ? field<T>(j, key) : fallback;
}

}  // namespace

void to_json(json& j, const CrossingTag& t) {
  j = json{{"group", t.group},
           {"gx", t.gx},
           {"gy", t.gy},
           {"south_slot", t.south_slot},
           {"kink_sign", t.kink_sign}};
}

void from_json(const json& j, CrossingTag& t) {
  t.group = field<int>(j, "group");
  t.gx = static_cast<std::int8_t>(field<int>(j, "gx"));
  t.gy = static_cast<std::int8_t>(field<int>(j, "gy"));
  t.south_slot = static_cast<std::int8_t>(field<int>(j, "south_slot"));
  t.kink_sign = static_cast<std::int8_t>(field<int>(j, "kink_sign"));
}

void to_json(json& j, const Diagram& d) {
  json pd = json::array();
  for (const Tuple& t : d.crossings()) pd.push_back({t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1});
  j = json{{"pd", pd},
           {"free_loops", d.free_loops()},
           {"crossings", d.crossing_count()},
           {"components", d.component_count()},
           {"writhe", writhe(d)}};
  if (d.has_tags()) j["tags"] = d.tags();
}

void from_json(const json& j, Diagram& d) {
  const auto pd = field<std::vector<std::array<int, 4>>>(j, "pd");
  const int loops = field_or<int>(j, "free_loops", 0);
  auto tags = field_or<std::vector<CrossingTag>>(j, "tags", {});
  d = Diagram::from_tuples(pd, loops, std::move(tags));
}

json laurent_json(const LaurentPoly& p, std::string_view var, int exponent_scale) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
  return json{{"variable", std::string(var)},
              {"exponent_scale", exponent_scale},
              {"terms", terms},
              {"text", p.to_string(var, exponent_scale)}};
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  const json terms = field<json>(j, "terms");
  if (!terms.is_array()) throw Error(ErrorKind::MalformedCode, "terms must be an array");
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw Error(ErrorKind::MalformedCode, "term must be [exponent, coefficient]");
    mpz_class c;
    try {
      c = t[1].is_string() ? mpz_class(t[1].get<std::string>()) : mpz_class(t[1].get<long>());
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedCode, "bad coefficient");
    }
    p += LaurentPoly::monomial(c, t[0].get<int>());
  }
  return p;
}

void to_json(json& j, const Move& m) {
  j = json{{"kind", std::string(to_string(m.kind))},
           {"site", m.site},
           {"a", m.a},
           {"b", m.b},
           {"c", m.c},
           {"crossings_before", m.crossings_before},
           {"crossings_after", m.crossings_after}};
}

void from_json(const json& j, Move& m) {
  m.kind = move_kind_from_string(field<std::string>(j, "kind"));
  m.site = field<int>(j, "site");
  m.a = field_or<int>(j, "a", 0);
  m.b = field_or<int>(j, "b", 0);
  m.c = field_or<int>(j, "c", 0);
  m.crossings_before = field_or<int>(j, "crossings_before", 0);
  m.crossings_after = field_or<int>(j, "crossings_after", 0);
}

void to_json(json& j, const MoveTrace& t) {
  j = json{{"crossings_before", t.crossings_before},
           {"crossings_after", t.crossings_after},
           {"moves", t.moves}};
}

void from_json(const json& j, MoveTrace& t) {
  t.crossings_before = field<int>(j, "crossings_before");
  t.crossings_after = field<int>(j, "crossings_after");
  t.moves = field<std::vector<Move>>(j, "moves");
}

void to_json(json& j, const CutCircle& c) {
  j = json{{"e1", c.e1},         {"e2", c.e2},         {"face1", c.face1},
           {"face2", c.face2},   {"side_a", c.side_a}, {"side_b", c.side_b},
           {"simple", c.simple()}};
}

void to_json(json& j, const PrimeResult& r) {
  j = json{{"prime", r.prime}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
}

void to_json(json& j, const CompanionDisk& d) {
  j = json{{"crossing", d.crossing},     {"face", d.face},
           {"e1", d.e1},                 {"e2", d.e2},
           {"component1", d.component1}, {"component2", d.component2},
           {"inner_face", d.inner_face}, {"outer_face", d.outer_face}};
}

void from_json(const json& j, CompanionDisk& d) {
  d.crossing = field<int>(j, "crossing");
  d.face = field<int>(j, "face");
  d.e1 = field<int>(j, "e1");
  d.e2 = field<int>(j, "e2");
  d.component1 = field<int>(j, "component1");
  d.component2 = field<int>(j, "component2");
  d.inner_face = field<int>(j, "inner_face");
  d.outer_face = field<int>(j, "outer_face");
}

void to_json(json& j, const Tangle& t) {
  j = json{{"crossings", t.crossings},
           {"boundary", t.boundary},
           {"free_loops", t.free_loops}};
  if (!t.tags.empty()) j["tags"] = t.tags;
}

void from_json(const json& j, Tangle& t) {
  t.crossings = field<std::vector<Tuple>>(j, "crossings");
  t.boundary = field<std::array<int, 4>>(j, "boundary");
  t.free_loops = field_or<int>(j, "free_loops", 0);
  t.tags = field_or<std::vector<CrossingTag>>(j, "tags", {});
}

void to_json(json& j, const AnnularDiagram& a) {
  j = json{{"diagram", a.diagram},
           {"inner_face", a.inner_face},
           {"outer_face", a.outer_face},
           {"marked_arcs", a.marked_arcs},
           {"essential_loops", a.essential_loops},
           {"winding", a.winding}};
}

void from_json(const json& j, AnnularDiagram& a) {
  a.diagram = field<Diagram>(j, "diagram");
  a.inner_face = field<int>(j, "inner_face");
  a.outer_face = field<int>(j, "outer_face");
  a.marked_arcs = field<std::array<int, 2>>(j, "marked_arcs");
  a.essential_loops = field_or<int>(j, "essential_loops", 0);
  a.winding = field_or<std::vector<int>>(j, "winding", {});
}

void to_json(json& j, const SatelliteResult& r) {
  j = json{{"diagram", r.diagram},
           {"pattern_crossings", r.pattern_crossings},
           {"companion_crossings", r.companion_crossings},
           {"normalized_companion_crossings", r.normalized_companion_crossings},
           {"raw", r.raw_crossings},
           {"reduced", r.reduced_crossings},
           {"reduction_applied", r.reduced},
           {"framing", verify_zero_framing(r)},
           {"framing_linking", r.framing_linking},
           {"wrapping", r.wrapping},
           {"wrapping_after", r.wrapping_after},
           {"reliable", r.reliable},
           {"normalize_trace", r.normalize_trace},
           {"reduce_trace", r.reduce_trace}};
}

void to_json(json& j, const Fingerprint& f) {
  j = json{{"components", f.components},
           {"abs_linking", f.abs_linking},
           {"jones", laurent_json(f.jones, "t", 2)},
           {"key", f.to_string()}};
}

void to_json(json& j, const BoundCheck& c) {
  j = json{{"name", c.name},
           {"statement", c.statement},
           {"lhs", rational_string(c.lhs)},
           {"relation", c.relation},
           {"rhs", rational_string(c.rhs)},
           {"pass", c.pass}};
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"all_pass", r.all_pass()}, {"checks", r.checks}};
  j["implied_bound"] = r.implied_bound ? json(rational_string(*r.implied_bound)) : json(nullptr);
}

void to_json(json& j, const CensusRow& r) {
  j = json{{"n", r.n},
           {"rooted_maps", r.rooted_maps},
           {"shadows", r.shadows},
           {"prime_shadows", r.prime_shadows},
           {"diagrams", r.diagrams},
           {"prime_diagrams", r.prime_diagrams},
           {"buckets", r.buckets},
           {"new_buckets", r.new_buckets},
           {"cumulative", r.cumulative}};
}

void from_json(const json& j, CensusRow& r) {
  r.n = field<int>(j, "n");
  r.rooted_maps = field<std::uint64_t>(j, "rooted_maps");
  r.shadows = field<std::uint64_t>(j, "shadows");
  r.prime_shadows = field<std::uint64_t>(j, "prime_shadows");
  r.diagrams = field<std::uint64_t>(j, "diagrams");
  r.prime_diagrams = field<std::uint64_t>(j, "prime_diagrams");
  r.buckets = field<std::uint64_t>(j, "buckets");
  r.new_buckets = field<std::uint64_t>(j, "new_buckets");
  r.cumulative = field<std::uint64_t>(j, "cumulative");
}

void to_json(json& j, const CensusTable& t) {
  json buckets = json::array();
  for (std::size_t i = 0; i < t.buckets.size(); ++i)
    for (const auto& [fp, count] : t.buckets[i])
      buckets.push_back({{"n", t.rows[i].n}, {"count", count}, {"fingerprint", fp}});
  j = json{{"format", t.format},
           {"generator", t.generator},
           {"identify_mirrors", t.identify_mirrors},
           {"note", "buckets are a lower bound on distinct link classes"},
           {"rows", t.rows},
           {"buckets", buckets}};
}

void from_json(const json& j, CensusTable& t) {
  t.format = field<std::string>(j, "format");
  t.generator = field_or<std::string>(j, "generator", "");
  t.identify_mirrors = field<bool>(j, "identify_mirrors");
  t.rows = field<std::vector<CensusRow>>(j, "rows");
  t.buckets.assign(t.rows.size(), {});
  for (const auto& b : field_or<json>(j, "buckets", json::array())) {
    const int n = field<int>(b, "n");
    if (n < 1 || n > static_cast<int>(t.rows.size()))
      throw Error(ErrorKind::MalformedCode, "bucket for a missing row");
    t.buckets[n - 1][field<std::string>(b, "fingerprint")] = field<std::uint64_t>(b, "count");
  }
}

}  // namespace knotkit
