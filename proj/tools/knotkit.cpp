// knotkit command-line front end. One subcommand per run; JSON on stdout
// (or --out), human-readable with --pretty.
//
// Exit codes: 0 ok, 2 usage or unreadable input, 3 domain error, 4 budget.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "knotkit/bounds.hpp"
#include "knotkit/census.hpp"
#include "knotkit/error.hpp"
#include "knotkit/invariants.hpp"
#include "knotkit/moves.hpp"
#include "knotkit/satellite.hpp"
#include "knotkit/serialize.hpp"
#include "knotkit/structure.hpp"

using namespace knotkit;

namespace {

constexpr int kUsage = 2;
constexpr int kDomain = 3;
constexpr int kBudget = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// PD text, or a JSON diagram object as written by this tool.
Diagram load_diagram(const std::string& path) {
  const std::string text = read_input(path);
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::MalformedCode, path + ": " + e.what());
    }
    return (j.contains("diagram") ? j["diagram"] : j).get<Diagram>();
  }
  return parse_pd(text);
}

void write_atomic(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path);
    out << data;
  }
  std::filesystem::rename(tmp, path);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("text") && v["text"].is_string()) return v["text"];
  if (v.is_object() && v.contains("pd")) {
    std::string s;
    for (const auto& t : v["pd"])
      s += "X(" + std::to_string(t[0].get<int>()) + "," + std::to_string(t[1].get<int>()) + "," +
           std::to_string(t[2].get<int>()) + "," + std::to_string(t[3].get<int>()) + ") ";
    for (int i = 0; i < v.value("free_loops", 0); ++i) s += "O ";
    if (!s.empty()) s.pop_back();
    return s;
  }
  return v.dump();
}

bool is_leaf(const json& v) {
  return !v.is_object() || v.contains("text") || v.contains("pd");
}

void pretty_into(std::ostringstream& out, const json& j, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (!is_leaf(v)) {
      out << indent << key << ":\n";
      pretty_into(out, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object() && !v.front().contains("pd")) {
      out << indent << key << ":\n";
      for (const auto& item : v) {
        out << indent << "  -";
        if (item.contains("name") && item.contains("pass")) {
          out << ' ' << (item["pass"].get<bool>() ? "pass" : "FAIL") << "  "
              << item["name"].get<std::string>() << "  " << item.value("statement", "");
        } else {
          for (const auto& [k, x] : item.items()) out << ' ' << k << '=' << scalar_text(x);
        }
        out << '\n';
      }
    } else {
      out << indent << key << ": " << scalar_text(v) << '\n';
    }
  }
}

std::string pretty_text(const json& j) {
  if (!j.is_object()) return scalar_text(j) + "\n";
  std::ostringstream out;
  pretty_into(out, j, "");
  return out.str();
}

struct Output {
  bool pretty = false;
  std::string path;

  void emit(const json& j) const {
    const std::string text = pretty ? pretty_text(j) : j.dump(2) + "\n";
    if (path.empty()) std::cout << text;
    else write_atomic(path, text);
  }
};

std::vector<mpz_class> parse_series(const std::string& text) {
  std::vector<mpz_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw UsageError("not an integer: " + item);
    }
  }
  return out;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded: return kBudget;
    case ErrorKind::MalformedCode:
    case ErrorKind::NonPlanar:
    case ErrorKind::EmptyDiagram:
    case ErrorKind::InvalidArgument: return kUsage;
    default: return kDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotkit: link diagrams, satellites, censuses and bounds"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file supplying option values");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Output out;
  int budget = 24;
  int threads = 0;
  app.add_flag("--pretty", out.pretty, "Human-readable output instead of JSON");
  app.add_option("--out", out.path, "Write the result here (atomically) instead of stdout");
  app.add_option("--budget", budget, "Largest crossing count for state sums")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string in;
  auto add_in = [&](CLI::App* sub) {
    sub->add_option("--in", in, "PD text or JSON diagram ('-' for stdin)")->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse and check a PD code");
  add_in(validate);
  auto* writhe_cmd = app.add_subcommand("writhe", "Writhe and linking matrix");
  add_in(writhe_cmd);
  auto* normalize = app.add_subcommand("normalize", "Add kinks until the writhe is zero");
  add_in(normalize);
  auto* prime = app.add_subcommand("prime", "Diagrammatic primality");
  add_in(prime);
  auto* split = app.add_subcommand("split", "Split a diagram into prime factors");
  add_in(split);

  std::optional<int> face, e1, e2;
  auto add_disk = [&](CLI::App* sub) {
    auto* f = sub->add_option("--face", face, "Face holding the disk corner");
    auto* a = sub->add_option("--e1", e1, "First arc edge (0-based)");
    auto* b = sub->add_option("--e2", e2, "Second arc edge (0-based)");
    f->needs(a, b);
    a->needs(f, b);
    b->needs(f, a);
  };
  auto* disk = app.add_subcommand("disk", "Companion disk and its two tangles");
  add_in(disk);
  add_disk(disk);
  auto* wrapping = app.add_subcommand("wrapping", "Wrapping number of the annular pattern");
  add_in(wrapping);
  add_disk(wrapping);

  std::string pattern_path, companion_path;
  int core = 0;
  bool no_reduce = false;
  auto* entangle_cmd = app.add_subcommand("entangle", "Satellite of a pattern around a companion");
  auto* pat = entangle_cmd->add_option("--pattern", pattern_path, "Pattern diagram");
  auto* cc = entangle_cmd->add_option("--core-circles", core,
                                      "Use k parallel core circles as the pattern")
                 ->check(CLI::PositiveNumber);
  pat->excludes(cc);
  entangle_cmd->add_option("--companion", companion_path, "Companion knot diagram")->required();
  entangle_cmd->add_flag("--no-reduce", no_reduce, "Keep the raw quadruple grid");
  add_disk(entangle_cmd);

  int clasp = 1;
  auto* cable_cmd = app.add_subcommand("cable", "Doubled companion closed by one clasp");
  cable_cmd->add_option("--companion", companion_path, "Companion knot diagram")->required();
  cable_cmd->add_option("--clasp-sign", clasp, "Sign of the clasp crossing")
      ->check(CLI::IsMember({-1, 1}));

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket");
  add_in(bracket);
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial");
  add_in(jones_cmd);

  int max_n = 4;
  int census_budget = 8;
  bool distinguish_mirrors = false;
  std::string table_path;
  auto* census = app.add_subcommand("census", "Enumerate prime diagrams by crossing number");
  census->add_option("--max-n", max_n, "Largest crossing number")->check(CLI::PositiveNumber);
  census->add_option("--census-budget", census_budget, "Refuse to go beyond this many crossings")
      ->check(CLI::PositiveNumber);
  census->add_flag("--distinguish-mirrors", distinguish_mirrors,
                   "Do not identify a diagram with its mirror image");
  census->add_option("--table", table_path, "Table file to create or verify and extend");

  int crk = 0;
  std::string series_p, series_s, series_n;
  auto* bounds = app.add_subcommand("bounds", "Exact check of the growth-rate constants");
  auto* crk_opt = bounds->add_option("--crk", crk, "Crossing number for the recursion check")
                      ->check(CLI::PositiveNumber);
  auto* p_opt = bounds->add_option("--P", series_p, "Comma-separated P_1, P_2, ...");
  bounds->add_option("--S", series_s, "Comma-separated S_n series");
  bounds->add_option("--N", series_n, "Comma-separated N_n series");
  crk_opt->needs(p_opt);
  p_opt->needs(crk_opt);

  std::string x_text, card_text;
  std::vector<long> factors;
  long composite = 0;
  auto* budget_cmd = app.add_subcommand("budget", "Regularity budget card/(152 x)");
  budget_cmd->add_option("--x", x_text, "Rational x in (0, 1]")->required();
  budget_cmd->add_option("--card", card_text, "Number of strongly prime diagrams")->required();
  auto* f_opt = budget_cmd->add_option("--factors", factors, "Factor crossing numbers")
                    ->delimiter(',');
  auto* c_opt = budget_cmd->add_option("--composite", composite, "Composite diagram crossings");
  f_opt->needs(c_opt);
  c_opt->needs(f_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  StateSumOptions sso;
  sso.max_crossings = budget;
  sso.threads = threads;

  auto chosen_disk = [&](const Diagram& d) {
    return face ? make_disk(d, *face, *e1, *e2) : find_companion_disk(d);
  };

  try {
    json j;
    if (*validate) {
      const Diagram d = load_diagram(in);
      j = {{"valid", true}, {"pd", emit_pd(d)}, {"diagram", d},
           {"connected", d.is_connected()}};
    } else if (*writhe_cmd) {
      const Diagram d = load_diagram(in);
      j = {{"writhe", writhe(d)}, {"linking_matrix", linking_matrix(d).entries}};
    } else if (*normalize) {
      const Diagram d = load_diagram(in);
      auto [nd, trace] = normalize_writhe(d);
      j = {{"pd", emit_pd(nd)}, {"writhe", writhe(nd)}, {"diagram", nd}, {"trace", trace}};
    } else if (*prime) {
      j = is_prime_diagram(load_diagram(in));
    } else if (*split) {
      const Diagram d = load_diagram(in);
      const auto parts = split_connected_sum(d);
      json fs = json::array();
      int sum = 0;
      for (const auto& p : parts) {
        fs.push_back({{"pd", emit_pd(p)}, {"crossings", p.crossing_count()}});
        sum += p.crossing_count();
      }
      j = {{"crossings", d.crossing_count()}, {"factor_crossings_sum", sum}, {"factors", fs}};
    } else if (*disk) {
      const Diagram d = load_diagram(in);
      const CompanionDisk cd = chosen_disk(d);
      const auto [inside, outside] = extract_tangle(d, cd);
      j = {{"disk", cd},
           {"inside", inside},
           {"outside", outside},
           {"outside_passes_screen", passes_screen(outside)}};
    } else if (*wrapping) {
      const Diagram d = load_diagram(in);
      const AnnularDiagram a = annular_embed(d, chosen_disk(d));
      json per = json::array();
      for (int c = 0; c < a.diagram.component_count(); ++c) per.push_back(component_wrapping(a, c));
      j = {{"wrapping", wrapping_number(a)},
           {"component_wrapping", per},
           {"winding", winding(a)},
           {"reliable", is_reliable(a)},
           {"annular", a}};
    } else if (*entangle_cmd) {
      if (pattern_path.empty() && core == 0) throw UsageError("need --pattern or --core-circles");
      AnnularDiagram a;
      if (core > 0) {
        a = core_circles(core);
      } else {
        const Diagram p = load_diagram(pattern_path);
        a = annular_embed(p, chosen_disk(p));
      }
      EntangleOptions eo;
      eo.reduce = !no_reduce;
      const SatelliteResult r = entangle(a, load_diagram(companion_path), eo);
      j = r;
      j["pd"] = emit_pd(r.diagram);
    } else if (*cable_cmd) {
      CableOptions co;
      co.clasp_sign = clasp;
      const SatelliteResult r = cable(load_diagram(companion_path), co);
      j = {{"crossings", r.diagram.crossing_count()},
           {"components", r.diagram.component_count()},
           {"companion_crossings", r.companion_crossings},
           {"framing_linking", r.framing_linking},
           {"pd", emit_pd(r.diagram)},
           {"diagram", r.diagram}};
    } else if (*bracket) {
      const Diagram d = load_diagram(in);
      j = {{"crossings", d.crossing_count()}, {"bracket", laurent_json(kauffman_bracket(d, sso))}};
    } else if (*jones_cmd) {
      const Diagram d = load_diagram(in);
      j = {{"crossings", d.crossing_count()}, {"jones", laurent_json(jones(d, sso), "t", 2)}};
    } else if (*census) {
      CensusOptions co;
      co.budget = census_budget;
      co.threads = threads;
      co.identify_mirrors = !distinguish_mirrors;
      const CensusTable t = enumerate_diagrams(max_n, co);
      j = t;
      if (!table_path.empty()) {
        const PersistResult pr = persist_table(t, table_path);
        j["table"] = {{"path", table_path}, {"verified", pr.verified}, {"appended", pr.appended}};
      }
    } else if (*bounds) {
      BoundReport r = evaluate_constants();
      j = {{"constants", r}};
      if (crk > 0) {
        const auto P = parse_series(series_p);
        const auto zeros = std::vector<mpz_class>(P.size(), 0);
        const auto S = series_s.empty() ? zeros : parse_series(series_s);
        const auto N = series_n.empty() ? zeros : parse_series(series_n);
        j["recursion"] = theorem1_recursion_check(P, crk, S, N);
      }
      bool ok = r.all_pass();
      out.emit(j);
      return ok ? 0 : kDomain;
    } else if (*budget_cmd) {
      mpz_class card;
      try {
        card = mpz_class(card_text);
      } catch (const std::invalid_argument&) {
        throw UsageError("--card must be an integer");
      }
      const mpq_class x = parse_rational(x_text);
      j = {{"card", card.get_str()},
           {"x", x.get_str()},
           {"budget", regularity_budget(card, x).get_str()}};
      if (!factors.empty()) j["lackenby"] = lackenby_check(factors, composite);
    }
    out.emit(j);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "knotkit: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "knotkit: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "knotkit: " << e.what() << "\n";
    return kDomain;
  }
}
