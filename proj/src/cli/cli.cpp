#include "sqk/cli.hpp"

#include "sqk/error.hpp"
#include "sqk/fiber/cut.hpp"
#include "sqk/fiber/data.hpp"
#include "sqk/fiber/twist.hpp"
#include "sqk/group/ac.hpp"
#include "sqk/group/coset.hpp"
#include "sqk/group/staircase.hpp"
#include "sqk/kirby/framed_link.hpp"
#include "sqk/slope.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#ifndef SQK_FIXTURE_DIR
#define SQK_FIXTURE_DIR "fixtures"
#endif

namespace sqk::cli {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("malformed JSON in " + path + ": " + e.what());
  }
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument("malformed JSON for " + what + ": " + e.what());
  }
}

json bigs(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(bigint_to_json(x));
  return a;
}

json counts_json(const fiber::ProjectionCounts& pc) {
  return {{"sextant_crossings", pc.sextant_crossings},
          {"outer_crossings", pc.outer_crossings},
          {"inner_crossings", pc.inner_crossings},
          {"inner_matches_outer", pc.inner_crossings == pc.outer_crossings}};
}

// Everything parsed from the command line; echoed into every report.
struct Config {
  std::string command;
  std::string slope_text;
  std::string axis_text = "1/2";
  long long power = 1;
  bool of_q = false;
  int n = 0;
  bool n_given = false;
  bool mirror = false;
  std::string input;
  std::string matrix_text;
  std::string output;
  std::uint64_t max_cosets = 1'000'000;
  std::size_t max_length = 0;
  std::size_t max_states = 0;
  std::size_t target = 0;
  bool stabilize = false;
  int twist = 0;
  std::size_t i = 0, j = 0, k = 0;
  int sign = 1;
  long long framing = 0;
  std::string fixtures = SQK_FIXTURE_DIR;
  std::string v0;
};

group::Presentation presentation_from(const Config& c) {
  if (!c.input.empty()) return group::Presentation::from_json(read_json_file(c.input));
  if (!c.n_given) throw InvalidArgument("give --n or --input for the presentation");
  if (c.n < 0) throw InvalidArgument("n must be >= 0");
  return group::presentation_Pn(c.n);
}

kirby::FramedLinkMatrix matrix_from(const Config& c) {
  if (!c.input.empty()) return kirby::FramedLinkMatrix::from_json(read_json_file(c.input));
  if (c.matrix_text.empty()) throw InvalidArgument("give --matrix or --input");
  return kirby::FramedLinkMatrix::from_json(parse_json_text(c.matrix_text, "--matrix"));
}

fiber::Chirality chirality(const Config& c) { return c.mirror ? fiber::Chirality::Mirror : fiber::Chirality::Standard; }

void need_n(const Config& c) {
  if (c.n < 0) throw InvalidArgument("n must be >= 0");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Square-knot surgery link toolkit", "sqk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  json config_echo = json::object();
  std::function<json()> action;

  auto add_output = [&](CLI::App* s) { s->add_option("--output", cfg.output, "Write the JSON report to this file"); };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    add_output(s);
    return s;
  };

  // slope
  CLI::App* slope = app.add_subcommand("slope", "Pillowcase slope arithmetic");
  slope->require_subcommand(1);
  {
    CLI::App* s = leaf(slope, "twist", "Twist a slope along an axis (or by the twist of Q)");
    s->add_option("slope", cfg.slope_text, "p/q, p or inf")->required();
    s->add_option("--axis", cfg.axis_text, "Twist axis (default 1/2, the torus axis)");
    s->add_option("--power", cfg.power, "Signed power (default 1)");
    s->add_flag("--of-q", cfg.of_q, "Use the twist of Q: p/q -> (p + k q)/q");
    s->callback([&] {
      cfg.command = "slope twist";
      config_echo = {{"slope", cfg.slope_text}, {"axis", cfg.axis_text}, {"power", cfg.power}, {"of_q", cfg.of_q}};
      action = [&]() -> json {
        const Slope in = Slope::parse(cfg.slope_text);
        if (cfg.of_q) return {{"input", in.to_json()}, {"result", twist_of_Q(in, cfg.power).to_json()}};
        const Slope axis = Slope::parse(cfg.axis_text);
        return {{"input", in.to_json()},
                {"axis", axis.to_json()},
                {"result", dehn_twist(in, {axis, BigInt(cfg.power)}).to_json()}};
      };
    });
  }
  {
    CLI::App* s = leaf(slope, "lift-check", "Does the slope lift homeomorphically (odd denominator)?");
    s->add_option("slope", cfg.slope_text, "p/q, p or inf")->required();
    s->callback([&] {
      cfg.command = "slope lift-check";
      config_echo = {{"slope", cfg.slope_text}};
      action = [&]() -> json {
        const Slope in = Slope::parse(cfg.slope_text);
        return {{"slope", in.to_json()}, {"liftable", lift_check(in)}};
      };
    });
  }
  {
    CLI::App* s = leaf(slope, "normalize", "Representative with |2p| < q modulo the twist of Q");
    s->add_option("slope", cfg.slope_text, "p/q or p")->required();
    s->callback([&] {
      cfg.command = "slope normalize";
      config_echo = {{"slope", cfg.slope_text}};
      action = [&]() -> json {
        const Slope in = Slope::parse(cfg.slope_text);
        auto [s2, k] = normalize_mod_Q_twist(in);
        return {{"slope", in.to_json()}, {"normalized", s2.to_json()}, {"k", bigint_to_json(k)}};
      };
    });
  }

  // vn
  CLI::App* vn = app.add_subcommand("vn", "The curve family V_n in the fiber");
  vn->require_subcommand(1);
  for (const std::string name : {"build", "counts", "slope"}) {
    CLI::App* s = leaf(vn, name, name == "build" ? "Normal coordinates of V_n"
                                 : name == "counts" ? "Projection counts of V_n"
                                                    : "Slope of V_n");
    s->add_option("n", cfg.n, "Family index")->required();
    s->add_flag("--mirror", cfg.mirror, "Use the mirror chirality (negates reported slopes)");
    s->callback([&, name] {
      cfg.command = "vn " + name;
      config_echo = {{"n", cfg.n}, {"mirror", cfg.mirror}};
      action = [&, name]() -> json {
        need_n(cfg);
        const auto c = fiber::build_Vn(cfg.n, chirality(cfg));
        json r = {{"n", cfg.n}};
        if (name == "build") {
          r["curve"] = c.to_json();
          r["counts"] = counts_json(fiber::projection_counts(c));
          r["components"] = fiber::components(c).size();
        } else if (name == "counts") {
          const json counts = counts_json(fiber::projection_counts(c));
          for (auto& [k, v] : counts.items()) r[k] = v;
        } else {
          Slope s = fiber::slope_of(c);
          r["slope"] = (cfg.mirror ? mirror(s) : s).to_json();
        }
        return r;
      };
    });
  }

  // pants
  CLI::App* pants = app.add_subcommand("pants", "Pants decomposition by the monodromy orbit of V_n");
  pants->require_subcommand(1);
  {
    CLI::App* s = leaf(pants, "check", "Cut the fiber along V_n, rho V_n, rho^-1 V_n");
    s->add_option("n", cfg.n, "Family index")->required();
    s->add_flag("--mirror", cfg.mirror, "Use the mirror chirality");
    s->callback([&] {
      cfg.command = "pants check";
      config_echo = {{"n", cfg.n}, {"mirror", cfg.mirror}};
      action = [&]() -> json {
        need_n(cfg);
        const auto c = fiber::build_Vn(cfg.n, chirality(cfg));
        const auto a = fiber::apply_monodromy(c, 1), b = fiber::apply_monodromy(c, -1);
        json inter = {{"V,rhoV", fiber::geometric_intersection(c, a)},
                      {"V,rho^-1V", fiber::geometric_intersection(c, b)},
                      {"rhoV,rho^-1V", fiber::geometric_intersection(a, b)}};
        const bool disjoint = inter["V,rhoV"] == 0 && inter["V,rho^-1V"] == 0 && inter["rhoV,rho^-1V"] == 0;
        json r = {{"n", cfg.n}, {"intersections", inter}, {"pairwise_disjoint", disjoint}};
        if (disjoint) {
          auto cut = fiber::cut_along({c, a, b});
          r["cut"] = cut.to_json();
          r["two_pairs_of_pants"] = cut.components == std::vector<fiber::CutComponent>{{-1, 3}, {-1, 3}};
        }
        return r;
      };
    });
  }

  // group
  CLI::App* grp = app.add_subcommand("group", "Presentations of the cobordism group");
  grp->require_subcommand(1);
  {
    CLI::App* s = leaf(grp, "pn", "The presentation <a,b | aba=bab, a^n=b^(n+1)>");
    s->add_option("n", cfg.n, "Family index")->required();
    s->callback([&] {
      cfg.command = "group pn";
      config_echo = {{"n", cfg.n}};
      action = [&]() -> json {
        need_n(cfg);
        auto p = group::presentation_Pn(cfg.n);
        json words = json::array();
        for (const auto& r : p.relators()) words.push_back(group::to_string(r));
        return {{"n", cfg.n}, {"presentation", p.to_json()}, {"relator_words", words}};
      };
    });
  }
  auto add_pres_input = [&](CLI::App* s) {
    s->add_option("--n", cfg.n, "Use presentation P_n")->each([&](const std::string&) { cfg.n_given = true; });
    s->add_option("--input", cfg.input, "Presentation JSON file");
  };
  {
    CLI::App* s = leaf(grp, "snf", "Invariant factors of the abelianization");
    add_pres_input(s);
    s->callback([&] {
      cfg.command = "group snf";
      config_echo = {{"n", cfg.n_given ? json(cfg.n) : json(nullptr)}, {"input", cfg.input}};
      action = [&]() -> json {
        auto p = presentation_from(cfg);
        auto f = group::abelianization_snf(p);
        bool trivial = std::all_of(f.begin(), f.end(), [](const BigInt& d) { return d == 1; });
        return {{"presentation", p.to_json()}, {"invariant_factors", bigs(f)}, {"trivial", trivial}};
      };
    });
  }
  {
    CLI::App* s = leaf(grp, "coset-enum", "Todd-Coxeter enumeration over the trivial subgroup");
    add_pres_input(s);
    s->add_option("--max-cosets", cfg.max_cosets, "Coset cap (default 1000000)");
    s->callback([&] {
      cfg.command = "group coset-enum";
      config_echo = {{"n", cfg.n_given ? json(cfg.n) : json(nullptr)}, {"input", cfg.input}, {"max_cosets", cfg.max_cosets}};
      action = [&]() -> json {
        auto p = presentation_from(cfg);
        json r = group::todd_coxeter(p, cfg.max_cosets).to_json();
        r["presentation"] = p.to_json();
        return r;
      };
    });
  }
  {
    CLI::App* s = leaf(grp, "ac-search", "Breadth-first Andrews-Curtis search");
    add_pres_input(s);
    s->add_option("--max-length", cfg.max_length, "Cap on total relator length")->required();
    s->add_option("--max-states", cfg.max_states, "Cap on visited states")->required();
    s->add_option("--target", cfg.target, "Goal total length (default: number of generators)");
    s->add_flag("--stabilize", cfg.stabilize, "Add generator c and relator c first");
    s->callback([&] {
      cfg.command = "group ac-search";
      config_echo = {{"n", cfg.n_given ? json(cfg.n) : json(nullptr)}, {"input", cfg.input},
                     {"max_length", cfg.max_length}, {"max_states", cfg.max_states},
                     {"target", cfg.target}, {"stabilize", cfg.stabilize}};
      action = [&]() -> json {
        auto p = presentation_from(cfg);
        auto res = group::ac_search(p, {cfg.target, cfg.max_length, cfg.max_states, cfg.stabilize});
        json r = res.to_json();
        if (res.found)
          r["certified"] = group::replay_certifies(res, cfg.target ? cfg.target : static_cast<std::size_t>(res.start.generators()));
        return r;
      };
    });
  }

  // word
  CLI::App* word = app.add_subcommand("word", "Relators read from staircase diagrams");
  word->require_subcommand(1);
  {
    CLI::App* s = leaf(word, "read", "Read the relator of a staircase fixture");
    s->add_option("fixture", cfg.input, "Staircase fixture JSON")->required();
    s->add_option("--twist", cfg.twist, "Insert n twists at the marked passages first");
    s->callback([&] {
      cfg.command = "word read";
      config_echo = {{"fixture", cfg.input}, {"twist", cfg.twist}};
      action = [&]() -> json {
        json j = read_json_file(cfg.input);
        auto d = group::StaircaseDiagram::from_json(j.contains("diagram") ? j["diagram"] : j);
        if (cfg.twist != 0) d = group::twist_insertion(d, cfg.twist);
        auto w = group::read_staircase(d);
        return {{"word", group::to_string(w)}, {"letters", group::word_to_json(w)}};
      };
    });
  }

  // kirby
  CLI::App* kb = app.add_subcommand("kirby", "Linking-matrix Kirby moves");
  kb->require_subcommand(1);
  auto add_matrix = [&](CLI::App* s) {
    s->add_option("--matrix", cfg.matrix_text, "Matrix as JSON, e.g. [[0,1],[1,0]]");
    s->add_option("--input", cfg.input, "FramedLinkMatrix JSON file");
  };
  auto matrix_echo = [&] { return json{{"matrix", cfg.matrix_text}, {"input", cfg.input}}; };
  {
    CLI::App* s = leaf(kb, "slide", "Slide component i over component j");
    add_matrix(s);
    s->add_option("--i", cfg.i, "Sliding component (0-based)")->required();
    s->add_option("--j", cfg.j, "Component slid over (0-based)")->required();
    s->add_option("--sign", cfg.sign, "+1 or -1 (default +1)");
    s->callback([&] {
      cfg.command = "kirby slide";
      config_echo = matrix_echo();
      config_echo.update(json{{"i", cfg.i}, {"j", cfg.j}, {"sign", cfg.sign}});
      action = [&]() -> json {
        auto a = matrix_from(cfg);
        auto b = kirby::handle_slide(a, cfg.i, cfg.j, cfg.sign);
        return {{"input", a.to_json()}, {"result", b.to_json()}, {"det", bigint_to_json(determinant(b.matrix()))}};
      };
    });
  }
  {
    CLI::App* s = leaf(kb, "blowdown", "Blow down a ±1-framed component");
    add_matrix(s);
    s->add_option("--k", cfg.k, "Component (0-based)")->required();
    s->callback([&] {
      cfg.command = "kirby blowdown";
      config_echo = matrix_echo();
      config_echo["k"] = cfg.k;
      action = [&]() -> json {
        auto a = matrix_from(cfg);
        auto b = kirby::blow_down(a, cfg.k);
        return {{"input", a.to_json()}, {"result", b.to_json()}, {"det", bigint_to_json(determinant(b.matrix()))}};
      };
    });
  }
  {
    CLI::App* s = leaf(kb, "h1", "First homology of the surgered manifold");
    add_matrix(s);
    s->callback([&] {
      cfg.command = "kirby h1";
      config_echo = matrix_echo();
      action = [&]() -> json {
        auto a = matrix_from(cfg);
        auto f = kirby::h1_invariants(a);
        long free_rank = std::count_if(f.begin(), f.end(), [](const BigInt& d) { return d == 0; });
        json torsion = json::array();
        for (const auto& d : f)
          if (d > 1) torsion.push_back(bigint_to_json(d));
        return {{"input", a.to_json()}, {"invariant_factors", bigs(f)}, {"free_rank", free_rank}, {"torsion", torsion}};
      };
    });
  }
  {
    CLI::App* s = leaf(kb, "hopf-add", "Add a canceling Hopf pair [[0,1],[1,f]]");
    add_matrix(s);
    s->add_option("--framing", cfg.framing, "Framing f of the second Hopf component (default 0)");
    s->callback([&] {
      cfg.command = "kirby hopf-add";
      config_echo = matrix_echo();
      config_echo["framing"] = cfg.framing;
      action = [&]() -> json {
        auto a = (cfg.matrix_text.empty() && cfg.input.empty()) ? kirby::FramedLinkMatrix() : matrix_from(cfg);
        auto b = kirby::add_hopf_pair(a, cfg.framing);
        return {{"input", a.to_json()}, {"result", b.to_json()}, {"det", bigint_to_json(determinant(b.matrix()))}};
      };
    });
  }

  // verify-all
  {
    CLI::App* s = app.add_subcommand("verify-all", "Run the invariant battery up to n");
    add_output(s);
    s->add_option("--n", cfg.n, "Range of n (default 10)")->default_val(10);
    s->add_option("--fixtures", cfg.fixtures, "Fixture directory");
    s->add_option("--v0", cfg.v0, "Load V_0 from this fixture instead of the built-in data");
    s->callback([&] {
      cfg.command = "verify-all";
      config_echo = {{"n", cfg.n}, {"fixtures", cfg.fixtures}, {"v0", cfg.v0.empty() ? json(nullptr) : json(cfg.v0)}};
      action = [&]() -> json {
        VerifyConfig vc{cfg.n, cfg.fixtures, std::nullopt};
        if (!cfg.v0.empty()) vc.v0_path = cfg.v0;
        return verify_all(vc, err);
      };
    });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << "usage error: no command given\n";
    return 2;
  }

  json report;
  int code = 0;
  try {
    report = action();
    if (cfg.command == "verify-all" && !report.value("all_passed", false)) code = 1;
  } catch (const Error& e) {
    report = {{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    code = 1;
  }
  report["command"] = cfg.command;
  report["config"] = config_echo;
  report["version"] = kVersion;

  const std::string text = report.dump(2) + "\n";
  if (!cfg.output.empty()) {
    std::ofstream f(cfg.output);
    if (!f) {
      err << "cannot write " << cfg.output << "\n";
      return 1;
    }
    f << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace sqk::cli
