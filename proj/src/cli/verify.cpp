#include "verify.hpp"

#include "sqk/error.hpp"
#include "sqk/fiber/complex.hpp"
#include "sqk/fiber/cut.hpp"
#include "sqk/fiber/data.hpp"
#include "sqk/fiber/twist.hpp"
#include "sqk/group/coset.hpp"
#include "sqk/group/presentation.hpp"
#include "sqk/group/staircase.hpp"
#include "sqk/kirby/framed_link.hpp"
#include "sqk/slope.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace sqk::cli {

using namespace sqk::fiber;

namespace {

// A check returns an empty string on success, else the first failure.
using Check = std::function<std::string()>;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed JSON in " + path + ": " + e.what());
  }
}

std::string str(const Slope& s) { return s.str(); }

}  // namespace

nlohmann::json verify_all(const VerifyConfig& cfg, std::ostream& timings) {
  if (cfg.n < 0) throw InvalidArgument("verify-all range must be >= 0");
  const int N = cfg.n;
  std::map<std::string, Check> checks;

  // Loaded lazily inside the checks so a corrupt fixture fails its checks
  // instead of aborting the battery.
  std::optional<NormalMultiCurve> v0_cache;
  std::string v0_error;
  auto v0 = [&]() -> const NormalMultiCurve& {
    if (!v0_cache && v0_error.empty()) {
      try {
        v0_cache = cfg.v0_path ? NormalMultiCurve::from_json(load_json(*cfg.v0_path)) : base_curve_V0();
      } catch (const Error& e) {
        v0_error = "V_0 fixture rejected (" + e.kind() + "): " + e.what();
      }
    }
    if (!v0_cache) throw InvariantViolation(v0_error);
    return *v0_cache;
  };
  std::optional<std::vector<NormalMultiCurve>> family_cache;
  auto family = [&]() -> const std::vector<NormalMultiCurve>& {
    if (!family_cache) family_cache = twist_sequence(v0(), N, twist_curve_word());
    return *family_cache;
  };

  checks["surface_genus"] = []() -> std::string {
    auto [g, orientable] = realize_surface_check();
    if (g != 2 || !orientable) return std::string("fiber complex is not a closed orientable genus-2 surface");
    return std::string();
  };

  checks["slope_family"] = [N]() -> std::string {
    for (int n = 0; n <= N; ++n) {
      Slope s = dehn_twist(make_slope(0, 1), {torus_axis(), n});
      if (!(s == make_slope(n, 2 * n + 1))) return "dehn_twist(0/1, 1/2, " + std::to_string(n) + ") = " + str(s);
      if (!(dehn_twist(s, {torus_axis(), -n}) == make_slope(0, 1))) return "twist round trip fails at " + std::to_string(n);
    }
    return std::string();
  };

  checks["lift_criterion"] = [N]() -> std::string {
    if (lift_check(Slope::infinity())) return std::string("1/0 reported liftable");
    for (int n = 0; n <= N; ++n) {
      Slope s = make_slope(n, 2 * n + 1);
      if (!lift_check(s)) return "n/(2n+1) not liftable at n = " + std::to_string(n);
      for (int k = -3; k <= 3; ++k)
        if (lift_check(twist_of_Q(s, k)) != lift_check(s)) return "twist_of_Q changed liftability";
      if (normalize_mod_Q_twist(s).second != 0) return "n/(2n+1) not normalized at n = " + std::to_string(n);
    }
    return std::string();
  };

  checks["v0_properties"] = [&]() -> std::string {
    const auto& c = v0();
    if (components(c).size() != 1) return std::string("V_0 is not connected");
    auto pc = projection_counts(c);
    if (pc.sextant_crossings != 0 || pc.outer_crossings != 2)
      return "V_0 projection counts (" + std::to_string(pc.sextant_crossings) + ", " +
             std::to_string(pc.outer_crossings) + ") != (0, 2)";
    if (!(slope_of(c) == make_slope(0, 1))) return std::string("slope of V_0 is not 0/1");
    for (int k : {1, 2})
      if (geometric_intersection(c, apply_monodromy(c, k)) != 0)
        return "V_0 meets rho^" + std::to_string(k) + "(V_0)";
    return std::string();
  };

  checks["gamma_properties"] = [&]() -> std::string {
    const auto g = twist_curve_gamma();
    if (components(g).size() != 1) return std::string("gamma is not connected");
    if (g.annulus_arcs() != 12) return "gamma has " + std::to_string(g.annulus_arcs()) + " arcs, not 12";
    if (!(apply_monodromy(g, 1) == g)) return std::string("gamma is not rho-invariant");
    gamma_shift(twist_curve_word());
    auto pc = projection_counts(g);
    if (2 * pc.sextant_crossings != pc.outer_crossings) return std::string("gamma projection ratio is not 1/2");
    if (geometric_intersection(v0(), g) != 2) return std::string("i(V_0, gamma) != 2");
    return std::string();
  };

  checks["fiber_counts"] = [&]() -> std::string {
    const auto& f = family();
    for (int n = 0; n <= N; ++n) {
      const auto& c = f[static_cast<std::size_t>(n)];
      if (components(c).size() != 1) return "V_" + std::to_string(n) + " is not connected";
      auto pc = projection_counts(c);
      if (pc.sextant_crossings != 2 * n || pc.outer_crossings != 4 * n + 2)
        return "V_" + std::to_string(n) + " counts (" + std::to_string(pc.sextant_crossings) + ", " +
               std::to_string(pc.outer_crossings) + ")";
      Slope oracle = dehn_twist(make_slope(0, 1), {torus_axis(), n});
      if (!(slope_of(c) == oracle)) return "slope of V_" + std::to_string(n) + " differs from the twist oracle";
    }
    return std::string();
  };

  checks["pants_decomposition"] = [&]() -> std::string {
    const auto& f = family();
    for (int n = 0; n <= N; ++n) {
      const auto& c = f[static_cast<std::size_t>(n)];
      const auto a = apply_monodromy(c, 1), b = apply_monodromy(c, -1);
      if (geometric_intersection(c, a) || geometric_intersection(c, b) || geometric_intersection(a, b))
        return "rho-orbit of V_" + std::to_string(n) + " is not pairwise disjoint";
      auto cut = cut_along({c, a, b});
      if (cut.components != std::vector<CutComponent>{{-1, 3}, {-1, 3}} || cut.total_euler() != -2)
        return "complement of the rho-orbit of V_" + std::to_string(n) + " is " + cut.to_json().dump();
    }
    return std::string();
  };

  checks["t_intersection"] = [&]() -> std::string {
    const auto& f = family();
    const auto g = twist_curve_gamma();
    for (int n = 0; n <= N; ++n) {
      auto i = geometric_intersection(f[static_cast<std::size_t>(n)], g);
      if (i != 2) return "i(V_" + std::to_string(n) + ", gamma) = " + std::to_string(i);
    }
    return std::string();
  };

  checks["twist_round_trip"] = [&]() -> std::string {
    const auto& f = family();
    const CurveWord gamma = twist_curve_word();
    for (int n = 0; n < N; ++n) {
      const auto w = trace_components(f[static_cast<std::size_t>(n) + 1]).at(0);
      const auto back = pushdown(torus_twist(w, -1, gamma));
      if (!equal_up_to_monodromy(back, f[static_cast<std::size_t>(n)]))
        return "inverse twist of V_" + std::to_string(n + 1) + " is not V_" + std::to_string(n);
    }
    return std::string();
  };

  checks["staircase_relators"] = [&, N]() -> std::string {
    using namespace sqk::group;
    const auto dir = cfg.fixtures_dir;
    auto sasb = StaircaseDiagram::from_json(load_json(dir + "/staircase_sasb.json").at("diagram"));
    if (read_staircase(sasb) != braid_relator()) return "sasb diagram reads " + to_string(read_staircase(sasb));
    auto q = StaircaseDiagram::from_json(load_json(dir + "/staircase_qrelator.json").at("diagram"));
    if (read_staircase(q) != mu_relator(0)) return "Qrelator diagram reads " + to_string(read_staircase(q));
    for (int n = 0; n <= N; ++n)
      if (read_staircase(twist_insertion(q, n)) != mu_relator(n))
        return "twisted mu diagram at n = " + std::to_string(n) + " reads " + to_string(read_staircase(twist_insertion(q, n)));
    return std::string();
  };

  checks["abelianization"] = [N]() -> std::string {
    using namespace sqk::group;
    for (int n = 0; n <= N; ++n)
      if (abelianization_snf(presentation_Pn(n)) != std::vector<BigInt>{1, 1})
        return "abelianization of P_" + std::to_string(n) + " is not trivial";
    return std::string();
  };

  checks["coset_enumeration"] = [N]() -> std::string {
    using namespace sqk::group;
    for (int n = 1; n <= std::min(N, 2); ++n) {
      auto r = todd_coxeter(presentation_Pn(n), 1'000'000);
      if (!r.complete || r.order != 1) return "coset enumeration of P_" + std::to_string(n) + ": " + r.to_json().dump();
    }
    return std::string();
  };

  checks["kirby_blowdown"] = []() -> std::string {
    using namespace sqk::kirby;
    FramedLinkMatrix a({{-1, 1}, {1, 0}});
    auto b = blow_down(a, 0);
    if (!(b.matrix() == IntMatrix{{1}})) return std::string("blow-down example does not give [1]");
    if (determinant(a.matrix()) != a.at(0, 0) * determinant(b.matrix())) return std::string("det(A) != eps det(A')");
    if (h1_invariants(FramedLinkMatrix({{0, 0}, {0, 0}})) != std::vector<BigInt>{0, 0})
      return std::string("zero matrix does not give free rank 2");
    return std::string();
  };

  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& [name, fn] : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = fn();
    } catch (const Error& e) {
      failure = e.kind() + ": " + e.what();
    } catch (const std::exception& e) {
      failure = std::string("unexpected: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    timings << "verify-all " << name << ": " << (failure.empty() ? "pass" : "FAIL") << " in " << dt << " s\n";
    nlohmann::json item = {{"name", name}, {"passed", failure.empty()}};
    if (!failure.empty()) item["failure"] = failure;
    list.push_back(item);
    all = all && failure.empty();
  }
  return {{"checks", list}, {"all_passed", all}, {"n", N}};
}

}  // namespace sqk::cli
