#include <doctest.h>

#include "sqk/error.hpp"
#include "sqk/fiber/cut.hpp"
#include "sqk/fiber/data.hpp"
#include "sqk/fiber/twist.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

using namespace sqk;
using namespace sqk::fiber;

namespace {

NormalMultiCurve only_oi(const std::array<std::int64_t, kSextants>& oi) {
  Weights w{};
  for (int s = 0; s < kSextants; ++s) w[s][static_cast<int>(ArcType::OI)] = oi[s];
  return NormalMultiCurve(w);
}

nlohmann::json fixture(const std::string& name) {
  std::ifstream in(std::string(SQK_FIXTURE_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("fiber complex is a closed orientable genus-2 surface") {
  const auto r = realize_surface_check(QuadComplex::hexagonal_annulus());
  CHECK(r.faces == 6);
  CHECK(r.edges == 12);
  CHECK(r.vertices == 4);
  CHECK(r.euler == -2);
  CHECK(r.orientable);
  CHECK(r.genus == 2);
  CHECK(realize_surface_check() == std::pair<int, bool>{2, true});
  for (int s = 0; s < kSextants; ++s)
    for (Side side : kSides) {
      const HalfEdge h{s, side};
      CHECK(partner(partner(h)) == h);
      CHECK(QuadComplex::hexagonal_annulus().gluing(h)->to == partner(h));
    }
}

TEST_CASE("corrupted complexes are caught") {
  auto flipped = QuadComplex::hexagonal_annulus();
  flipped.glue({0, Side::Outer}, {3, Side::Outer}, false);
  const auto r = realize_surface_check(flipped);
  CHECK_FALSE(r.orientable);
  CHECK_FALSE(r.orientation_conflict.empty());

  auto open = QuadComplex::hexagonal_annulus();
  open.unglue({2, Side::Inner});
  CHECK_THROWS_AS(realize_surface_check(open), SurfaceStructureError);
}

TEST_CASE("normal coordinates validate") {
  CHECK_NOTHROW(base_curve_V0());
  // unmatched outer edge
  CHECK_THROWS_AS(only_oi({1, 0, 0, 0, 0, 0}), InvariantViolation);
  Weights neg{};
  neg[0][0] = -1;
  CHECK_THROWS_AS(NormalMultiCurve{neg}, InvariantViolation);
  // OI and LL arcs in one quad cannot be disjoint
  Weights cross{};
  cross[0][static_cast<int>(ArcType::OI)] = 1;
  cross[0][static_cast<int>(ArcType::LL)] = 1;
  CHECK_THROWS_AS(NormalMultiCurve{cross}, InvariantViolation);

  const auto v = base_curve_V0();
  CHECK(NormalMultiCurve::from_json(v.to_json()) == v);
  const auto g = twist_curve_gamma();
  CHECK(NormalMultiCurve::from_json(g.to_json()) == g);
  CHECK(CurveWord::from_json(twist_curve_word().to_json()) == twist_curve_word());
}

TEST_CASE("components and monodromy") {
  const auto v = base_curve_V0();
  CHECK(components(NormalMultiCurve{}).empty());
  CHECK(components(v).size() == 1);
  CHECK(components(v + apply_monodromy(v, 1)).size() == 2);
  CHECK(components(v + apply_monodromy(v, 1) + apply_monodromy(v, 2)).size() == 3);
  CHECK(apply_monodromy(v, 6) == v);
  CHECK(apply_monodromy(v, 3) == v);
  CHECK(apply_monodromy(twist_curve_gamma(), 1) == twist_curve_gamma());
  CHECK(mirror(mirror(twist_curve_gamma())) == twist_curve_gamma());
  const auto w = trace_components(v).at(0);
  CHECK(w.is_reduced());
  CHECK(NormalMultiCurve::from_word(w) == v);
  CHECK(w.monodromy(6) == w);
}

TEST_CASE("reduction and step caps") {
  const auto w = trace_components(base_curve_V0()).at(0);
  // append a back-and-forth through an outer edge: O_0 then O_3 again
  auto ex = w.exits();
  ex.insert(ex.begin() + 1, {partner(ex[0]).quad, Side::Outer});
  ex.insert(ex.begin() + 2, {partner({partner(ex[0]).quad, Side::Outer}).quad, Side::Outer});
  const auto bad = CurveWord::from_exits(ex);
  CHECK_FALSE(bad.is_reduced());
  CHECK_THROWS_AS(NormalMultiCurve::from_word(bad), NotReduced);
  std::uint64_t steps = 0;
  const auto red = bad.reduced(1000, &steps);
  CHECK(red.is_reduced());
  CHECK(steps > 0);
  CHECK(red.same_cycle(w));
  CHECK_THROWS_AS(bad.reduced(0), StepCapExceeded);
}

TEST_CASE("slopes, counts and intersections of the base curves") {
  const auto v = base_curve_V0();
  const auto g = twist_curve_gamma();
  CHECK(slope_of(v) == make_slope(0, 1));
  CHECK_THROWS_AS(slope_of(g), NotLiftable);
  const auto pc = projection_counts(v);
  CHECK(pc.sextant_crossings == 0);
  CHECK(pc.outer_crossings == 2);
  CHECK(g.annulus_arcs() == 12);
  CHECK(geometric_intersection(v, v) == 0);
  CHECK(geometric_intersection(v, g) == 2);
  CHECK(geometric_intersection(g, v) == 2);
  CHECK(geometric_intersection(v, apply_monodromy(v, 1)) == 0);
  CHECK(disjoint_by_sum(v, apply_monodromy(v, 1)));
  CHECK_FALSE(disjoint_by_sum(v, g));
}

TEST_CASE("oracle: exhaustive search for the base curve") {
  // A curve with sextant count 0 carries only OI arcs; enumerate them all.
  std::set<std::string> found;
  std::array<std::int64_t, kSextants> oi{};
  for (int code = 0; code < 729; ++code) {
    int c = code;
    for (int s = 0; s < kSextants; ++s, c /= 3) oi[s] = c % 3;
    NormalMultiCurve m;
    try {
      m = only_oi(oi);
    } catch (const InvariantViolation&) {
      continue;
    }
    if (m.empty() || components(m).size() != 1) continue;
    const auto pc = projection_counts(m);
    if (pc.sextant_crossings != 0 || pc.outer_crossings != 2) continue;
    if (geometric_intersection(m, apply_monodromy(m, 1)) != 0) continue;
    found.insert(m.to_json().dump());
  }
  const auto v = base_curve_V0();
  CHECK(found == std::set<std::string>{v.to_json().dump(), apply_monodromy(v, 1).to_json().dump(),
                                       apply_monodromy(v, 2).to_json().dump()});
}

TEST_CASE("oracle: exhaustive search for the twist curve") {
  // rho-invariant, connected, twelve annulus arcs, meets V_0 twice and
  // admits a consistent rho-shift along itself.
  std::set<std::string> found;
  for (int code = 0; code < 15625; ++code) {
    Weights w{};
    int c = code;
    for (int t = 0; t < kArcTypes; ++t, c /= 5)
      for (int s = 0; s < kSextants; ++s) w[s][t] = c % 5;
    NormalMultiCurve m;
    try {
      m = NormalMultiCurve(w);
    } catch (const InvariantViolation&) {
      continue;
    }
    if (m.annulus_arcs() != 12) continue;
    const auto ws = trace_components(m);
    if (ws.size() != 1 || ws[0].is_peripheral()) continue;
    if (geometric_intersection(m, base_curve_V0()) != 2) continue;
    try {
      gamma_shift(ws[0]);
    } catch (const Error&) {
      continue;
    }
    found.insert(m.to_json().dump());
  }
  const auto g = twist_curve_gamma();
  CHECK(found == std::set<std::string>{g.to_json().dump(), mirror(g).to_json().dump()});
}

TEST_CASE("fixtures equal the built-in data") {
  CHECK(NormalMultiCurve::from_json(fixture("v0.json").at("curve")) == base_curve_V0());
  const auto g = fixture("gamma.json");
  CHECK(NormalMultiCurve::from_json(g.at("curve")) == twist_curve_gamma());
  CHECK(CurveWord::from_json(g.at("oriented_trace")).same_cycle(twist_curve_word()));
}

TEST_CASE("torus twist") {
  const auto v = base_curve_V0();
  const auto gw = twist_curve_word();
  CHECK(gamma_shift(gw) == 3);
  const auto t0 = torus_twist(v, 0);
  CHECK(t0.jump_count() == 0);
  CHECK(pushdown(t0) == v);
  for (long k : {1L, 2L, -1L, -3L}) {
    const auto t = torus_twist(v, k);
    CHECK(t.jump_sum() == 0);
    CHECK(t.jump_count() == 2 * static_cast<std::size_t>(k < 0 ? -k : k));
  }
  // six upward jumps: labels close up but the word winds around the circle
  std::vector<FiberEntry> up;
  for (int lvl = 1; lvl <= 6; ++lvl) {
    up.push_back(FiberEntry::jump_by(1));
    for (const auto& e : gw.exits()) up.push_back(FiberEntry::crossing({mod6(e.quad + lvl), e.side}));
  }
  const FiberedCurveWord unbalanced(up);
  CHECK(unbalanced.jump_sum() == 6);
  CHECK_THROWS_AS(pushdown(unbalanced), UnbalancedJumps);
  // twisting back undoes a twist
  const auto v3 = build_Vn(3);
  const auto back = trace_components(v3).at(0);
  CHECK(equal_up_to_monodromy(pushdown(torus_twist(pushdown(torus_twist(v3, -1)), 1)), v3));
  CHECK(equal_up_to_monodromy(pushdown(torus_twist(v3, -3)), v));
  CHECK(pushdown(torus_twist(back, 1, gw)) == build_Vn(4));
}

TEST_CASE("the twist family") {
  const auto seq = build_Vn_sequence(12);
  for (int n = 0; n <= 12; ++n) {
    const auto& c = seq[static_cast<std::size_t>(n)];
    CAPTURE(n);
    CHECK(slope_of(c) == make_slope(n, 2 * n + 1));
    const auto pc = projection_counts(c);
    CHECK(pc.sextant_crossings == 2 * n);
    CHECK(pc.outer_crossings == 4 * n + 2);
    CHECK(geometric_intersection(c, twist_curve_gamma()) == 2);
    // the mirror family is the reflected curve with the reflected slope
    const auto m = build_Vn(n, Chirality::Mirror);
    CHECK(equal_up_to_monodromy(m, mirror(c)));
    CHECK(slope_of(m) == slope_of(c));
  }
  CHECK(twist_sequence(base_curve_V0(), 12, twist_curve_word()) == seq);
  CHECK_THROWS_AS(build_Vn(-1), InvalidArgument);
}

TEST_CASE("step cap from the environment") {
  const auto v5 = build_Vn(5);
  const auto t = torus_twist(v5, 1);
  CHECK_THROWS_AS(pushdown(t, 1), StepCapExceeded);
  setenv("TOOLKIT_MAX_STEPS", "1", 1);
  CHECK(default_step_cap() == 1);
  CHECK_THROWS_AS(pushdown(t), StepCapExceeded);
  unsetenv("TOOLKIT_MAX_STEPS");
  CHECK(default_step_cap() == 1'000'000);
  CHECK_NOTHROW(pushdown(t));
}

TEST_CASE("cutting the fiber") {
  CHECK(cut_along({}).components == std::vector<CutComponent>{{-2, 0}});
  const auto v = base_curve_V0();
  CHECK(cut_along({v}).components == std::vector<CutComponent>{{-2, 2}});
  const auto two = cut_along({v, apply_monodromy(v, 1)});
  CHECK(two.total_euler() == -2);
  CHECK(two.components == std::vector<CutComponent>{{-2, 4}});
  const auto pants = cut_along({v, apply_monodromy(v, 1), apply_monodromy(v, 2)});
  CHECK(pants.components == std::vector<CutComponent>{{-1, 3}, {-1, 3}});
  CHECK_THROWS_AS(cut_along({v, twist_curve_gamma()}), NotEmbedded);
}
