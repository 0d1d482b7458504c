#pragma once

// Curves on the fiber F∪, in two representations:
//
//  * CurveWord: a closed edge path in the dual graph of the sextant complex,
//    stored as the cyclic list of exits (quad, side). The four branch points
//    are treated as punctures, so the dual graph is a spine of the punctured
//    fiber and cyclic free reduction (cancelling a visit that leaves through
//    the side it entered) is exactly the bigon / straightening move.
//  * NormalMultiCurve: per-sextant counts of the six normal arc types. The
//    arrangement of arcs on each side is forced by the counts, so components
//    can be traced through the identifications.

#include "sqk/fiber/complex.hpp"
#include "sqk/slope.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sqk::fiber {

enum class ArcType : std::uint8_t { OI = 0, OLm = 1, OLp = 2, ILm = 3, ILp = 4, LL = 5 };
inline constexpr int kArcTypes = 6;
inline constexpr std::array<const char*, kArcTypes> kArcTypeNames = {"OI", "OLm", "OLp", "ILm", "ILp", "LL"};

// Throws InvalidArgument when a == b (not a normal arc).
ArcType arc_type(Side a, Side b);
std::pair<Side, Side> arc_sides(ArcType t);

using Weights = std::array<std::array<std::int64_t, kArcTypes>, kSextants>;

struct Visit {
  int quad;
  Side in;
  Side out;
};

// Default cap on elementary reduction moves; TOOLKIT_MAX_STEPS overrides it.
std::uint64_t default_step_cap();

class CurveWord {
 public:
  CurveWord() = default;
  // Validates that consecutive exits chain through the identifications:
  // partner(exits[t]).quad == exits[t+1].quad (cyclically).
  static CurveWord from_exits(std::vector<HalfEdge> exits);

  const std::vector<HalfEdge>& exits() const { return exits_; }
  std::size_t size() const { return exits_.size(); }
  bool empty() const { return exits_.empty(); }
  Visit visit(std::size_t t) const;

  bool is_reduced() const;
  // Cyclic free reduction. Counts elementary moves in *steps (if given) and
  // throws StepCapExceeded past `cap`.
  CurveWord reduced(std::uint64_t cap, std::uint64_t* steps = nullptr) const;

  CurveWord monodromy(int k) const;
  CurveWord reversed() const;
  CurveWord mirrored() const;
  // Same cycle started at visit `start`.
  CurveWord rotated_to(std::size_t start) const;

  Weights weights() const;
  // Every visit turns around a corner of the same branch-point class: the
  // curve is the link of that puncture (null-homotopic in the closed fiber).
  bool is_peripheral() const;

  // Equal as unoriented cyclic words.
  bool same_cycle(const CurveWord& other) const;

  nlohmann::json to_json() const;
  static CurveWord from_json(const nlohmann::json& j);

  friend bool operator==(const CurveWord&, const CurveWord&) = default;

 private:
  explicit CurveWord(std::vector<HalfEdge> exits) : exits_(std::move(exits)) {}
  std::vector<HalfEdge> exits_;
};

class NormalMultiCurve {
 public:
  NormalMultiCurve() : w_{} {}
  // Checked constructor: counts >= 0, OI·LL = 0 in every sextant, endpoint
  // counts agree across every identified side pair.
  explicit NormalMultiCurve(const Weights& w);
  // Coordinates of a reduced word. Throws NotEmbedded if tracing the
  // coordinates does not give back the word (the word is not simple).
  static NormalMultiCurve from_word(const CurveWord& w);
  static NormalMultiCurve from_words(const std::vector<CurveWord>& ws);

  const Weights& weights() const { return w_; }
  std::int64_t weight(int s, ArcType t) const { return w_[mod6(s)][static_cast<int>(t)]; }
  bool empty() const;
  // Number of normal arcs (pieces inside sextants).
  std::int64_t normal_arcs() const;
  // Arcs of the curve in the annulus between the hexagons, ignoring the
  // sextant lines: (outer + inner endpoint count) / 2.
  std::int64_t annulus_arcs() const;
  // Points of the curve on side (s, side).
  std::int64_t side_count(int s, Side side) const;

  nlohmann::json to_json() const;
  static NormalMultiCurve from_json(const nlohmann::json& j);

  friend bool operator==(const NormalMultiCurve&, const NormalMultiCurve&) = default;
  NormalMultiCurve operator+(const NormalMultiCurve& o) const;

 private:
  Weights w_;
};

// Components traced through the identifications, each returned as a word in
// its canonical orientation: start at the first unvisited point in
// (sextant, side, position) order, entering the sextant there.
std::vector<CurveWord> trace_components(const NormalMultiCurve& c);
std::vector<NormalMultiCurve> components(const NormalMultiCurve& c);

// ρ^k: sextant s ↦ s + k.
NormalMultiCurve apply_monodromy(const NormalMultiCurve& c, int k);
// Reflection s ↦ -s exchanging the two sextant lines of each quad.
NormalMultiCurve mirror(const NormalMultiCurve& c);

struct ProjectionCounts {
  // Points on the six sextant lines.
  std::int64_t sextant_crossings = 0;
  // Points on the outer hexagon as drawn (each point of the outer θ-graph
  // appears on two identified edges).
  std::int64_t outer_crossings = 0;
  // Same for the inner hexagon; reported, never asserted.
  std::int64_t inner_crossings = 0;
};

// Requires a single reduced, non-peripheral component.
ProjectionCounts projection_counts(const NormalMultiCurve& c);
ProjectionCounts projection_counts(const CurveWord& w);

// sextant_crossings / outer_crossings, reduced. Throws NotLiftable when the
// reduced denominator is even.
Slope slope_of(const NormalMultiCurve& c);

struct Crossing {
  std::size_t u_visit;
  std::size_t v_visit;
  // +1 when u crosses v from its left to its right.
  int sign;
};

// Transverse crossings of two reduced words in minimal position, found as the
// linked pairs of lifts in the universal cover of the spine. Lifts sharing an
// entire axis (same or parallel curves) do not cross.
std::vector<Crossing> crossings(const CurveWord& u, const CurveWord& v);

// Minimal intersection number, summed over components. Peripheral components
// contribute nothing. Computed in the fiber punctured at the branch points.
std::int64_t geometric_intersection(const NormalMultiCurve& a, const NormalMultiCurve& b);

// Independent disjointness test: a + b is an embedded multicurve whose
// components are exactly those of a and of b.
bool disjoint_by_sum(const NormalMultiCurve& a, const NormalMultiCurve& b);

}  // namespace sqk::fiber
