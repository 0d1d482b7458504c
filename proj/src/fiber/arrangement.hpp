#pragma once

// Arc layout inside a sextant, shared by tracing and cutting.

#include "sqk/fiber/curve.hpp"

namespace sqk::fiber::arrangement {

// ---------------------------------------------------------------------------
// Point layout. Points on a side are numbered along its counter-clockwise
// traversal; an arc is identified by its type and its rank k within the
// parallel family (rank 0 = nearest to the corner it cuts off, or nearest to
// L_s for OI and to the outer hexagon for LL).

using W = std::array<std::int64_t, kArcTypes>;
inline std::int64_t at(const W& w, ArcType t) { return w[static_cast<int>(t)]; }

inline std::int64_t count_on(const W& w, Side side) {
  switch (side) {
    case Side::Outer: return at(w, ArcType::OLm) + at(w, ArcType::OI) + at(w, ArcType::OLp);
    case Side::NextLine: return at(w, ArcType::OLp) + at(w, ArcType::LL) + at(w, ArcType::ILp);
    case Side::Inner: return at(w, ArcType::ILp) + at(w, ArcType::OI) + at(w, ArcType::ILm);
    case Side::PrevLine: return at(w, ArcType::ILm) + at(w, ArcType::LL) + at(w, ArcType::OLm);
  }
  return 0;
}

struct ArcRef {
  ArcType type;
  std::int64_t k;
};

inline ArcRef arc_at(const W& w, Side side, std::int64_t idx) {
  const std::int64_t n = count_on(w, side);
  switch (side) {
    case Side::Outer: {
      const auto a = at(w, ArcType::OLm), b = a + at(w, ArcType::OI);
      if (idx < a) return {ArcType::OLm, idx};
      if (idx < b) return {ArcType::OI, idx - a};
      return {ArcType::OLp, n - 1 - idx};
    }
    case Side::NextLine: {
      const auto a = at(w, ArcType::OLp), b = a + at(w, ArcType::LL);
      if (idx < a) return {ArcType::OLp, idx};
      if (idx < b) return {ArcType::LL, idx - a};
      return {ArcType::ILp, n - 1 - idx};
    }
    case Side::Inner: {
      const auto a = at(w, ArcType::ILp), b = a + at(w, ArcType::OI);
      if (idx < a) return {ArcType::ILp, idx};
      if (idx < b) return {ArcType::OI, b - 1 - idx};
      return {ArcType::ILm, n - 1 - idx};
    }
    case Side::PrevLine: {
      const auto a = at(w, ArcType::ILm), b = a + at(w, ArcType::LL);
      if (idx < a) return {ArcType::ILm, idx};
      if (idx < b) return {ArcType::LL, b - 1 - idx};
      return {ArcType::OLm, n - 1 - idx};
    }
  }
  return {ArcType::OI, 0};
}

inline std::int64_t point_of(const W& w, ArcRef r, Side side) {
  const std::int64_t n = count_on(w, side);
  switch (side) {
    case Side::Outer:
      if (r.type == ArcType::OLm) return r.k;
      if (r.type == ArcType::OI) return at(w, ArcType::OLm) + r.k;
      return n - 1 - r.k;
    case Side::NextLine:
      if (r.type == ArcType::OLp) return r.k;
      if (r.type == ArcType::LL) return at(w, ArcType::OLp) + r.k;
      return n - 1 - r.k;
    case Side::Inner:
      if (r.type == ArcType::ILp) return r.k;
      if (r.type == ArcType::OI) return at(w, ArcType::ILp) + at(w, ArcType::OI) - 1 - r.k;
      return n - 1 - r.k;
    case Side::PrevLine:
      if (r.type == ArcType::ILm) return r.k;
      if (r.type == ArcType::LL) return at(w, ArcType::ILm) + at(w, ArcType::LL) - 1 - r.k;
      return n - 1 - r.k;
  }
  return 0;
}

// Where the arc through point idx of `side` leaves the quad.
inline std::pair<Side, std::int64_t> other_end(const W& w, Side side, std::int64_t idx) {
  const ArcRef r = arc_at(w, side, idx);
  const auto [a, b] = arc_sides(r.type);
  const Side os = (side == a) ? b : a;
  return {os, point_of(w, r, os)};
}


struct TracedComponent {
  CurveWord word;
  // The component enters sextant `quad` through point `idx` of `side`.
  int quad;
  Side side;
  std::int64_t idx;
};

std::vector<TracedComponent> trace(const Weights& w);

}  // namespace sqk::fiber::arrangement
