#pragma once

// Curves in the mapping torus M of ρ, and the twist along the vertical torus
// T = γ × S¹.
//
// A FiberedCurveWord lists fiber crossings (exits through sides, as in a
// CurveWord) interleaved with jump markers ±1. A jump is a passage through
// the fiber: coordinates after a +1 jump are those of the next copy of the
// fiber, so after a jump ε the next sextant is the landing sextant + ε.
// Pushing down to level 0 applies ρ^{-h} to a crossing at level h.

#include "sqk/fiber/curve.hpp"

#include <cstdint>
#include <vector>

namespace sqk::fiber {

struct FiberEntry {
  enum class Kind : std::uint8_t { Crossing, Jump };
  Kind kind = Kind::Crossing;
  HalfEdge exit{};  // Crossing
  int jump = 0;     // Jump: ±1

  static FiberEntry crossing(HalfEdge e) { return {Kind::Crossing, e, 0}; }
  static FiberEntry jump_by(int eps) { return {Kind::Jump, {}, eps}; }
};

class FiberedCurveWord {
 public:
  // Checks the chain condition (landing sextant + jumps = next sextant) and
  // that jumps are ±1. The jump sum is *not* required to vanish here;
  // pushdown rejects unbalanced words.
  explicit FiberedCurveWord(std::vector<FiberEntry> entries);
  static FiberedCurveWord from_word(const CurveWord& w);

  const std::vector<FiberEntry>& entries() const { return entries_; }
  int jump_sum() const;
  std::size_t jump_count() const;
  std::size_t crossing_count() const { return entries_.size() - jump_count(); }

 private:
  std::vector<FiberEntry> entries_;
};

enum class Chirality { Standard, Mirror };

// γ with its committed orientation, for the chosen chirality.
CurveWord twist_curve_word(Chirality chirality = Chirality::Standard);
// Number of steps along γ from a point P to ρ^{-1}(P): ±|γ|/6, the sign
// depending on how ρ moves γ along its own orientation. Throws if ρ does not
// preserve γ with its orientation.
long gamma_shift(const CurveWord& gamma);

// Twist of power k along T. At every crossing of c with γ, splices in |k|
// copies of (one sixth of γ, jump), with the direction along γ and the jump
// sign fixed by sign(k) and the crossing sign. Throws NotReduced if c is not
// in minimal position.
FiberedCurveWord torus_twist(const CurveWord& c, long k, const CurveWord& gamma);
FiberedCurveWord torus_twist(const NormalMultiCurve& c, long k, Chirality chirality = Chirality::Standard);

// Resolves the jumps, then bigon-reduces. Throws UnbalancedJumps,
// StepCapExceeded (counting jump eliminations and cancellations) and
// NotEmbedded when the result is not a simple closed curve.
CurveWord pushdown_word(const FiberedCurveWord& w, std::uint64_t cap = default_step_cap(),
                        std::uint64_t* steps = nullptr);
NormalMultiCurve pushdown(const FiberedCurveWord& w, std::uint64_t cap = default_step_cap());

// V_0, ..., V_n, each obtained from the previous by torus_twist(·, +1) and
// pushdown.
std::vector<NormalMultiCurve> build_Vn_sequence(int n, Chirality chirality = Chirality::Standard);
NormalMultiCurve build_Vn(int n, Chirality chirality = Chirality::Standard);
// Same iteration from an arbitrary connected starting curve (uncached).
std::vector<NormalMultiCurve> twist_sequence(const NormalMultiCurve& start, int n, const CurveWord& gamma);

// True when a = ρ^k(b) for some k.
bool equal_up_to_monodromy(const NormalMultiCurve& a, const NormalMultiCurve& b);

}  // namespace sqk::fiber
