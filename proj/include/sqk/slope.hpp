#pragma once

// Pillowcase slopes: the Q ∪ {∞} index of essential simple closed curves in
// the four-punctured sphere, with the twist actions used to classify the
// curves living in the genus-2 fiber.

#include "sqk/bigint.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace sqk {

// A reduced fraction p/q with q >= 0. The slope ∞ has the single
// representative p = 1, q = 0; make(-3, 0) and make(3, 0) both give 1/0.
class Slope {
 public:
  static Slope make(const BigInt& p, const BigInt& q);
  static Slope infinity() { return Slope(1, 0); }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  std::string str() const;  // "p/q", or "inf" for 1/0
  nlohmann::json to_json() const;
  static Slope from_json(const nlohmann::json& j);
  // Accepts "p/q", a bare integer "p" (= p/1) and "inf".
  static Slope parse(const std::string& text);

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Slope(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {}
  BigInt p_;
  BigInt q_;
};

struct TwistSpec {
  Slope axis;
  BigInt power;
};

Slope make_slope(const BigInt& p, const BigInt& q);

// |p1 q2 - p2 q1|
BigInt intersection_det(const Slope& a, const Slope& b);

// Signed pairing <(p,q),(a,b)> = p b - q a.
BigInt slope_pairing(const Slope& s, const Slope& axis);

// Parabolic transvection fixing the axis: (p,q) - k <(p,q),axis> axis.
Slope dehn_twist(const Slope& s, const TwistSpec& t);

// The twist of Q: p/q ↦ (p + k q)/q.
Slope twist_of_Q(const Slope& s, const BigInt& k);

// True iff the curve lifts homeomorphically to the fiber: q odd.
bool lift_check(const Slope& s);

// Returns (s', k) with s' = twist_of_Q(s, k) and p' in (-q/2, q/2]. For odd q
// this is the unique representative with |2p'| < q. For q = 2 no strict
// representative exists and the result has |2p'| = q.
std::pair<Slope, BigInt> normalize_mod_Q_twist(const Slope& s);

// Reflection of the pillowcase: p/q ↦ -p/q.
Slope mirror(const Slope& s);

// Axis of the torus twist in slope coordinates (1/2). Powers of the twist
// along it carry 0/1 to n/(2n+1).
Slope torus_axis();

}  // namespace sqk
