#include "sqk/slope.hpp"

#include "sqk/error.hpp"

namespace sqk {

Slope Slope::make(const BigInt& p, const BigInt& q) {
  if (p == 0 && q == 0) throw InvalidArgument("slope 0/0 is undefined");
  if (q == 0) return Slope(1, 0);
  BigInt g = big_gcd(p, q);
  BigInt rp = p / g;
  BigInt rq = q / g;
  if (rq < 0) {
    rp = -rp;
    rq = -rq;
  }
  return Slope(std::move(rp), std::move(rq));
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  return p_.str() + "/" + q_.str();
}

nlohmann::json Slope::to_json() const {
  return nlohmann::json{{"p", bigint_to_json(p_)}, {"q", bigint_to_json(q_)}};
}

Slope Slope::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q"))
    throw InvalidArgument("slope JSON must be an object with integer fields p and q");
  return make(bigint_from_json(j.at("p")), bigint_from_json(j.at("q")));
}

Slope Slope::parse(const std::string& text) {
  if (text == "inf" || text == "1/0") return infinity();
  auto slash = text.find('/');
  auto to_int = [&](const std::string& s) { return bigint_from_json(nlohmann::json(s)); };
  try {
    if (slash == std::string::npos) return make(to_int(text), 1);
    return make(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("cannot parse slope '" + text + "': " + e.what());
  }
}

Slope make_slope(const BigInt& p, const BigInt& q) { return Slope::make(p, q); }

BigInt intersection_det(const Slope& a, const Slope& b) {
  return big_abs(a.p() * b.q() - b.p() * a.q());
}

BigInt slope_pairing(const Slope& s, const Slope& axis) {
  return s.p() * axis.q() - s.q() * axis.p();
}

Slope dehn_twist(const Slope& s, const TwistSpec& t) {
  // The pairing is unchanged by the transvection, so k applications collapse
  // to a single subtraction of k <s, axis> axis.
  BigInt c = t.power * slope_pairing(s, t.axis);
  return Slope::make(s.p() - c * t.axis.p(), s.q() - c * t.axis.q());
}

Slope twist_of_Q(const Slope& s, const BigInt& k) {
  if (s.is_infinite()) return s;
  return Slope::make(s.p() + k * s.q(), s.q());
}

bool lift_check(const Slope& s) { return s.q() % 2 == 1; }

std::pair<Slope, BigInt> normalize_mod_Q_twist(const Slope& s) {
  if (s.is_infinite()) throw InvalidArgument("normalize_mod_Q_twist: slope ∞ has no finite normal form");
  const BigInt& q = s.q();
  BigInt r = s.p() % q;
  if (r < 0) r += q;
  if (2 * r > q) r -= q;
  BigInt k = (r - s.p()) / q;
  return {Slope::make(r, q), k};
}

Slope mirror(const Slope& s) { return Slope::make(-s.p(), s.q()); }

Slope torus_axis() { return Slope::make(1, 2); }

}  // namespace sqk
