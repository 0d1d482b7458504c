#include "sqk/fiber/data.hpp"

namespace sqk::fiber {

NormalMultiCurve base_curve_V0() {
  Weights w{};
  w[0][static_cast<int>(ArcType::OI)] = 1;
  w[3][static_cast<int>(ArcType::OI)] = 1;
  return NormalMultiCurve(w);
}

NormalMultiCurve twist_curve_gamma() {
  Weights w{};
  for (int s = 0; s < kSextants; ++s) {
    w[s][static_cast<int>(ArcType::OI)] = 1;
    w[s][static_cast<int>(ArcType::OLm)] = 1;
    w[s][static_cast<int>(ArcType::ILp)] = 1;
  }
  return NormalMultiCurve(w);
}

}  // namespace sqk::fiber
