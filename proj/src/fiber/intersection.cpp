#include "sqk/fiber/curve.hpp"

namespace sqk::fiber {

namespace {

// Which side of a path (entering through hin, leaving through hout) the side
// h lies on. Going counter-clockwise from hout to hin sweeps the left side.
bool on_left(Side h, Side hin, Side hout) {
  const int a = side_index(hout);
  const int x = (side_index(h) - a + 4) % 4;
  const int b = (side_index(hin) - a + 4) % 4;
  return 0 < x && x < b;
}

}  // namespace

std::vector<Crossing> crossings(const CurveWord& u, const CurveWord& v) {
  std::vector<Crossing> out;
  const std::size_t m = u.size(), n = v.size();
  if (m == 0 || n == 0) return out;
  std::vector<Visit> uv(m), vv(n);
  for (std::size_t i = 0; i < m; ++i) uv[i] = u.visit(i);
  for (std::size_t j = 0; j < n; ++j) vv[j] = v.visit(j);
  const std::size_t cap = m + n;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Visit& a = uv[i];
      const Visit& b = vv[j];
      if (a.quad != b.quad) continue;
      // Start each lift pair where the two paths first come together.
      if (a.in == b.in || a.in == b.out) continue;
      const bool start_left = on_left(a.in, b.in, b.out);
      bool end_left;
      if (a.out == b.out) {
        std::size_t k = 0;
        while (uv[(i + k) % m].out == vv[(j + k) % n].out)
          if (++k > cap) break;
        if (k > cap) continue;  // same axis
        const Visit& ue = uv[(i + k) % m];
        const Visit& ve = vv[(j + k) % n];
        end_left = on_left(ue.out, ve.in, ve.out);
      } else if (a.out == b.in) {
        std::size_t k = 0;
        while (uv[(i + k) % m].out == vv[(j + n - k % n) % n].in)
          if (++k > cap) break;
        if (k > cap) continue;
        const Visit& ue = uv[(i + k) % m];
        const Visit& ve = vv[(j + n - k % n) % n];
        end_left = on_left(ue.out, ve.in, ve.out);
      } else {
        end_left = on_left(a.out, b.in, b.out);
      }
      if (start_left != end_left) out.push_back({i, j, start_left ? +1 : -1});
    }
  }
  return out;
}

std::int64_t geometric_intersection(const NormalMultiCurve& a, const NormalMultiCurve& b) {
  std::int64_t total = 0;
  const auto ca = trace_components(a);
  const auto cb = trace_components(b);
  for (const auto& x : ca) {
    if (x.is_peripheral()) continue;
    for (const auto& y : cb) {
      if (y.is_peripheral()) continue;
      total += static_cast<std::int64_t>(crossings(x, y).size());
    }
  }
  return total;
}

}  // namespace sqk::fiber
