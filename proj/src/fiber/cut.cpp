#include "sqk/fiber/cut.hpp"

#include "arrangement.hpp"
#include "sqk/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sqk::fiber {

using namespace arrangement;

int CutSurface::total_euler() const {
  int t = 0;
  for (const auto& c : components) t += c.euler_char;
  return t;
}

nlohmann::json CutSurface::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : components) arr.push_back({{"euler_char", c.euler_char}, {"boundary_count", c.boundary_count}});
  return {{"components", arr}, {"total_euler", total_euler()}};
}

namespace {

struct Dsu {
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
  std::vector<std::size_t> p;
};

}  // namespace

// Regions of a sextant are bounded alternately by segments of its boundary
// (between consecutive points, counter-clockwise) and by arcs. The region
// containing segment k continues, after the arc at point k+1, with the
// segment starting at that arc's other end.
CutSurface cut_along(const std::vector<NormalMultiCurve>& curves) {
  Weights w{};
  std::multiset<Weights> expected;
  for (const auto& c : curves) {
    for (int s = 0; s < kSextants; ++s)
      for (int t = 0; t < kArcTypes; ++t) w[s][t] += c.weights()[s][t];
    for (const auto& x : trace_components(c)) expected.insert(x.weights());
  }
  for (int s = 0; s < kSextants; ++s)
    if (w[s][0] > 0 && w[s][5] > 0)
      throw NotEmbedded("curves intersect: their union has crossing O-I and L-L arcs in sextant " + std::to_string(s));
  const auto traced = trace(w);
  std::multiset<Weights> got;
  for (const auto& t : traced) got.insert(t.word.weights());
  if (got != expected) throw NotEmbedded("curves intersect: their union does not trace back to the given components");

  // Per-sextant point numbering.
  std::array<std::array<std::int64_t, 4>, kSextants> offset{};
  std::array<std::int64_t, kSextants> npts{};
  std::array<std::size_t, kSextants> node0{};
  std::size_t nodes = 0;
  for (int s = 0; s < kSextants; ++s) {
    std::int64_t g = 0;
    for (Side side : kSides) {
      offset[s][side_index(side)] = g;
      g += count_on(w[s], side);
    }
    npts[s] = g;
    node0[s] = nodes;
    nodes += static_cast<std::size_t>(std::max<std::int64_t>(g, 1));
  }
  auto seg = [&](int s, std::int64_t k) -> std::size_t {
    const std::int64_t n = npts[s];
    if (n == 0) return node0[s];
    return node0[s] + static_cast<std::size_t>(((k % n) + n) % n);
  };
  auto side_of_point = [&](int s, std::int64_t g) {
    Side side = Side::Outer;
    for (Side sd : kSides)
      if (offset[s][side_index(sd)] <= g && count_on(w[s], sd) > 0) side = sd;
    return side;
  };
  auto arc_partner = [&](int s, std::int64_t g) {
    const Side sd = side_of_point(s, g);
    const auto [os, oix] = other_end(w[s], sd, g - offset[s][side_index(sd)]);
    return offset[s][side_index(os)] + oix;
  };

  Dsu dsu(nodes);
  for (int s = 0; s < kSextants; ++s)
    for (std::int64_t k = 0; k < npts[s]; ++k) dsu.unite(seg(s, k), seg(s, arc_partner(s, (k + 1) % npts[s])));
  std::vector<std::size_t> faces;
  for (std::size_t i = 0; i < nodes; ++i)
    if (dsu.find(i) == i) faces.push_back(i);

  // Edge pieces: piece t of a side with n points lies in segment offset+t-1.
  std::vector<std::size_t> piece_region;
  for (int s = 0; s < kSextants; ++s)
    for (Side side : kSides) {
      const HalfEdge p = partner({s, side});
      if (p.quad < s || (p.quad == s && side_index(p.side) < side_index(side))) continue;
      const std::int64_t n = count_on(w[s], side);
      for (std::int64_t t = 0; t <= n; ++t) {
        const std::size_t a = seg(s, offset[s][side_index(side)] + t - 1);
        const std::size_t b = seg(p.quad, offset[p.quad][side_index(p.side)] + (n - t) - 1);
        dsu.unite(a, b);
        piece_region.push_back(a);
      }
    }

  // Corner c of sextant s is the start of side c.
  std::map<int, std::size_t> vertex_region;
  for (int s = 0; s < kSextants; ++s)
    for (int c = 0; c < 4; ++c) vertex_region.emplace(vertex_class(s, c), seg(s, offset[s][c] - 1));

  std::map<std::size_t, CutComponent> comp;
  for (std::size_t f : faces) comp[dsu.find(f)].euler_char += 1;
  for (std::size_t r : piece_region) comp[dsu.find(r)].euler_char -= 1;
  for (const auto& [cls, r] : vertex_region) comp[dsu.find(r)].euler_char += 1;
  for (const auto& t : traced) {
    const std::int64_t g = offset[t.quad][side_index(t.side)] + t.idx;
    comp[dsu.find(seg(t.quad, g))].boundary_count += 1;
    comp[dsu.find(seg(t.quad, g - 1))].boundary_count += 1;
  }

  CutSurface out;
  for (const auto& [root, c] : comp) out.components.push_back(c);
  std::sort(out.components.begin(), out.components.end());
  return out;
}

}  // namespace sqk::fiber
