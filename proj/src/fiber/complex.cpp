#include "sqk/fiber/complex.hpp"

#include "sqk/error.hpp"

#include <numeric>
#include <queue>

namespace sqk::fiber {

int vertex_class(int s, int c) {
  switch (c) {
    case 0: return mod6(s) % 2;
    case 1: return mod6(s + 1) % 2;
    case 2: return 2 + mod6(s + 1) % 2;
    default: return 2 + mod6(s) % 2;
  }
}

std::string side_name(HalfEdge h) {
  switch (h.side) {
    case Side::Outer: return "O_" + std::to_string(h.quad);
    case Side::Inner: return "I_" + std::to_string(h.quad);
    case Side::NextLine: return "L_" + std::to_string(mod6(h.quad + 1));
    case Side::PrevLine: return "L_" + std::to_string(h.quad);
  }
  return "?";
}

QuadComplex::QuadComplex(int quads) : glue_(static_cast<std::size_t>(quads)) {
  if (quads <= 0) throw InvalidArgument("QuadComplex needs at least one quad");
}

QuadComplex QuadComplex::hexagonal_annulus() {
  QuadComplex c(kSextants);
  for (int s = 0; s < kSextants; ++s)
    for (Side side : kSides) c.glue({s, side}, partner({s, side}), true);
  return c;
}

void QuadComplex::glue(HalfEdge a, HalfEdge b, bool reversed) {
  if (a.quad < 0 || a.quad >= quads() || b.quad < 0 || b.quad >= quads())
    throw InvalidArgument("glue: quad index out of range");
  glue_[a.quad][side_index(a.side)] = Gluing{b, reversed};
  glue_[b.quad][side_index(b.side)] = Gluing{a, reversed};
}

void QuadComplex::unglue(HalfEdge a) {
  auto& g = glue_[a.quad][side_index(a.side)];
  if (g) glue_[g->to.quad][side_index(g->to.side)].reset();
  g.reset();
}

const std::optional<Gluing>& QuadComplex::gluing(HalfEdge h) const {
  return glue_.at(h.quad)[side_index(h.side)];
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

SurfaceReport realize_surface_check(const QuadComplex& complex) {
  const int nq = complex.quads();
  auto corner_id = [](int q, int c) { return static_cast<std::size_t>(q * 4 + (c % 4)); };
  DisjointSets corners(static_cast<std::size_t>(nq) * 4);
  int edge_count = 0;

  for (int q = 0; q < nq; ++q) {
    for (Side side : kSides) {
      const HalfEdge h{q, side};
      const auto& g = complex.gluing(h);
      if (!g) throw SurfaceStructureError("side " + side_name(h) + " of quad " + std::to_string(q) +
                                          " has no identification: the surface would have boundary");
      const auto& back = complex.gluing(g->to);
      if (!back || !(back->to == h) || back->reversed != g->reversed)
        throw SurfaceStructureError("identification " + side_name(h) + " ~ " + side_name(g->to) +
                                    " is not symmetric");
      const int a = side_index(side), b = side_index(g->to.side);
      if (g->reversed) {
        corners.unite(corner_id(q, a), corner_id(g->to.quad, b + 1));
        corners.unite(corner_id(q, a + 1), corner_id(g->to.quad, b));
      } else {
        corners.unite(corner_id(q, a), corner_id(g->to.quad, b));
        corners.unite(corner_id(q, a + 1), corner_id(g->to.quad, b + 1));
      }
      ++edge_count;
    }
  }

  SurfaceReport r;
  r.edges = edge_count / 2;
  r.faces = nq;
  for (std::size_t i = 0; i < corners.parent.size(); ++i)
    if (corners.find(i) == i) ++r.vertices;
  r.euler = r.vertices - r.edges + r.faces;

  // Orientation propagation: a reversed gluing keeps the orientation sign,
  // a direct one flips it.
  std::vector<int> sign(static_cast<std::size_t>(nq), 0);
  r.orientable = true;
  for (int start = 0; start < nq && r.orientable; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty() && r.orientable) {
      int q = todo.front();
      todo.pop();
      for (Side side : kSides) {
        const auto& g = complex.gluing({q, side});
        const int want = g->reversed ? sign[q] : -sign[q];
        int& other = sign[g->to.quad];
        if (other == 0) {
          other = want;
          todo.push(g->to.quad);
        } else if (other != want) {
          r.orientable = false;
          r.orientation_conflict = side_name({q, side}) + " ~ " + side_name(g->to);
          break;
        }
      }
    }
  }
  r.genus = r.orientable ? (2 - r.euler) / 2 : 2 - r.euler;
  return r;
}

std::pair<int, bool> realize_surface_check() {
  auto r = realize_surface_check(QuadComplex::hexagonal_annulus());
  if (!r.orientable || r.euler != -2)
    throw SurfaceStructureError("standard fiber complex is not a closed orientable genus-2 surface");
  return {r.genus, r.orientable};
}

}  // namespace sqk::fiber
