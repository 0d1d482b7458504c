#pragma once

// Cell structure of the closed genus-2 fiber F∪: six sextant quadrilaterals
// of a hexagonal annulus. Sides are listed counter-clockwise starting from the
// outer hexagon edge:
//
//   Outer     O_s      o_s     -> o_{s+1}
//   NextLine  L_{s+1}  o_{s+1} -> i_{s+1}
//   Inner     I_s      i_{s+1} -> i_s
//   PrevLine  L_s      i_s     -> o_s
//
// Opposite hexagon edges are identified by translation (O_s ~ O_{s+3},
// I_s ~ I_{s+3}) and neighbouring sextants share their sextant line.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqk::fiber {

inline constexpr int kSextants = 6;

enum class Side : std::uint8_t { Outer = 0, NextLine = 1, Inner = 2, PrevLine = 3 };

inline constexpr std::array<Side, 4> kSides = {Side::Outer, Side::NextLine, Side::Inner, Side::PrevLine};

inline int side_index(Side s) { return static_cast<int>(s); }

inline int mod6(int s) { return ((s % kSextants) + kSextants) % kSextants; }

struct HalfEdge {
  int quad = 0;
  Side side = Side::Outer;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

// The identification partner of a side in the standard complex.
constexpr HalfEdge partner(HalfEdge h) {
  switch (h.side) {
    case Side::Outer: return {(h.quad + 3) % kSextants, Side::Outer};
    case Side::Inner: return {(h.quad + 3) % kSextants, Side::Inner};
    case Side::NextLine: return {(h.quad + 1) % kSextants, Side::PrevLine};
    case Side::PrevLine: return {(h.quad + kSextants - 1) % kSextants, Side::NextLine};
  }
  return h;
}

// Branch-point class (0..3) of corner `c` of quad `s`; corner c is the start
// of side c. Classes: 0 = even outer vertices, 1 = odd outer, 2 = even inner,
// 3 = odd inner.
int vertex_class(int s, int c);

std::string side_name(HalfEdge h);

struct Gluing {
  HalfEdge to;
  // True when traversing the two sides in their own counter-clockwise
  // directions runs in opposite directions along the shared edge; this is the
  // orientation-compatible identification.
  bool reversed = true;
};

// A general complex of quadrilaterals with side identifications. The
// standard fiber is hexagonal_annulus(); deliberately corrupted copies are
// used to exercise the structural checks.
class QuadComplex {
 public:
  explicit QuadComplex(int quads);
  static QuadComplex hexagonal_annulus();

  int quads() const { return static_cast<int>(glue_.size()); }
  void glue(HalfEdge a, HalfEdge b, bool reversed);
  void unglue(HalfEdge a);
  const std::optional<Gluing>& gluing(HalfEdge h) const;

 private:
  std::vector<std::array<std::optional<Gluing>, 4>> glue_;
};

struct SurfaceReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  bool orientable = false;
  // Orientable genus, or the number of cross-caps when non-orientable.
  int genus = 0;
  // First identification at which orientation propagation failed.
  std::string orientation_conflict;
};

// Builds the quotient surface and reports V - E + F, orientability and genus.
// Throws SurfaceStructureError naming the offending side when a side is left
// unglued (the quotient would have boundary) or a gluing is not symmetric.
SurfaceReport realize_surface_check(const QuadComplex& complex);

// (genus, orientable) of the standard fiber.
std::pair<int, bool> realize_surface_check();

}  // namespace sqk::fiber
