#pragma once

#include "vec.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace trit {

struct curve_error : std::runtime_error {
  enum Kind { NotSmooth, Degenerate } kind;
  curve_error(Kind k, const std::string& m) : std::runtime_error(m), kind(k) {}
};

// tropical coefficients of the bidegree-(3,3) polynomial, max convention;
// a[i][j] goes with i*s + j*t
struct CoeffMatrix {
  std::array<std::array<Rat, 4>, 4> a{};
  Rat value(int i, int j, const RVec2& p) const {
    return a[i][j] + p.x * Rat(i) + p.y * Rat(j);
  }
};

inline int lp_index(int i, int j) { return i * 4 + j; }
inline std::pair<int, int> lp_coords(int idx) { return {idx / 4, idx % 4}; }

struct SubTriangle {
  std::array<int, 3> pts;  // lattice point indices, sorted
};

struct SubEdge {
  int p, q;          // lattice point indices, p < q
  int tri_a, tri_b;  // adjacent triangles; tri_b = -1 on the boundary
  bool boundary() const { return tri_b < 0; }
};

struct DualSubdivision {
  std::vector<SubTriangle> triangles;
  std::vector<SubEdge> edges;  // interior and boundary lattice edges
};

struct GammaVertex {
  RVec2 pos;
  int tri;                      // dual triangle
  std::vector<int> edge_ids;    // incident bounded edges
  std::vector<int> leg_ids;     // incident legs
};

struct GammaEdge {
  int va, vb;   // endpoint vertex ids
  IVec2 dir;    // primitive direction from va to vb
  int dual;     // index into subdivision.edges
  Rat line_off; // supporting line: line_normal . p = line_off
  IVec2 line_normal;
};

struct GammaLeg {
  int v;        // attaching vertex
  IVec2 dir;    // outgoing primitive direction
  int dual;     // boundary edge in subdivision.edges
  Rat line_off;
  IVec2 line_normal;
};

struct Chamber {
  int i, j;  // dual lattice point
  std::vector<std::pair<IVec2, Rat>> halfplanes;  // n . p >= c
};

enum class StratumKind { Chamber, EdgeInterior, LegInterior, Vertex };

struct Stratum {
  StratumKind kind;
  int index;  // chamber: lattice point index; otherwise edge/leg/vertex id
  // dual cell of the stratum as lattice point indices (1, 2 or 3 of them)
  std::vector<int> dual;
  bool operator==(const Stratum& o) const { return kind == o.kind && index == o.index; }
};

struct CurveGamma {
  CoeffMatrix coeffs;
  DualSubdivision subdivision;
  std::vector<GammaVertex> vertices;
  std::vector<GammaEdge> edges;
  std::vector<GammaLeg> legs;
  std::vector<Chamber> chambers;  // one per lattice point, indexed by lp_index

  Stratum locate(const RVec2& p) const;
};

CurveGamma build_curve(const CoeffMatrix& a);

// dihedral symmetries of the square: r = rotations, s = reflections
struct D4Element {
  int idx = 0;  // 0..3 rotations by 90deg * idx, 4..7 = reflection * rotation
  // linear action on R^2
  IVec2 apply_dir(const IVec2& v) const;
  RVec2 apply_point(const RVec2& p) const;
  // affine action on the lattice square {0..3}^2
  std::pair<int, int> apply_lattice(int i, int j) const;
  D4Element compose(const D4Element& o) const;  // this after o
  D4Element inverse() const;
};

extern const std::array<D4Element, 8> kD4;

CurveGamma d4_apply(const D4Element& g, const CurveGamma& gamma);
CoeffMatrix d4_coeffs(const D4Element& g, const CoeffMatrix& a);

}  // namespace trit
