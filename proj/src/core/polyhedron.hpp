#pragma once

#include "vec.hpp"

#include <optional>
#include <vector>

namespace trit {

// closed half-space { x : normal . x >= offset }; strict marks open side when
// used to describe relatively open sign conditions
struct HalfSpace3 {
  IVec3 normal;
  Rat offset;
  bool strict = false;

  Rat eval(const RVec3& p) const { return rdot3(normal, p) - offset; }
};

HalfSpace3 make_halfspace(IVec3 normal, Rat offset, bool strict = false);

// convex polyhedron in R^3 carrying both representations; lines are stored as
// +/- ray pairs
struct Polyhedron3 {
  std::vector<HalfSpace3> halfspaces;
  std::vector<RVec3> vertices;
  std::vector<IVec3> rays;
  int dim = -1;  // -1 empty, else 0..3

  bool empty() const { return dim < 0; }
  bool bounded() const { return !empty() && rays.empty(); }
  bool contains(const RVec3& p) const;
};

// exact double description: H-representation in, generators out
Polyhedron3 make_polyhedron(const std::vector<HalfSpace3>& hs);

// deterministic relative-interior point: vertex barycenter plus the sum of
// the (primitive) rays
RVec3 interior_point(const Polyhedron3& p);

bool closed_intersection_nonempty(const Polyhedron3& a, const Polyhedron3& b);

struct CellComplex3 {
  std::vector<Polyhedron3> cells;
  // face-containment / adjacency pairs (i,j); optional, computed on demand
  std::vector<std::pair<int, int>> adjacency;
  bool adjacency_valid = false;

  void compute_adjacency();
  std::vector<std::vector<int>> component_cell_indices() const;
  std::vector<CellComplex3> connected_components() const;
  int dim() const {
    int d = -1;
    for (auto& c : cells) d = std::max(d, c.dim);
    return d;
  }
};

// raw cone generators for { d : n . d >= 0 for all n }, used for recession
// cones
struct Cone3 {
  std::vector<IVec3> rays;   // extreme rays (primitive)
  std::vector<IVec3> lines;  // lineality basis
  bool trivial() const { return rays.empty() && lines.empty(); }
};
Cone3 cone_generators(const std::vector<IVec3>& normals);

}  // namespace trit
