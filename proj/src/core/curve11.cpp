#include "curve11.hpp"

namespace trit {

Curve11Param segre_psi(const RVec3& v) {
  const Rat &x = v.x, &y = v.y, &z = v.z;
  if (x + y >= z) return Curve11Param{{x, z - x}, z - x - y};
  return Curve11Param{{x, y}, z - x - y};
}

RVec3 segre_psi_inverse(const Curve11Param& p) {
  const Rat &a = p.v0.x, &b = p.v0.y, &l = p.len;
  if (l.sign() <= 0) {
    // x+y >= z branch maps v to (x, z-x, z-x-y): x = a, z = a + b, y = b - l
    return {a, b - l, a + b};
  }
  // x+y <= z branch maps v to (x, y, z-x-y)
  return {a, b, a + b + l};
}

Curve11Geometry geometry(const Curve11Param& p) {
  Curve11Geometry g;
  g.valency = p.valency();
  RVec2 v0 = p.v0, v1 = p.v1();
  if (g.valency == 4) {
    g.vertices = {v0};
    g.legs = {{v0, {-1, 0}}, {v0, {0, -1}}, {v0, {1, 0}}, {v0, {0, 1}}};
    return g;
  }
  g.vertices = {v0, v1};
  g.edge = {{v0, v1}};
  if (p.len.sign() > 0) {
    g.legs = {{v0, {-1, 0}}, {v0, {0, -1}}, {v1, {1, 0}}, {v1, {0, 1}}};
  } else {
    g.legs = {{v0, {1, 0}}, {v0, {0, -1}}, {v1, {-1, 0}}, {v1, {0, 1}}};
  }
  return g;
}

}  // namespace trit
