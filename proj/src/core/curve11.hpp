#pragma once

#include "vec.hpp"

#include <optional>
#include <vector>

namespace trit {

// a (1,1)-curve recorded by its lowest vertex and signed edge length
struct Curve11Param {
  RVec2 v0;
  Rat len;

  int valency() const { return len.is_zero() ? 4 : 3; }
  RVec2 v1() const {
    if (len.sign() > 0) return v0 + RVec2{len, len};
    if (len.sign() < 0) return v0 - RVec2{-len, len};
    return v0;
  }
  bool operator==(const Curve11Param& o) const { return v0 == o.v0 && len == o.len; }
};

struct Curve11Geometry {
  int valency;  // 3 or 4
  std::vector<RVec2> vertices;
  std::optional<std::pair<RVec2, RVec2>> edge;   // from v0 to v1
  std::vector<std::pair<RVec2, IVec2>> legs;     // anchor, outgoing direction
};

Curve11Param segre_psi(const RVec3& v);
RVec3 segre_psi_inverse(const Curve11Param& p);
Curve11Geometry geometry(const Curve11Param& p);

inline Curve11Param param_of(const RVec3& q) { return Curve11Param{{q.x, q.y}, q.z}; }
inline RVec3 point_of(const Curve11Param& p) { return {p.v0.x, p.v0.y, p.len}; }

}  // namespace trit
