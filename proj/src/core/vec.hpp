#pragma once

#include "rat.hpp"

#include <array>
#include <cstdint>

namespace trit {

template <class T>
struct Vec2 {
  T x{}, y{};
  Vec2() = default;
  Vec2(T a, T b) : x(a), y(b) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  template <class S>
  Vec2 operator*(const S& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

template <class T>
struct Vec3 {
  T x{}, y{}, z{};
  Vec3() = default;
  Vec3(T a, T b, T c) : x(a), y(b), z(c) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  template <class S>
  Vec3 operator*(const S& s) const { return {x * s, y * s, z * s}; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Vec3& o) const { return !(*this == o); }
};

using IVec2 = Vec2<long long>;
using IVec3 = Vec3<long long>;
using RVec2 = Vec2<Rat>;
using RVec3 = Vec3<Rat>;

inline long long llgcd(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long idet2(const IVec2& u, const IVec2& w) { return u.x * w.y - u.y * w.x; }
inline long long idot2(const IVec2& u, const IVec2& w) { return u.x * w.x + u.y * w.y; }

inline Rat rdot2(const IVec2& n, const RVec2& p) { return Rat(n.x) * p.x + Rat(n.y) * p.y; }
inline Rat rdot3(const IVec3& n, const RVec3& p) {
  return Rat(n.x) * p.x + Rat(n.y) * p.y + Rat(n.z) * p.z;
}
inline Rat rdet2(const RVec2& u, const RVec2& w) { return u.x * w.y - u.y * w.x; }

inline IVec2 primitive(IVec2 v) {
  long long g = llgcd(v.x, v.y);
  if (g > 1) {
    v.x /= g;
    v.y /= g;
  }
  return v;
}

inline IVec3 primitive(IVec3 v) {
  long long g = llgcd(llgcd(v.x, v.y), v.z);
  if (g > 1) {
    v.x /= g;
    v.y /= g;
    v.z /= g;
  }
  return v;
}

inline IVec3 icross(const IVec3& a, const IVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline long long idot3(const IVec3& a, const IVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// canonical sign: first nonzero coordinate positive
inline IVec3 canon_dir(IVec3 v) {
  v = primitive(v);
  long long lead = v.x != 0 ? v.x : (v.y != 0 ? v.y : v.z);
  if (lead < 0) v = -v;
  return v;
}

inline IVec2 canon_dir(IVec2 v) {
  v = primitive(v);
  long long lead = v.x != 0 ? v.x : v.y;
  if (lead < 0) v = -v;
  return v;
}

struct RVec2Hash {
  size_t operator()(const RVec2& p) const { return p.x.hash() * 131 + p.y.hash(); }
};
struct RVec3Hash {
  size_t operator()(const RVec3& p) const {
    return (p.x.hash() * 131 + p.y.hash()) * 131 + p.z.hash();
  }
};

// lexicographic comparison helpers
inline int cmp_lex(const RVec3& a, const RVec3& b) {
  int c = a.x.cmp(b.x);
  if (c) return c;
  c = a.y.cmp(b.y);
  if (c) return c;
  return a.z.cmp(b.z);
}

}  // namespace trit
