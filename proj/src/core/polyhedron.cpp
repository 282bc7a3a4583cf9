#include "polyhedron.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace trit {

HalfSpace3 make_halfspace(IVec3 normal, Rat offset, bool strict) {
  long long g = llgcd(llgcd(normal.x, normal.y), normal.z);
  if (g > 1) {
    normal.x /= g;
    normal.y /= g;
    normal.z /= g;
    offset = offset / Rat(g);
  }
  if (normal.x == 0 && normal.y == 0 && normal.z == 0)
    throw std::invalid_argument("zero normal");
  return HalfSpace3{normal, offset, strict};
}

bool Polyhedron3::contains(const RVec3& p) const {
  if (empty()) return false;
  for (auto& h : halfspaces)
    if (h.eval(p).sign() < 0) return false;
  return true;
}

namespace {

using V4 = std::array<int128, 4>;

int128 dot4(const V4& a, const V4& b) {
  int128 s = 0;
  for (int i = 0; i < 4; i++) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

void reduce4(V4& v) {
  int128 g = 0;
  for (auto c : v) g = gcd128(g, c);
  if (g > 1)
    for (auto& c : v) c /= g;
}

struct TightSet {
  uint64_t bits[2] = {0, 0};  // supports up to 128 constraints
  void set(int i) { bits[i >> 6] |= (uint64_t)1 << (i & 63); }
  bool subset_of(const TightSet& o) const {
    return (bits[0] & ~o.bits[0]) == 0 && (bits[1] & ~o.bits[1]) == 0;
  }
  TightSet intersect(const TightSet& o) const {
    TightSet r;
    r.bits[0] = bits[0] & o.bits[0];
    r.bits[1] = bits[1] & o.bits[1];
    return r;
  }
};

struct Ray4 {
  V4 v;
  TightSet tight;
};

struct ConeDD {
  std::vector<V4> lineality;
  std::vector<Ray4> rays;

  void init_full() {
    lineality.clear();
    rays.clear();
    for (int i = 0; i < 4; i++) {
      V4 e{0, 0, 0, 0};
      e[i] = 1;
      lineality.push_back(e);
    }
  }

  void insert(const V4& a, int index) {
    // lineality reduction
    int pivot = -1;
    for (size_t i = 0; i < lineality.size(); i++)
      if (dot4(a, lineality[i]) != 0) {
        pivot = (int)i;
        break;
      }
    if (pivot >= 0) {
      V4 w = lineality[pivot];
      int128 aw = dot4(a, w);
      if (aw < 0) {
        for (auto& c : w) c = -c;
        aw = -aw;
      }
      lineality.erase(lineality.begin() + pivot);
      for (auto& l : lineality) {
        int128 al = dot4(a, l);
        if (al != 0) {
          // l' = aw*l - al*w
          for (int i = 0; i < 4; i++)
            l[i] = checked_sub(checked_mul(aw, l[i]), checked_mul(al, w[i]));
          reduce4(l);
        }
      }
      for (auto& r : rays) {
        int128 ar = dot4(a, r.v);
        if (ar != 0) {
          for (int i = 0; i < 4; i++)
            r.v[i] = checked_sub(checked_mul(aw, r.v[i]), checked_mul(ar, w[i]));
          reduce4(r.v);
        }
        r.tight.set(index);
      }
      Ray4 nw;
      nw.v = w;
      // w is tight on all previously inserted constraints, not on this one
      nw.tight = full_previous_;
      rays.push_back(nw);
      full_previous_.set(index);
      return;
    }
    full_previous_.set(index);

    // classic double description step
    std::vector<int> pos, neg, zero;
    std::vector<int128> val(rays.size());
    for (size_t i = 0; i < rays.size(); i++) {
      val[i] = dot4(a, rays[i].v);
      if (val[i] > 0)
        pos.push_back((int)i);
      else if (val[i] < 0)
        neg.push_back((int)i);
      else
        zero.push_back((int)i);
    }
    if (neg.empty()) {
      for (int i : zero) rays[i].tight.set(index);
      return;
    }
    std::vector<Ray4> next;
    for (int i : pos) next.push_back(rays[i]);
    for (int i : zero) {
      rays[i].tight.set(index);
      next.push_back(rays[i]);
    }
    for (int ip : pos)
      for (int in : neg) {
        if (!adjacent(ip, in)) continue;
        Ray4 nr;
        int128 vp = val[ip], vn = val[in];
        // nr = vp * r[in] - vn * r[ip]
        for (int k = 0; k < 4; k++)
          nr.v[k] = checked_sub(checked_mul(vp, rays[in].v[k]),
                                checked_mul(vn, rays[ip].v[k]));
        reduce4(nr.v);
        nr.tight = rays[ip].tight.intersect(rays[in].tight);
        nr.tight.set(index);
        next.push_back(nr);
      }
    rays.swap(next);
  }

 private:
  TightSet full_previous_;

  bool adjacent(int i, int j) const {
    TightSet common = rays[i].tight.intersect(rays[j].tight);
    for (size_t k = 0; k < rays.size(); k++) {
      if ((int)k == i || (int)k == j) continue;
      if (common.subset_of(rays[k].tight)) return false;
    }
    return true;
  }
};

int rank3(std::vector<RVec3> vs) {
  int r = 0;
  for (int col = 0; col < 3 && r < (int)vs.size(); col++) {
    auto get = [&](const RVec3& v, int c) { return c == 0 ? v.x : (c == 1 ? v.y : v.z); };
    int piv = -1;
    for (int i = r; i < (int)vs.size(); i++)
      if (!get(vs[i], col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(vs[r], vs[piv]);
    for (int i = r + 1; i < (int)vs.size(); i++) {
      if (get(vs[i], col).is_zero()) continue;
      Rat f = get(vs[i], col) / get(vs[r], col);
      vs[i].x -= vs[r].x * f;
      vs[i].y -= vs[r].y * f;
      vs[i].z -= vs[r].z * f;
    }
    r++;
  }
  return r;
}

}  // namespace

Polyhedron3 make_polyhedron(const std::vector<HalfSpace3>& hs) {
  if (hs.size() > 127) throw std::invalid_argument("too many half-spaces");
  Polyhedron3 out;
  out.halfspaces = hs;

  ConeDD dd;
  dd.init_full();
  int idx = 0;
  for (auto& h : hs) {
    // homogenize: n.x - o*t >= 0, with o = p/q  ->  (q*n, -p)
    V4 a{(int128)h.normal.x, (int128)h.normal.y, (int128)h.normal.z, 0};
    int128 q = h.offset.den(), p = h.offset.num();
    for (int i = 0; i < 3; i++) a[i] = checked_mul(a[i], q);
    a[3] = -p;
    dd.insert(a, idx++);
  }
  V4 tpos{0, 0, 0, 1};
  dd.insert(tpos, idx++);

  bool has_vertex = false;
  for (auto& r : dd.rays)
    if (r.v[3] > 0) has_vertex = true;
  if (!has_vertex) {
    out.dim = -1;
    return out;
  }

  for (auto& r : dd.rays) {
    if (r.v[3] > 0) {
      Rat t(r.v[3], 1);
      out.vertices.push_back(
          RVec3{Rat(r.v[0], r.v[3]), Rat(r.v[1], r.v[3]), Rat(r.v[2], r.v[3])});
    } else {
      IVec3 d{(long long)r.v[0], (long long)r.v[1], (long long)r.v[2]};
      if (d.x || d.y || d.z) out.rays.push_back(primitive(d));
    }
  }
  for (auto& l : dd.lineality) {
    // lineality always has t = 0 here (t >= 0 was inserted)
    IVec3 d{(long long)l[0], (long long)l[1], (long long)l[2]};
    if (d.x || d.y || d.z) {
      d = primitive(d);
      out.rays.push_back(d);
      out.rays.push_back(-d);
    }
  }

  std::vector<RVec3> span;
  for (size_t i = 1; i < out.vertices.size(); i++)
    span.push_back(out.vertices[i] - out.vertices[0]);
  for (auto& r : out.rays) span.push_back(RVec3{Rat(r.x), Rat(r.y), Rat(r.z)});
  out.dim = rank3(span);
  return out;
}

RVec3 interior_point(const Polyhedron3& p) {
  if (p.empty()) throw std::domain_error("empty cell");
  RVec3 s{Rat(0), Rat(0), Rat(0)};
  for (auto& v : p.vertices) s = s + v;
  Rat k((long long)p.vertices.size());
  s = RVec3{s.x / k, s.y / k, s.z / k};
  for (auto& r : p.rays) s = s + RVec3{Rat(r.x), Rat(r.y), Rat(r.z)};
  return s;
}

bool closed_intersection_nonempty(const Polyhedron3& a, const Polyhedron3& b) {
  if (a.empty() || b.empty()) return false;
  std::vector<HalfSpace3> hs = a.halfspaces;
  hs.insert(hs.end(), b.halfspaces.begin(), b.halfspaces.end());
  return !make_polyhedron(hs).empty();
}

Cone3 cone_generators(const std::vector<IVec3>& normals) {
  ConeDD dd;
  dd.init_full();
  int idx = 0;
  for (auto& n : normals) {
    V4 a{(int128)n.x, (int128)n.y, (int128)n.z, 0};
    dd.insert(a, idx++);
  }
  // restrict to t = 0 plane: forbid t in both directions
  V4 tneg{0, 0, 0, -1};
  V4 tpos{0, 0, 0, 1};
  dd.insert(tpos, idx++);
  dd.insert(tneg, idx++);

  Cone3 c;
  for (auto& r : dd.rays) {
    IVec3 d{(long long)r.v[0], (long long)r.v[1], (long long)r.v[2]};
    if (d.x || d.y || d.z) c.rays.push_back(primitive(d));
  }
  for (auto& l : dd.lineality) {
    IVec3 d{(long long)l[0], (long long)l[1], (long long)l[2]};
    if (d.x || d.y || d.z) c.lines.push_back(primitive(d));
  }
  return c;
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; i++) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

void CellComplex3::compute_adjacency() {
  adjacency.clear();
  for (size_t i = 0; i < cells.size(); i++)
    for (size_t j = i + 1; j < cells.size(); j++)
      if (closed_intersection_nonempty(cells[i], cells[j]))
        adjacency.push_back({(int)i, (int)j});
  adjacency_valid = true;
}

std::vector<std::vector<int>> CellComplex3::component_cell_indices() const {
  CellComplex3 tmp;
  const std::vector<std::pair<int, int>>* adj = &adjacency;
  if (!adjacency_valid) {
    tmp = *this;
    tmp.compute_adjacency();
    adj = &tmp.adjacency;
  }
  UnionFind uf((int)cells.size());
  for (auto& [i, j] : *adj) uf.unite(i, j);
  std::vector<std::vector<int>> groups;
  std::vector<int> root_to_group(cells.size(), -1);
  for (int i = 0; i < (int)cells.size(); i++) {
    int r = uf.find(i);
    if (root_to_group[r] < 0) {
      root_to_group[r] = (int)groups.size();
      groups.push_back({});
    }
    groups[root_to_group[r]].push_back(i);
  }
  return groups;
}

std::vector<CellComplex3> CellComplex3::connected_components() const {
  std::vector<CellComplex3> out;
  for (auto& g : component_cell_indices()) {
    CellComplex3 c;
    for (int i : g) c.cells.push_back(cells[i]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace trit
