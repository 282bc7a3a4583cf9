#include "curve33.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trit {

namespace {

// upper facets of the lifted point configuration (i, j, a[i][j])
std::vector<std::vector<int>> upper_facets(const CoeffMatrix& a) {
  struct P3 {
    long long x, y;
    Rat z;
  };
  std::vector<P3> pts;
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) pts.push_back({i, j, a.a[i][j]});

  std::set<std::vector<int>> facets;
  for (int i = 0; i < 16; i++)
    for (int j = i + 1; j < 16; j++)
      for (int k = j + 1; k < 16; k++) {
        long long ux = pts[j].x - pts[i].x, uy = pts[j].y - pts[i].y;
        long long wx = pts[k].x - pts[i].x, wy = pts[k].y - pts[i].y;
        long long nz = ux * wy - uy * wx;
        if (nz == 0) continue;  // vertical plane, never an upper facet here
        Rat uz = pts[j].z - pts[i].z, wz = pts[k].z - pts[i].z;
        // normal = (u x w), oriented with positive z component
        Rat nx = uz * Rat(wy) - Rat(uy) * wz;
        Rat ny = Rat(ux) * wz - uz * Rat(wx);
        Rat nzr = Rat(nz);
        if (nz < 0) {
          nx = -nx;
          ny = -ny;
          nzr = -nzr;
        }
        std::vector<int> face;
        bool upper = true;
        for (int m = 0; m < 16 && upper; m++) {
          Rat s = nx * Rat(pts[m].x - pts[i].x) + ny * Rat(pts[m].y - pts[i].y) +
                  nzr * (pts[m].z - pts[i].z);
          if (s.sign() > 0)
            upper = false;
          else if (s.is_zero())
            face.push_back(m);
        }
        if (upper) facets.insert(face);
      }
  return {facets.begin(), facets.end()};
}

RVec2 dual_vertex(const CoeffMatrix& a, const SubTriangle& t) {
  auto [i1, j1] = lp_coords(t.pts[0]);
  auto [i2, j2] = lp_coords(t.pts[1]);
  auto [i3, j3] = lp_coords(t.pts[2]);
  // a1 + i1 x + j1 y = a2 + i2 x + j2 y = a3 + i3 x + j3 y
  Rat b1 = a.a[i1][j1] - a.a[i2][j2];
  Rat b2 = a.a[i1][j1] - a.a[i3][j3];
  long long m11 = i2 - i1, m12 = j2 - j1;
  long long m21 = i3 - i1, m22 = j3 - j1;
  long long det = m11 * m22 - m12 * m21;
  Rat x = (b1 * Rat(m22) - b2 * Rat(m12)) / Rat(det);
  Rat y = (Rat(m11) * b2 - Rat(m21) * b1) / Rat(det);
  return {x, y};
}

}  // namespace

CurveGamma build_curve(const CoeffMatrix& a) {
  CurveGamma g;
  g.coeffs = a;

  auto facets = upper_facets(a);
  std::set<int> used;
  for (auto& f : facets) {
    if (f.size() != 3)
      throw curve_error(curve_error::NotSmooth,
                        "not smooth: dual subdivision has a non-triangle cell");
    auto [i1, j1] = lp_coords(f[0]);
    auto [i2, j2] = lp_coords(f[1]);
    auto [i3, j3] = lp_coords(f[2]);
    long long det = (long long)(i2 - i1) * (j3 - j1) - (long long)(j2 - j1) * (i3 - i1);
    if (det != 1 && det != -1)
      throw curve_error(curve_error::NotSmooth,
                        "not smooth: dual cell is not a unimodular triangle");
    for (int p : f) used.insert(p);
  }
  if ((int)used.size() != 16)
    throw curve_error(curve_error::Degenerate,
                      "degenerate: some monomial never achieves the maximum");
  if (facets.size() != 18)
    throw curve_error(curve_error::NotSmooth, "not smooth: triangle count != 18");

  for (auto& f : facets) {
    SubTriangle t;
    std::copy(f.begin(), f.end(), t.pts.begin());
    std::sort(t.pts.begin(), t.pts.end());
    g.subdivision.triangles.push_back(t);
  }
  std::sort(g.subdivision.triangles.begin(), g.subdivision.triangles.end(),
            [](const SubTriangle& x, const SubTriangle& y) { return x.pts < y.pts; });

  // lattice edges with adjacency
  std::map<std::pair<int, int>, std::vector<int>> edge_tris;
  for (int ti = 0; ti < (int)g.subdivision.triangles.size(); ti++) {
    auto& t = g.subdivision.triangles[ti];
    for (int u = 0; u < 3; u++)
      for (int v = u + 1; v < 3; v++)
        edge_tris[{t.pts[u], t.pts[v]}].push_back(ti);
  }
  for (auto& [pq, tris] : edge_tris) {
    SubEdge e;
    e.p = pq.first;
    e.q = pq.second;
    e.tri_a = tris[0];
    e.tri_b = tris.size() > 1 ? tris[1] : -1;
    if (tris.size() > 2)
      throw curve_error(curve_error::NotSmooth, "not smooth: edge in >2 triangles");
    g.subdivision.edges.push_back(e);
  }

  // dual geometry
  g.vertices.resize(g.subdivision.triangles.size());
  for (int ti = 0; ti < (int)g.subdivision.triangles.size(); ti++) {
    g.vertices[ti].pos = dual_vertex(a, g.subdivision.triangles[ti]);
    g.vertices[ti].tri = ti;
  }

  for (int ei = 0; ei < (int)g.subdivision.edges.size(); ei++) {
    auto& e = g.subdivision.edges[ei];
    auto [pi, pj] = lp_coords(e.p);
    auto [qi, qj] = lp_coords(e.q);
    IVec2 dual_vec{qi - pi, qj - pj};
    IVec2 normal = primitive(dual_vec);  // dual edge vector is normal to the edge
    if (!e.boundary()) {
      GammaEdge ge;
      ge.va = e.tri_a;
      ge.vb = e.tri_b;
      RVec2 d = g.vertices[ge.vb].pos - g.vertices[ge.va].pos;
      if (d.x.is_zero() && d.y.is_zero())
        throw curve_error(curve_error::NotSmooth, "degenerate dual edge of length zero");
      // primitive integer direction of the edge
      IVec2 dir{-normal.y, normal.x};
      Rat t = rdet2(RVec2{Rat(dir.x), Rat(dir.y)}, d);
      if (!t.is_zero())
        throw curve_error(curve_error::NotSmooth, "dual edge direction mismatch");
      if ((d.x * Rat(dir.x) + d.y * Rat(dir.y)).sign() < 0) dir = -dir;
      ge.dir = dir;
      ge.dual = ei;
      ge.line_normal = normal;
      ge.line_off = rdot2(normal, g.vertices[ge.va].pos);
      int id = (int)g.edges.size();
      g.edges.push_back(ge);
      g.vertices[ge.va].edge_ids.push_back(id);
      g.vertices[ge.vb].edge_ids.push_back(id);
    } else {
      GammaLeg leg;
      leg.v = e.tri_a;
      IVec2 dir;
      if (pj == 0 && qj == 0)
        dir = {0, -1};
      else if (pj == 3 && qj == 3)
        dir = {0, 1};
      else if (pi == 0 && qi == 0)
        dir = {-1, 0};
      else if (pi == 3 && qi == 3)
        dir = {1, 0};
      else
        throw curve_error(curve_error::NotSmooth, "boundary edge not on the square boundary");
      leg.dir = dir;
      leg.dual = ei;
      leg.line_normal = normal;
      leg.line_off = rdot2(normal, g.vertices[leg.v].pos);
      int id = (int)g.legs.size();
      g.legs.push_back(leg);
      g.vertices[leg.v].leg_ids.push_back(id);
    }
  }

  // balancing at each vertex (all weights are one on a smooth curve)
  for (auto& v : g.vertices) {
    IVec2 s{0, 0};
    for (int ei : v.edge_ids) {
      auto& e = g.edges[ei];
      s = s + (e.va == v.tri ? e.dir : -e.dir);
    }
    for (int li : v.leg_ids) s = s + g.legs[li].dir;
    if (s.x != 0 || s.y != 0)
      throw curve_error(curve_error::NotSmooth, "balancing fails at a vertex");
    if (v.edge_ids.size() + v.leg_ids.size() != 3)
      throw curve_error(curve_error::NotSmooth, "vertex is not trivalent");
  }

  // chambers, one per lattice point
  g.chambers.resize(16);
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) {
      Chamber c;
      c.i = i;
      c.j = j;
      for (int k = 0; k < 4; k++)
        for (int l = 0; l < 4; l++) {
          if (k == i && l == j) continue;
          c.halfplanes.push_back({IVec2{i - k, j - l}, a.a[k][l] - a.a[i][j]});
        }
      g.chambers[lp_index(i, j)] = c;
    }
  return g;
}

Stratum CurveGamma::locate(const RVec2& p) const {
  Rat best;
  std::vector<int> arg;
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) {
      Rat v = coeffs.value(i, j, p);
      if (arg.empty() || v > best) {
        best = v;
        arg = {lp_index(i, j)};
      } else if (v == best) {
        arg.push_back(lp_index(i, j));
      }
    }
  Stratum s;
  s.dual = arg;
  if (arg.size() == 1) {
    s.kind = StratumKind::Chamber;
    s.index = arg[0];
    return s;
  }
  if (arg.size() == 2) {
    for (int ei = 0; ei < (int)subdivision.edges.size(); ei++) {
      auto& e = subdivision.edges[ei];
      if (e.p == arg[0] && e.q == arg[1]) {
        // map subdivision edge to geometric edge or leg id
        if (e.boundary()) {
          s.kind = StratumKind::LegInterior;
          for (int li = 0; li < (int)legs.size(); li++)
            if (legs[li].dual == ei) {
              s.index = li;
              return s;
            }
        } else {
          s.kind = StratumKind::EdgeInterior;
          for (int gi = 0; gi < (int)edges.size(); gi++)
            if (edges[gi].dual == ei) {
              s.index = gi;
              return s;
            }
        }
      }
    }
    throw std::logic_error("locate: tie set is not a subdivision edge");
  }
  if (arg.size() == 3) {
    std::array<int, 3> key{arg[0], arg[1], arg[2]};
    for (int ti = 0; ti < (int)subdivision.triangles.size(); ti++)
      if (subdivision.triangles[ti].pts == key) {
        s.kind = StratumKind::Vertex;
        s.index = ti;
        return s;
      }
    throw std::logic_error("locate: tie set is not a subdivision triangle");
  }
  throw std::logic_error("locate: unexpected tie set size");
}

namespace {
// the eight signed-permutation matrices
constexpr int kMats[8][4] = {
    {1, 0, 0, 1},    // id
    {0, -1, 1, 0},   // rot 90
    {-1, 0, 0, -1},  // rot 180
    {0, 1, -1, 0},   // rot 270
    {0, 1, 1, 0},    // reflect across diagonal
    {1, 0, 0, -1},   // reflect across horizontal axis
    {0, -1, -1, 0},  // reflect across antidiagonal
    {-1, 0, 0, 1},   // reflect across vertical axis
};
}  // namespace

IVec2 D4Element::apply_dir(const IVec2& v) const {
  const int* m = kMats[idx];
  return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y};
}

RVec2 D4Element::apply_point(const RVec2& p) const {
  const int* m = kMats[idx];
  return {p.x * Rat(m[0]) + p.y * Rat(m[1]), p.x * Rat(m[2]) + p.y * Rat(m[3])};
}

std::pair<int, int> D4Element::apply_lattice(int i, int j) const {
  const int* m = kMats[idx];
  // act on the square centered at (3/2, 3/2)
  int u = 2 * i - 3, v = 2 * j - 3;
  int nu = m[0] * u + m[1] * v, nv = m[2] * u + m[3] * v;
  return {(nu + 3) / 2, (nv + 3) / 2};
}

D4Element D4Element::compose(const D4Element& o) const {
  const int* A = kMats[idx];
  const int* B = kMats[o.idx];
  int C[4] = {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
              A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
  for (int k = 0; k < 8; k++)
    if (C[0] == kMats[k][0] && C[1] == kMats[k][1] && C[2] == kMats[k][2] &&
        C[3] == kMats[k][3])
      return D4Element{k};
  throw std::logic_error("d4 composition");
}

D4Element D4Element::inverse() const {
  for (int k = 0; k < 8; k++)
    if (compose(D4Element{k}).idx == 0) return D4Element{k};
  throw std::logic_error("d4 inverse");
}

const std::array<D4Element, 8> kD4 = {D4Element{0}, D4Element{1}, D4Element{2},
                                      D4Element{3}, D4Element{4}, D4Element{5},
                                      D4Element{6}, D4Element{7}};

CoeffMatrix d4_coeffs(const D4Element& g, const CoeffMatrix& a) {
  CoeffMatrix out;
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) {
      auto [ni, nj] = g.apply_lattice(i, j);
      out.a[ni][nj] = a.a[i][j];
    }
  return out;
}

CurveGamma d4_apply(const D4Element& g, const CurveGamma& gamma) {
  return build_curve(d4_coeffs(g, gamma.coeffs));
}

}  // namespace trit
