#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/polyhedron.hpp"

#include <set>

using namespace trit;

namespace {
HalfSpace3 hs(long long nx, long long ny, long long nz, Rat off) {
  return make_halfspace({nx, ny, nz}, off);
}
std::set<std::array<std::string, 3>> vset(const Polyhedron3& p) {
  std::set<std::array<std::string, 3>> s;
  for (auto& v : p.vertices) s.insert({v.x.str(), v.y.str(), v.z.str()});
  return s;
}
}  // namespace

TEST_CASE("unit simplex") {
  auto p = make_polyhedron({hs(1, 0, 0, 0), hs(0, 1, 0, 0), hs(0, 0, 1, 0),
                            hs(-1, -1, -1, -1)});
  CHECK(p.dim == 3);
  CHECK(p.rays.empty());
  CHECK(p.vertices.size() == 4);
  auto vs = vset(p);
  CHECK(vs.count({"0", "0", "0"}));
  CHECK(vs.count({"1", "0", "0"}));
  CHECK(vs.count({"0", "1", "0"}));
  CHECK(vs.count({"0", "0", "1"}));
}

TEST_CASE("single point") {
  auto p = make_polyhedron({hs(1, 0, 0, 0), hs(-1, 0, 0, 0), hs(0, 1, 0, 0),
                            hs(0, -1, 0, 0), hs(0, 0, 1, 0), hs(0, 0, -1, 0)});
  CHECK(p.dim == 0);
  CHECK(p.vertices.size() == 1);
  CHECK(p.vertices[0] == RVec3{Rat(0), Rat(0), Rat(0)});
  CHECK(interior_point(p) == RVec3{Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("quadrant in a plane") {
  auto p = make_polyhedron({hs(1, 0, 0, 0), hs(0, 1, 0, 0), hs(0, 0, 1, 0),
                            hs(0, 0, -1, 0)});
  CHECK(p.dim == 2);
  CHECK(p.vertices.size() == 1);
  CHECK(p.rays.size() == 2);
  std::set<std::array<long long, 3>> rays;
  for (auto& r : p.rays) rays.insert({r.x, r.y, r.z});
  CHECK(rays.count({1, 0, 0}));
  CHECK(rays.count({0, 1, 0}));
  CHECK(interior_point(p) == RVec3{Rat(1), Rat(1), Rat(0)});
}

TEST_CASE("empty polyhedron is flagged") {
  auto p = make_polyhedron({hs(1, 0, 0, 1), hs(-1, 0, 0, 1)});
  CHECK(p.empty());
  CHECK_THROWS(interior_point(p));
}

TEST_CASE("segment midpoint") {
  auto p = make_polyhedron({hs(1, 0, 0, 0), hs(-1, 0, 0, -1), hs(0, 1, 0, 0),
                            hs(0, -1, 0, 0), hs(0, 0, 1, 0), hs(0, 0, -1, 0)});
  CHECK(p.dim == 1);
  CHECK(interior_point(p) == RVec3{Rat(1, 2), Rat(0), Rat(0)});
}

TEST_CASE("slab contains lines") {
  auto p = make_polyhedron({hs(0, 0, 1, 0), hs(0, 0, -1, -1)});
  CHECK(p.dim == 3);
  CHECK(!p.bounded());
  // lines appear as +/- ray pairs; the interior point stays in the slab
  auto ip = interior_point(p);
  CHECK(p.contains(ip));
  for (auto& h : p.halfspaces) CHECK(h.eval(ip).sign() > 0);
}

TEST_CASE("round trip through the H representation") {
  std::vector<HalfSpace3> hr = {hs(1, 0, 0, 0),  hs(0, 1, 0, 0),
                                hs(0, 0, 1, 0),  hs(-1, 0, 0, -2),
                                hs(0, -1, 0, -2), hs(0, 0, -1, -2),
                                hs(-1, -1, -1, -5)};
  auto p = make_polyhedron(hr);
  auto q = make_polyhedron(p.halfspaces);
  CHECK(vset(p) == vset(q));
  // every V-generator satisfies every halfspace
  for (auto& v : q.vertices)
    for (auto& h : hr) CHECK(h.eval(v).sign() >= 0);
}

TEST_CASE("interior point is strictly interior") {
  auto p = make_polyhedron({hs(1, 0, 0, 0), hs(0, 1, 0, 0), hs(0, 0, 1, 0),
                            hs(-1, -1, -1, -1)});
  auto ip = interior_point(p);
  for (auto& h : p.halfspaces) CHECK(h.eval(ip).sign() > 0);
}

TEST_CASE("closed intersection tests") {
  auto cube = make_polyhedron({hs(1, 0, 0, 0), hs(-1, 0, 0, -1), hs(0, 1, 0, 0),
                               hs(0, -1, 0, -1), hs(0, 0, 1, 0), hs(0, 0, -1, -1)});
  auto shifted = make_polyhedron({hs(1, 0, 0, 1), hs(-1, 0, 0, -2), hs(0, 1, 0, 0),
                                  hs(0, -1, 0, -1), hs(0, 0, 1, 0), hs(0, 0, -1, -1)});
  auto far = make_polyhedron({hs(1, 0, 0, 5), hs(-1, 0, 0, -6), hs(0, 1, 0, 0),
                              hs(0, -1, 0, -1), hs(0, 0, 1, 0), hs(0, 0, -1, -1)});
  CHECK(closed_intersection_nonempty(cube, shifted));  // share the facet x = 1
  CHECK(!closed_intersection_nonempty(cube, far));
}

TEST_CASE("connected components of a cell collection") {
  auto pt = [&](long long x) {
    return make_polyhedron({hs(1, 0, 0, x), hs(-1, 0, 0, -x), hs(0, 1, 0, 0),
                            hs(0, -1, 0, 0), hs(0, 0, 1, 0), hs(0, 0, -1, 0)});
  };
  auto seg01 = make_polyhedron({hs(1, 0, 0, 0), hs(-1, 0, 0, -1), hs(0, 1, 0, 0),
                                hs(0, -1, 0, 0), hs(0, 0, 1, 0), hs(0, 0, -1, 0)});
  CellComplex3 k;
  k.cells = {pt(0), pt(5), seg01, pt(1)};
  auto comps = k.connected_components();
  CHECK(comps.size() == 2);  // {pt0, seg, pt1} and {pt5}

  CellComplex3 two;
  two.cells = {pt(0), pt(5)};
  CHECK(two.connected_components().size() == 2);

  // idempotent and order-independent
  CellComplex3 k2;
  k2.cells = {pt(1), seg01, pt(5), pt(0)};
  CHECK(k2.connected_components().size() == 2);
}

TEST_CASE("recession cone generators") {
  auto c = cone_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(c.rays.size() == 3);
  CHECK(c.lines.empty());
  auto plane = cone_generators({{0, 0, 1}, {0, 0, -1}});
  CHECK(plane.lines.size() == 2);
}
