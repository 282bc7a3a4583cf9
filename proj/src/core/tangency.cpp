#include "tangency.hpp"

#include "catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <unordered_map>

namespace trit {

namespace {

struct LPart {
  RVec2 anchor;
  IVec2 dir;
  std::optional<Rat> tmax;  // parameter range [0, tmax], unbounded if empty
  LambdaRef ref;
};

struct GPart {
  RVec2 anchor;
  IVec2 dir;
  std::optional<Rat> tmax;
  GammaRef ref;
};

std::vector<LPart> lambda_parts(const Curve11Param& p) {
  std::vector<LPart> parts;
  auto g = geometry(p);
  for (int i = 0; i < (int)g.legs.size(); i++) {
    auto& [anchor, dir] = g.legs[i];
    parts.push_back({anchor, dir, std::nullopt, {LambdaRef::LegInterior, i}});
  }
  if (g.edge) {
    IVec2 dir = p.len.sign() > 0 ? IVec2{1, 1} : IVec2{-1, 1};
    parts.push_back({g.edge->first, dir, p.len.abs(), {LambdaRef::EdgeInterior, 0}});
  }
  return parts;
}

std::vector<GPart> gamma_parts(const CurveGamma& gamma) {
  std::vector<GPart> parts;
  for (int i = 0; i < (int)gamma.edges.size(); i++) {
    auto& e = gamma.edges[i];
    RVec2 a = gamma.vertices[e.va].pos, b = gamma.vertices[e.vb].pos;
    RVec2 d = b - a;
    Rat t = e.dir.x != 0 ? d.x / Rat(e.dir.x) : d.y / Rat(e.dir.y);
    parts.push_back({a, e.dir, t, {StratumKind::EdgeInterior, i}});
  }
  for (int i = 0; i < (int)gamma.legs.size(); i++) {
    auto& l = gamma.legs[i];
    parts.push_back(
        {gamma.vertices[l.v].pos, l.dir, std::nullopt, {StratumKind::LegInterior, i}});
  }
  return parts;
}

Rat param_of(const RVec2& anchor, const IVec2& dir, const RVec2& x) {
  if (dir.x != 0) return (x.x - anchor.x) / Rat(dir.x);
  return (x.y - anchor.y) / Rat(dir.y);
}

bool on_line(const RVec2& anchor, const IVec2& dir, const RVec2& x) {
  return (Rat(dir.x) * (x.y - anchor.y) - Rat(dir.y) * (x.x - anchor.x)).is_zero();
}

bool piece_contains(const SupportPiece& pc, const RVec2& x) {
  if (pc.q) {
    RVec2 u = *pc.q - pc.p;
    Rat cross = u.x * (x.y - pc.p.y) - u.y * (x.x - pc.p.x);
    if (!cross.is_zero()) return false;
    Rat t = !u.x.is_zero() ? (x.x - pc.p.x) / u.x : (x.y - pc.p.y) / u.y;
    return t.sign() >= 0 && t <= Rat(1);
  }
  if (pc.ray_dir) {
    if (!on_line(pc.p, *pc.ray_dir, x)) return false;
    return param_of(pc.p, *pc.ray_dir, x).sign() >= 0;
  }
  return pc.p == x;
}

bool pieces_touch(const SupportPiece& a, const SupportPiece& b) {
  if (piece_contains(b, a.p)) return true;
  if (a.q && piece_contains(b, *a.q)) return true;
  if (piece_contains(a, b.p)) return true;
  if (b.q && piece_contains(a, *b.q)) return true;
  if (a.dim() == 1 && b.dim() == 1 && !a.q && !b.q) {
    // two rays with no endpoint inside the other overlap only if they are
    // collinear and opposed
    if (idet2(*a.ray_dir, *b.ray_dir) == 0 && on_line(a.p, *a.ray_dir, b.p) &&
        idot2(*a.ray_dir, *b.ray_dir) < 0)
      return true;
  }
  return false;
}

int dir_class(const IVec2& d) {
  if (d.y == 0) return 0;
  if (d.x == 0) return 1;
  if (d.x == d.y || d.x == -d.y) return 2;
  return 3;
}

IVec2 prim_dir_of(const RVec2& u) {
  // u != 0 rational vector -> parallel primitive integer vector
  int128 ax = u.x.num() * u.y.den();
  int128 ay = u.y.num() * u.x.den();
  return canon_dir(IVec2{(long long)ax, (long long)ay});
}

}  // namespace

PerturbationScheme valid_perturbation(const Curve11Param& lambda, const CurveGamma& gamma,
                                      IVec2 start) {
  std::vector<IVec2> dirs = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (auto& e : gamma.edges) dirs.push_back(e.dir);
  for (auto& l : gamma.legs) dirs.push_back(l.dir);
  IVec2 g = start;
  for (int tries = 0; tries < 64; tries++) {
    bool ok = true;
    for (auto& d : dirs)
      if (idet2(g, d) == 0) {
        ok = false;
        break;
      }
    if (ok) return PerturbationScheme{g};
    g.y += 1;
  }
  throw std::logic_error("no valid perturbation direction found");
}

std::vector<IntersectionComponent> stable_intersection(const Curve11Param& lambda,
                                                       const CurveGamma& gamma) {
  return stable_intersection(lambda, gamma, valid_perturbation(lambda, gamma));
}

std::vector<IntersectionComponent> stable_intersection(const Curve11Param& lambda,
                                                       const CurveGamma& gamma,
                                                       const PerturbationScheme& scheme) {
  auto lparts = lambda_parts(lambda);
  auto gparts = gamma_parts(gamma);
  const IVec2 g = scheme.dir;

  // ---- pieces of the set intersection ----
  std::vector<SupportPiece> pieces;
  auto push_range = [&](const LPart& lp, const Rat& lo, std::optional<Rat> hi) {
    SupportPiece pc;
    pc.p = lp.anchor + RVec2{Rat(lp.dir.x) * lo, Rat(lp.dir.y) * lo};
    if (hi) {
      if (*hi < lo) return;
      if (*hi > lo) pc.q = lp.anchor + RVec2{Rat(lp.dir.x) * *hi, Rat(lp.dir.y) * *hi};
    } else {
      pc.ray_dir = lp.dir;
    }
    pieces.push_back(pc);
  };

  for (auto& lp : lparts) {
    for (auto& gp : gparts) {
      long long det = idet2(lp.dir, gp.dir);
      if (det == 0) {
        if (!on_line(lp.anchor, lp.dir, gp.anchor)) continue;
        // collinear; both directions are primitive and parallel, so the
        // gamma part occupies [t0, t0 +- tmax] in lambda-part parameters
        Rat t0 = param_of(lp.anchor, lp.dir, gp.anchor);
        bool same_dir = idot2(lp.dir, gp.dir) > 0;
        Rat lo(0);
        std::optional<Rat> hi = lp.tmax;
        if (gp.tmax) {
          Rat t1 = same_dir ? t0 + *gp.tmax : t0 - *gp.tmax;
          Rat a = min(t0, t1), b = max(t0, t1);
          if (a > lo) lo = a;
          hi = hi ? min(*hi, b) : b;
          if (*hi < lo) continue;
          push_range(lp, lo, hi);
        } else if (same_dir) {
          if (t0 > lo) lo = t0;
          if (hi && *hi < lo) continue;
          push_range(lp, lo, hi);
        } else {
          std::optional<Rat> top = hi ? min(*hi, t0) : t0;
          if (*top < lo) continue;
          push_range(lp, lo, top);
        }
      } else {
        RVec2 rhs = gp.anchor - lp.anchor;
        Rat s = (rhs.x * Rat(gp.dir.y) - rhs.y * Rat(gp.dir.x)) / Rat(det);
        Rat t = (Rat(lp.dir.x) * rhs.y - Rat(lp.dir.y) * rhs.x) / Rat(det);
        if (s.sign() < 0 || (lp.tmax && s > *lp.tmax)) continue;
        if (t.sign() < 0 || (gp.tmax && t > *gp.tmax)) continue;
        SupportPiece pc;
        pc.p = lp.anchor + RVec2{Rat(lp.dir.x) * s, Rat(lp.dir.y) * s};
        pieces.push_back(pc);
      }
    }
  }

  // drop duplicate point pieces
  {
    std::vector<SupportPiece> uniq;
    for (auto& pc : pieces) {
      bool dup = false;
      if (pc.dim() == 0)
        for (auto& u : uniq)
          if (u.dim() == 0 && u.p == pc.p) {
            dup = true;
            break;
          }
      if (!dup) uniq.push_back(pc);
    }
    pieces.swap(uniq);
  }

  // ---- connected components of the pieces ----
  int n = (int)pieces.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; i++) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (find(i) != find(j) && pieces_touch(pieces[i], pieces[j]))
        parent[find(i)] = find(j);

  std::map<int, int> root_to_comp;
  std::vector<IntersectionComponent> comps;
  for (int i = 0; i < n; i++) {
    int r = find(i);
    if (!root_to_comp.count(r)) {
      root_to_comp[r] = (int)comps.size();
      comps.push_back({});
    }
    comps[root_to_comp[r]].pieces.push_back(pieces[i]);
  }

  // ---- crossings of the eps-shifted curve ----
  struct DotAcc {
    RVec2 pos;
    long long mult;
  };
  std::vector<DotAcc> dots;
  for (auto& lp : lparts) {
    for (auto& gp : gparts) {
      long long det = idet2(lp.dir, gp.dir);
      if (det == 0) continue;
      // (lp.anchor + eps*g) + s*u = gp.anchor + t*w
      RVec2 rhs0 = gp.anchor - lp.anchor;
      Eps rx{rhs0.x, -Rat(g.x)}, ry{rhs0.y, -Rat(g.y)};
      Eps s = (rx.scale(Rat(gp.dir.y)) - ry.scale(Rat(gp.dir.x))).scale(Rat(1) / Rat(det));
      Eps t = (rx.scale(Rat(lp.dir.y)) - ry.scale(Rat(lp.dir.x))).scale(Rat(-1) / Rat(det));
      auto strict_inside = [](const Eps& v, const std::optional<Rat>& vmax) {
        if (v.sign() <= 0) {
          if (v.sign() == 0) throw std::logic_error("perturbation hit a part endpoint");
          return false;
        }
        if (vmax) {
          int c = v.cmp(Eps(*vmax));
          if (c >= 0) {
            if (c == 0) throw std::logic_error("perturbation hit a part endpoint");
            return false;
          }
        }
        return true;
      };
      if (!strict_inside(s, lp.tmax)) continue;
      if (!strict_inside(t, gp.tmax)) continue;
      long long mult = det < 0 ? -det : det;
      RVec2 limit = lp.anchor + RVec2{Rat(lp.dir.x) * s.a, Rat(lp.dir.y) * s.a};
      dots.push_back({limit, mult});
    }
  }

  // ---- group the crossing limits and assign them to components ----
  std::vector<DotAcc> grouped;
  for (auto& d : dots) {
    bool merged = false;
    for (auto& gpt : grouped)
      if (gpt.pos == d.pos) {
        gpt.mult += d.mult;
        merged = true;
        break;
      }
    if (!merged) grouped.push_back(d);
  }

  auto comp_contains = [&](const IntersectionComponent& c, const RVec2& x) {
    for (auto& pc : c.pieces)
      if (piece_contains(pc, x)) return true;
    return false;
  };

  RVec2 v0 = lambda.v0, v1 = lambda.v1();
  long long total = 0;
  for (auto& d : grouped) {
    total += d.mult;
    bool placed = false;
    for (auto& c : comps) {
      if (!comp_contains(c, d.pos)) continue;
      TangencyPoint tp;
      tp.pos = d.pos;
      tp.mult = d.mult;
      if (d.pos == v0)
        tp.on_lambda = {LambdaRef::Vertex, 0};
      else if (d.pos == v1)
        tp.on_lambda = {LambdaRef::Vertex, 1};
      else {
        tp.on_lambda = {LambdaRef::LegInterior, -1};
        for (auto& lp : lparts) {
          if (!on_line(lp.anchor, lp.dir, d.pos)) continue;
          Rat u = param_of(lp.anchor, lp.dir, d.pos);
          if (u.sign() < 0 || (lp.tmax && u > *lp.tmax)) continue;
          tp.on_lambda = lp.ref;
          break;
        }
        if (tp.on_lambda.index < 0) throw std::logic_error("tangency dot not on the curve");
      }
      auto st = gamma.locate(d.pos);
      if (st.kind == StratumKind::Chamber)
        throw std::logic_error("tangency dot off the curve");
      tp.on_gamma = {st.kind, st.index};
      c.points.push_back(tp);
      c.stable_mult += d.mult;
      placed = true;
      break;
    }
    if (!placed) throw std::logic_error("stable limit outside the set intersection");
  }
  if (total != 6) throw std::logic_error("total stable multiplicity != 6");

  for (auto& c : comps) {
    c.has_lambda_vertex[0] = comp_contains(c, v0);
    c.has_lambda_vertex[1] = comp_contains(c, v1);
    for (auto& pc : c.pieces)
      if (pc.ray_dir) c.unbounded = true;
    std::sort(c.points.begin(), c.points.end(),
              [](const TangencyPoint& a, const TangencyPoint& b) {
                int cx = a.pos.x.cmp(b.pos.x);
                if (cx) return cx < 0;
                return a.pos.y.cmp(b.pos.y) < 0;
              });
  }
  std::sort(comps.begin(), comps.end(),
            [](const IntersectionComponent& a, const IntersectionComponent& b) {
              RVec2 pa = a.pieces[0].p, pb = b.pieces[0].p;
              int cx = pa.x.cmp(pb.x);
              if (cx) return cx < 0;
              return pa.y.cmp(pb.y) < 0;
            });
  return comps;
}

std::optional<TangencyTuple> is_tritangent(const Curve11Param& lambda,
                                           const CurveGamma& gamma) {
  auto comps = stable_intersection(lambda, gamma);
  for (auto& c : comps)
    if (c.stable_mult <= 0 || c.stable_mult % 2 != 0) return std::nullopt;
  TangencyTuple t;
  t.lambda = lambda;
  t.components = std::move(comps);
  for (auto& c : t.components) t.types.push_back(classify(c, lambda, gamma));
  return t;
}

TangencyType classify(const IntersectionComponent& c, const Curve11Param& lambda,
                      const CurveGamma& gamma) {
  CatalogKey key;
  key.valency = lambda.valency();
  int dim = 0;
  for (auto& pc : c.pieces) dim = std::max(dim, pc.dim());
  key.dim = dim;
  key.mult = (int)c.stable_mult;

  RVec2 v0 = lambda.v0, v1 = lambda.v1();

  if (dim == 0) {
    if (c.points.empty()) throw std::logic_error("point component without tangency point");
    const TangencyPoint& tp = c.points[0];
    key.lcar = tp.on_lambda.kind == LambdaRef::Vertex        ? 2
               : tp.on_lambda.kind == LambdaRef::EdgeInterior ? 1
                                                              : 0;
    key.gcar = tp.on_gamma.kind == StratumKind::Vertex        ? 2
               : tp.on_gamma.kind == StratumKind::LegInterior ? 1
                                                              : 0;
    if (key.gcar == 0)
      key.dirclass = dir_class(gamma.edges[tp.on_gamma.index].dir);
    else if (key.gcar == 1)
      key.dirclass = dir_class(gamma.legs[tp.on_gamma.index].dir);
    else if (key.lcar == 2) {
      // vertex on vertex: look for a gamma edge anti-parallel to a direction
      // of the (1,1)-curve at this vertex
      const GammaVertex& q = gamma.vertices[tp.on_gamma.index];
      std::vector<IVec2> lam_dirs;
      auto geo = geometry(lambda);
      for (auto& [anchor, d] : geo.legs)
        if (anchor == tp.pos) lam_dirs.push_back(d);
      if (geo.edge) {
        IVec2 ed = lambda.len.sign() > 0 ? IVec2{1, 1} : IVec2{-1, 1};
        if (geo.edge->first == tp.pos) lam_dirs.push_back(ed);
        if (geo.edge->second == tp.pos) lam_dirs.push_back(-ed);
      }
      std::vector<IVec2> gam_dirs;
      for (int ei : q.edge_ids) {
        auto& e = gamma.edges[ei];
        gam_dirs.push_back(e.va == q.tri ? e.dir : -e.dir);
      }
      for (int li : q.leg_ids) gam_dirs.push_back(gamma.legs[li].dir);
      int best = 9;
      auto rank = [](int x) { return x == 2 ? 0 : (x == 0 ? 1 : (x == 1 ? 2 : 3)); };
      for (auto& w : gam_dirs)
        for (auto& u : lam_dirs)
          if (w == -u) {
            int cls = dir_class(w);
            if (best == 9 || rank(cls) < rank(best)) best = cls;
          }
      key.dirclass = best;
    }
    return catalog_lookup(key);
  }

  // one-dimensional component: collect the distinct overlap lines
  struct Line {
    IVec2 dir;
    RVec2 pt;
  };
  std::vector<Line> lines;
  for (auto& pc : c.pieces) {
    if (pc.dim() == 0) continue;
    IVec2 d = pc.ray_dir ? canon_dir(*pc.ray_dir) : prim_dir_of(*pc.q - pc.p);
    bool found = false;
    for (auto& ln : lines)
      if (ln.dir == d && on_line(ln.pt, ln.dir, pc.p)) {
        found = true;
        break;
      }
    if (!found) lines.push_back({d, pc.p});
  }
  key.arms = (int)lines.size();
  if (key.arms != 1) return catalog_lookup(key);

  IVec2 d = lines[0].dir;
  key.dirclass = dir_class(d);

  // union of the parameter intervals along the line
  RVec2 ref = lines[0].pt;
  bool ray_lo = false, ray_hi = false;
  std::optional<Rat> lo, hi;
  auto widen = [&](const Rat& t) {
    if (!lo || t < *lo) lo = t;
    if (!hi || t > *hi) hi = t;
  };
  for (auto& pc : c.pieces) {
    if (pc.dim() == 0) continue;
    widen(param_of(ref, d, pc.p));
    if (pc.q)
      widen(param_of(ref, d, *pc.q));
    else if (idot2(*pc.ray_dir, d) > 0)
      ray_hi = true;
    else
      ray_lo = true;
  }
  auto end_letter = [&](const RVec2& x) {
    bool lam = (x == v0) || (x == v1);
    bool gam = gamma.locate(x).kind == StratumKind::Vertex;
    if (lam && gam) return 1;
    if (lam) return 0;
    if (gam) return 2;
    throw std::logic_error("overlap end carried by no vertex");
  };
  RVec2 plo = ref + RVec2{Rat(d.x) * *lo, Rat(d.y) * *lo};
  RVec2 phi = ref + RVec2{Rat(d.x) * *hi, Rat(d.y) * *hi};
  int la = ray_lo ? 3 : end_letter(plo);
  int lb = ray_hi ? 3 : end_letter(phi);
  key.ends = 4 * std::min(la, lb) + std::max(la, lb);

  if (key.dirclass == 2 && key.valency == 3) {
    int nverts = (c.has_lambda_vertex[0] ? 1 : 0) + (c.has_lambda_vertex[1] ? 1 : 0);
    if (nverts == 1) {
      // near-corner test for the overlapped edge at the in-component vertex
      int vid = c.has_lambda_vertex[0] ? 0 : 1;
      RVec2 w = vid == 0 ? v0 : v1;
      std::vector<int> dual;
      auto st = gamma.locate(w);
      if (st.kind == StratumKind::EdgeInterior) {
        dual = st.dual;
      } else if (st.kind == StratumKind::Vertex) {
        for (int ei : gamma.vertices[st.index].edge_ids) {
          auto& e = gamma.edges[ei];
          if (canon_dir(e.dir) == canon_dir(d)) {
            auto& se = gamma.subdivision.edges[e.dual];
            dual = {se.p, se.q};
          }
        }
      }
      key.corner = 0;
      if (dual.size() == 2) {
        auto [ai, aj] = lp_coords(dual[0]);
        auto [bi, bj] = lp_coords(dual[1]);
        for (int ci : {0, 3})
          for (int cj : {0, 3}) {
            int d1 = std::max(std::abs(ai - ci), std::abs(aj - cj));
            int d2 = std::max(std::abs(bi - ci), std::abs(bj - cj));
            if (d1 == 1 && d2 == 1) {
              int lsign = lambda.len.sign();
              bool match = (ci == 0 && cj == 0 && lsign > 0 && vid == 0) ||
                           (ci == 3 && cj == 3 && lsign > 0 && vid == 1) ||
                           (ci == 3 && cj == 0 && lsign < 0 && vid == 0) ||
                           (ci == 0 && cj == 3 && lsign < 0 && vid == 1);
              if (match) key.corner = 1;
            }
          }
      }
    }
  }

  if (key.dirclass == 2 && key.ends == 5) {
    // vertex-to-vertex overlap: do the extra edges at the smaller endpoint
    // straddle the overlap line?
    RVec2 low = plo;
    int cx = plo.x.cmp(phi.x);
    if (cx > 0 || (cx == 0 && plo.y > phi.y)) low = phi;
    auto st = gamma.locate(low);
    key.disc = 0;
    if (st.kind == StratumKind::Vertex) {
      auto& q = gamma.vertices[st.index];
      IVec2 nrm{-d.y, d.x};
      int side_pos = 0, side_neg = 0;
      auto tally = [&](long long s) {
        if (s > 0) side_pos++;
        if (s < 0) side_neg++;
      };
      for (int ei : q.edge_ids) {
        auto& e = gamma.edges[ei];
        IVec2 out = e.va == q.tri ? e.dir : -e.dir;
        tally(idot2(nrm, out));
      }
      for (int li : q.leg_ids) tally(idot2(nrm, gamma.legs[li].dir));
      key.disc = (side_pos >= 1 && side_neg >= 1) ? 0 : 1;
    }
  }

  return catalog_lookup(key);
}

int compute_mu(const TangencyTuple& t, int idx, const CurveGamma& gamma) {
  const auto& type = t.types.at(idx);
  bool eligible =
      ((type.label == "4a" || type.label == "6a") && type.flavor == Flavor::Diagonal) ||
      type.label == "4a'" || type.label == "6a'";
  if (!eligible) throw std::domain_error("mu undefined for this type");
  const auto& comp = t.components[idx];
  if (comp.points.empty()) throw std::domain_error("mu undefined for this type");
  RVec2 P = comp.points[0].pos;

  IVec2 edge_dir{0, 0};
  auto st = gamma.locate(P);
  if (st.kind == StratumKind::EdgeInterior) {
    edge_dir = gamma.edges[st.index].dir;
  } else if (st.kind == StratumKind::Vertex) {
    for (int ei : gamma.vertices[st.index].edge_ids) {
      auto& e = gamma.edges[ei];
      if (dir_class(e.dir) == 2) edge_dir = e.dir;
    }
  }
  if (dir_class(edge_dir) != 2) throw std::domain_error("mu undefined for this type");
  IVec2 nrm{-edge_dir.y, edge_dir.x};

  int plus = 0, minus = 0;
  for (int i = 0; i < (int)t.components.size(); i++) {
    if (i == idx) continue;
    bool all_plus = true, all_minus = true;
    for (auto& tp : t.components[i].points) {
      int s = rdot2(nrm, tp.pos - P).sign();
      if (s < 0) all_plus = false;
      if (s > 0) all_minus = false;
    }
    if (all_plus) plus++;
    if (all_minus) minus++;
  }
  int mu = std::max(plus, minus);
  return mu >= 2 ? 2 : 1;
}

}  // namespace trit
