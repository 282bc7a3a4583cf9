#pragma once

#include "curve11.hpp"
#include "curve33.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trit {

// first-order infinitesimal a + b*eps with lexicographic order
struct Eps {
  Rat a, b;
  Eps() = default;
  Eps(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit Eps(Rat a_) : a(std::move(a_)), b(0) {}

  Eps operator+(const Eps& o) const { return {a + o.a, b + o.b}; }
  Eps operator-(const Eps& o) const { return {a - o.a, b - o.b}; }
  Eps operator-() const { return {-a, -b}; }
  Eps scale(const Rat& s) const { return {a * s, b * s}; }
  int sign() const { return a.is_zero() ? b.sign() : a.sign(); }
  int cmp(const Eps& o) const { return (*this - o).sign(); }
};

struct GammaRef {
  StratumKind kind = StratumKind::Vertex;  // Vertex / EdgeInterior / LegInterior
  int index = -1;
  bool operator==(const GammaRef& o) const { return kind == o.kind && index == o.index; }
};

// carrier of a point on the (1,1)-curve
struct LambdaRef {
  enum Kind { LegInterior, EdgeInterior, Vertex } kind;
  int index;  // leg id 0..3 / 0 for the edge / vertex 0..1
  bool operator==(const LambdaRef& o) const { return kind == o.kind && index == o.index; }
};

struct TangencyPoint {
  RVec2 pos;
  long long mult = 0;  // limit multiplicity
  LambdaRef on_lambda;
  GammaRef on_gamma;
};

// connected piece of the set intersection
struct SupportPiece {
  RVec2 p;
  std::optional<RVec2> q;        // segment end
  std::optional<IVec2> ray_dir;  // ray direction
  int dim() const { return q || ray_dir ? 1 : 0; }
};

struct IntersectionComponent {
  std::vector<SupportPiece> pieces;
  long long stable_mult = 0;
  std::vector<TangencyPoint> points;  // positive limit multiplicity only
  bool has_lambda_vertex[2] = {false, false};
  bool unbounded = false;
};

enum class Flavor { None, Horizontal, Vertical, Diagonal };

struct TangencyType {
  std::string label;
  Flavor flavor = Flavor::None;
  int d4_witness = 0;
};

struct TangencyTuple {
  Curve11Param lambda;
  std::vector<IntersectionComponent> components;
  std::vector<TangencyType> types;
};

struct PerturbationScheme {
  IVec2 dir{1, 13};
};

PerturbationScheme valid_perturbation(const Curve11Param& lambda, const CurveGamma& gamma,
                                      IVec2 start = {1, 13});

std::vector<IntersectionComponent> stable_intersection(const Curve11Param& lambda,
                                                       const CurveGamma& gamma);
std::vector<IntersectionComponent> stable_intersection(const Curve11Param& lambda,
                                                       const CurveGamma& gamma,
                                                       const PerturbationScheme& scheme);

std::optional<TangencyTuple> is_tritangent(const Curve11Param& lambda, const CurveGamma& gamma);

TangencyType classify(const IntersectionComponent& c, const Curve11Param& lambda,
                      const CurveGamma& gamma);

// half-plane count for diagonal vertex tangencies
int compute_mu(const TangencyTuple& t, int idx, const CurveGamma& gamma);

}  // namespace trit
