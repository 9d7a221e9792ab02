#pragma once

#include <optional>

#include "verikit/algebraic.hpp"
#include "verikit/perm.hpp"

namespace verikit::poly {

// One branch value of a polynomial map together with its ramification
// profile.  Conjugate branch values (roots of one irreducible minimal
// polynomial) share a single datum; their profiles agree over the closure.
struct BranchDatum {
  bool at_infinity = false;
  mpq_class rational_value;             // valid when min_poly has degree 1
  QPoly min_poly;                       // monic irreducible; degree 1 if rational
  unsigned conjugates = 1;              // = deg(min_poly)
  CycleType ram_type;                   // over each conjugate value
  std::vector<mpq_class> special_points;  // rational unramified preimages
  unsigned unramified_preimages = 0;      // count over the closure

  bool is_rational() const { return !at_infinity && conjugates == 1; }
  std::string value_string() const;
};

// All branch data of f: every finite branch value (grouped by minimal
// polynomial) plus the infinity datum [deg f].
std::vector<BranchDatum> branch_data(const QPoly& f);

// Simple (unramified) preimages of a rational branch value; exact.
std::vector<mpq_class> special_points(const QPoly& f, const mpq_class& c);

// Evaluation over a quadratic context: is alpha a special point of f over
// the branch value f(alpha)?
bool is_special_point(const QPoly& f, const AlgebraicNumber& alpha);

// ---- named configuration checks for the explicit composition instances ----

enum class ConfigCase {
  CubeEdgeTimesCube,        // X^3(X-1) o (X^3+1): 1 special over branch 0
  QuadraticShiftNonsplit,   // X^3(X-1) o (X^2+b), b root of X^2+X/2+3/16
  SpecialQuarticShift,      // X^3(X-1) o (X^2+3/4)
  SpecialTimesCubeKernel,   // (X^3(X-4)+27)^p shape: [2,1^2] branch at 0
  AppendixQuinticSpecial,   // X^3(X^2+5X+40) o (X^3+alpha)
  GenericSquareTwist,       // (X^2(X^2+(w+3)X+9w/8+27/8))^2, w^2 = 3
};

struct ConfigReport {
  bool holds = false;
  std::string detail;
};
ConfigReport configuration_check(ConfigCase which);

// The two indecomposable quartic shapes with full symmetric monodromy:
// ramification ([3,1],[2,1,1],[4]) and ([2,1,1]x3,[4]).
bool is_special_quartic(const QPoly& f);
bool is_generic_quartic(const QPoly& f);

}  // namespace verikit::poly
