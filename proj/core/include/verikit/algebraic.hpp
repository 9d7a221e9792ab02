#pragma once

#include <memory>

#include "verikit/rational_poly.hpp"

namespace verikit::poly {

// Arithmetic in Q[t]/(m(t)) for a monic irreducible m of degree <= 4.
// All the explicit examples in scope need degree <= 2; the cap avoids a
// general number-field tower.
class AlgebraicContext {
 public:
  explicit AlgebraicContext(QPoly modulus);
  const QPoly& modulus() const { return m_; }
  unsigned degree() const { return static_cast<unsigned>(m_.degree()); }

 private:
  QPoly m_;
};

using ContextPtr = std::shared_ptr<const AlgebraicContext>;

// Element of Q or of a fixed AlgebraicContext; a null context means a plain
// rational.  Mixed arithmetic lifts rationals into the other context.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : c_{mpq_class(0)} {}
  AlgebraicNumber(int v) : c_{mpq_class(v)} {}                      // NOLINT
  AlgebraicNumber(const mpq_class& v) : c_{v} {}                    // NOLINT
  AlgebraicNumber(ContextPtr ctx, std::vector<mpq_class> coords);

  static AlgebraicNumber generator(const ContextPtr& ctx);  // the class of t

  const ContextPtr& context() const { return ctx_; }
  bool is_rational() const;
  mpq_class rational_value() const;  // throws unless is_rational()
  const std::vector<mpq_class>& coords() const { return c_; }

  bool is_zero() const;
  std::string to_string() const;

  friend AlgebraicNumber operator+(const AlgebraicNumber& a,
                                   const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a,
                                   const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a,
                                   const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a,
                                   const AlgebraicNumber& b);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return !(a == b);
  }

 private:
  static void align(AlgebraicNumber& a, AlgebraicNumber& b);
  void reduce();

  ContextPtr ctx_;  // null: rational
  std::vector<mpq_class> c_;
};

using KPoly = DensePoly<AlgebraicNumber>;

KPoly lift(const QPoly& f);  // rational coefficients, no context
KPoly lift(const QPoly& f, const ContextPtr& ctx);

// Multiplicity profile of the roots of f over the algebraic closure:
// pairs (multiplicity, number of roots with that multiplicity).
std::vector<std::pair<unsigned, unsigned>> root_multiplicities(const KPoly& f);

}  // namespace verikit::poly
