#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "verikit/errors.hpp"

namespace verikit::poly {

// Dense polynomial over a field F (mpq_class or an algebraic extension).
// Coefficient i belongs to X^i; the representation is trailing-normalized.
template <class F>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(F constant) : c_{std::move(constant)} { trim(); }
  explicit DensePoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly x(const F& one = F(1)) {
    return DensePoly(std::vector<F>{F(0), one});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const F& coeff(std::size_t i) const {
    static const F zero = F(0);
    return i < c_.size() ? c_[i] : zero;
  }
  const std::vector<F>& coeffs() const { return c_; }
  const F& lc() const { return c_.back(); }

  F operator()(const F& x) const {
    F acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return DensePoly();
    std::vector<F> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<int>(i));
    return DensePoly(std::move(d));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return DensePoly(std::move(r));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return DensePoly(std::move(r));
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return DensePoly(std::move(r));
  }
  DensePoly operator*(const F& s) const {
    std::vector<F> r = c_;
    for (auto& x : r) x = x * s;
    return DensePoly(std::move(r));
  }
  DensePoly operator-() const { return *this * F(-1); }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.c_ == b.c_;
  }

  // Field division with remainder.
  static void divrem(const DensePoly& a, const DensePoly& b, DensePoly* q,
                     DensePoly* r) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<F> rem = a.c_;
    std::vector<F> quot(
        a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, F(0));
    F inv = F(1) / b.lc();
    while (static_cast<int>(rem.size()) - 1 >= b.degree() && !rem.empty()) {
      std::size_t shift = rem.size() - b.c_.size();
      F factor = rem.back() * inv;
      quot[shift] = factor;
      for (std::size_t i = 0; i < b.c_.size(); ++i)
        rem[i + shift] = rem[i + shift] - factor * b.c_[i];
      while (!rem.empty() && rem.back() == F(0)) rem.pop_back();
    }
    if (q) *q = DensePoly(std::move(quot));
    if (r) *r = DensePoly(std::move(rem));
  }

  DensePoly monic() const {
    if (is_zero()) return *this;
    return *this * (F(1) / lc());
  }

  static DensePoly gcd(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
      DensePoly r;
      divrem(a, b, nullptr, &r);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  DensePoly power(unsigned e) const {
    DensePoly acc(F(1)), base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  DensePoly compose(const DensePoly& inner) const {
    DensePoly acc;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * inner + DensePoly(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }
  std::vector<F> c_;
};

using QPoly = DensePoly<mpq_class>;

// ---- parsing / printing ("X^3*(X-1)", "27/256", ...) ----
QPoly parse_poly(const std::string& text);
std::string to_string(const QPoly& f);

// ---- basic exact machinery over Q ----

// Resultant of integer-cleared polynomials via the subresultant
// pseudo-remainder sequence with content stripping.
mpq_class resultant(const QPoly& a, const QPoly& b);
// Independent route, used as a cross-check: Euclidean remainder recursion.
mpq_class resultant_euclid(const QPoly& a, const QPoly& b);

mpz_class content_z(const std::vector<mpz_class>& v);
std::vector<mpz_class> clear_denominators(const QPoly& f, mpq_class* scale);

QPoly squarefree_part(const QPoly& f);

// Yun's squarefree decomposition: f = prod out[i].first ^ out[i].second.
template <class F>
std::vector<std::pair<DensePoly<F>, unsigned>> squarefree_decomposition(
    const DensePoly<F>& f) {
  std::vector<std::pair<DensePoly<F>, unsigned>> out;
  if (f.degree() < 1) return out;
  DensePoly<F> a = f.monic();
  DensePoly<F> g = DensePoly<F>::gcd(a, a.derivative());
  DensePoly<F> w, y;
  DensePoly<F>::divrem(a, g, &w, nullptr);
  DensePoly<F>::divrem(a.derivative(), g, &y, nullptr);
  unsigned i = 1;
  unsigned guard = static_cast<unsigned>(f.degree()) + 2;
  while (w.degree() > 0) {
    if (--guard == 0) throw Error("squarefree decomposition did not converge");
    DensePoly<F> z = y - w.derivative();
    DensePoly<F> p = DensePoly<F>::gcd(w, z);
    if (p.degree() > 0) out.emplace_back(p.monic(), i);
    DensePoly<F> w2, y2;
    DensePoly<F>::divrem(w, p, &w2, nullptr);
    DensePoly<F>::divrem(z, p, &y2, nullptr);
    w = std::move(w2);
    y = std::move(y2);
    ++i;
  }
  return out;
}

// ---- factorization over Q (linear and quadratic factors exactly; cubic and
// quartic irreducibility decided exactly; anything else fails loudly) ----

struct QFactor {
  QPoly factor;       // monic irreducible over Q
  unsigned multiplicity;
};
std::vector<QFactor> factor_over_q(const QPoly& f);
std::vector<mpq_class> rational_roots(const QPoly& f);
bool is_square(const mpq_class& x, mpq_class* root = nullptr);

// ---- composition / decomposition ----

QPoly compose(const QPoly& g, const QPoly& h, unsigned degree_cap = 256);
bool compositions_equal(const QPoly& g, const QPoly& h, const QPoly& v,
                        const QPoly& u);
// Attempts f = g o h with deg g = m, deg h = n; h is returned monic with
// h(0) = 0 (every decomposition can be normalized to this shape).
std::optional<std::pair<QPoly, QPoly>> try_decompose(const QPoly& f,
                                                     unsigned m, unsigned n);
bool decomposable_as(const QPoly& f, unsigned m, unsigned n);

// Chebyshev-like normalization: T_n(X + 1/X) = X^n + 1/X^n.
QPoly chebyshev(unsigned n);
bool chebyshev_identity_holds(const QPoly& t, unsigned n);

}  // namespace verikit::poly
