#include "verikit/algebraic.hpp"

#include <sstream>

namespace verikit::poly {

AlgebraicContext::AlgebraicContext(QPoly modulus) : m_(modulus.monic()) {
  if (m_.degree() < 2 || m_.degree() > 4)
    throw ContextDegreeExceeded("context modulus degree must be 2..4");
  auto factors = factor_over_q(m_);
  if (factors.size() != 1 || factors[0].multiplicity != 1 ||
      factors[0].factor.degree() != m_.degree())
    throw Error("context modulus must be irreducible over Q");
}

AlgebraicNumber::AlgebraicNumber(ContextPtr ctx, std::vector<mpq_class> coords)
    : ctx_(std::move(ctx)), c_(std::move(coords)) {
  if (ctx_) {
    if (c_.size() > ctx_->degree()) {
      QPoly rem;
      QPoly::divrem(QPoly(c_), ctx_->modulus(), nullptr, &rem);
      c_.assign(ctx_->degree(), 0);
      for (unsigned i = 0; i < c_.size(); ++i) c_[i] = rem.coeff(i);
    } else {
      c_.resize(ctx_->degree(), 0);
    }
  } else {
    c_.resize(1, 0);
  }
  reduce();
}

AlgebraicNumber AlgebraicNumber::generator(const ContextPtr& ctx) {
  std::vector<mpq_class> c(ctx->degree(), 0);
  c[1] = 1;
  return AlgebraicNumber(ctx, std::move(c));
}

bool AlgebraicNumber::is_rational() const {
  if (!ctx_) return true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw Error("value is not rational");
  return c_.empty() ? mpq_class(0) : c_[0];
}

bool AlgebraicNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return rational_value().get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*t";
    if (i > 1) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

void AlgebraicNumber::reduce() {
  if (!ctx_) return;
  // coords are kept below the modulus degree by construction
}

void AlgebraicNumber::align(AlgebraicNumber& a, AlgebraicNumber& b) {
  if (a.ctx_ == b.ctx_) return;
  if (a.ctx_ && b.ctx_)
    throw Error("mixed algebraic contexts");
  if (!a.ctx_) {
    mpq_class v = a.c_.empty() ? mpq_class(0) : a.c_[0];
    a.ctx_ = b.ctx_;
    a.c_.assign(b.c_.size(), 0);
    a.c_[0] = v;
  } else {
    align(b, a);
  }
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber x = a, y = b;
  AlgebraicNumber::align(x, y);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber x = a, y = b;
  AlgebraicNumber::align(x, y);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber x = a, y = b;
  AlgebraicNumber::align(x, y);
  if (!x.ctx_) {
    return AlgebraicNumber(x.c_[0] * y.c_[0]);
  }
  QPoly prod = QPoly(x.c_) * QPoly(y.c_);
  QPoly rem;
  QPoly::divrem(prod, x.ctx_->modulus(), nullptr, &rem);
  std::vector<mpq_class> coords(x.ctx_->degree(), 0);
  for (unsigned i = 0; i < coords.size(); ++i) coords[i] = rem.coeff(i);
  return AlgebraicNumber(x.ctx_, std::move(coords));
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (b.is_zero()) throw Error("division by zero");
  AlgebraicNumber x = a, y = b;
  AlgebraicNumber::align(x, y);
  if (!x.ctx_) return AlgebraicNumber(x.c_[0] / y.c_[0]);
  // invert y via extended Euclid in Q[t]/(m)
  QPoly r0 = x.ctx_->modulus(), r1 = QPoly(y.c_);
  QPoly s0(mpq_class(0)), s1(mpq_class(1));
  while (!r1.is_zero() && r1.degree() > 0) {
    QPoly q, r;
    QPoly::divrem(r0, r1, &q, &r);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw Error("element not invertible (modulus reducible?)");
  QPoly inv = s1 * (mpq_class(1) / r1.coeff(0));
  std::vector<mpq_class> coords(x.ctx_->degree(), 0);
  QPoly rem;
  QPoly::divrem(inv, x.ctx_->modulus(), nullptr, &rem);
  for (unsigned i = 0; i < coords.size(); ++i) coords[i] = rem.coeff(i);
  return x * AlgebraicNumber(x.ctx_, std::move(coords));
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber x = a, y = b;
  AlgebraicNumber::align(x, y);
  return x.c_ == y.c_;
}

KPoly lift(const QPoly& f) {
  std::vector<AlgebraicNumber> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.emplace_back(q);
  return KPoly(std::move(c));
}

KPoly lift(const QPoly& f, const ContextPtr& ctx) {
  std::vector<AlgebraicNumber> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs())
    c.emplace_back(ctx, std::vector<mpq_class>{q});
  return KPoly(std::move(c));
}

std::vector<std::pair<unsigned, unsigned>> root_multiplicities(const KPoly& f) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const auto& [part, mult] : squarefree_decomposition(f))
    out.emplace_back(mult, static_cast<unsigned>(part.degree()));
  return out;
}

}  // namespace verikit::poly
