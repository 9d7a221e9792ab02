#include "verikit/rational_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace verikit::poly {

// ----------------------------------------------------------------- parsing

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  QPoly parse_expr() {
    QPoly acc = parse_term();
    while (true) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  QPoly parse_term() {
    QPoly acc = parse_power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i;
        acc = acc * parse_power();
      } else if (c == '/') {
        ++i;
        QPoly d = parse_power();
        if (d.degree() != 0)
          throw ParseError("division only by nonzero constants");
        acc = acc * QPoly(mpq_class(1) / d.coeff(0));
      } else if (c == '(' || c == 'X' || c == 'x' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * parse_power();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  QPoly parse_power() {
    QPoly base = parse_atom();
    if (eat('^')) {
      skip();
      unsigned e = 0;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("exponent must be a nonnegative integer");
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        e = e * 10 + (s[i++] - '0');
      return base.power(e);
    }
    return base;
  }

  QPoly parse_atom() {
    skip();
    if (eat('(')) {
      QPoly inner = parse_expr();
      if (!eat(')')) throw ParseError("missing ')'");
      return inner;
    }
    if (eat('-')) return -parse_atom();
    if (peek() == 'X' || peek() == 'x') {
      ++i;
      return QPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      mpz_class num(s.substr(start, i - start));
      return QPoly(mpq_class(num));
    }
    throw ParseError("unexpected character in polynomial");
  }
};

}  // namespace

QPoly parse_poly(const std::string& text) {
  Parser p{text};
  QPoly result = p.parse_expr();
  p.skip();
  if (p.i != text.size()) throw ParseError("trailing characters in polynomial");
  return result;
}

std::string to_string(const QPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = f.degree(); d >= 0; --d) {
    mpq_class c = f.coeff(d);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    mpq_class a = abs(c);
    bool need_coeff = (a != 1) || d == 0;
    if (need_coeff) os << a.get_str();
    if (d > 0) {
      if (need_coeff) os << "*";
      os << "X";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

// ----------------------------------------------------------- integer tools

mpz_class content_z(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::vector<mpz_class> clear_denominators(const QPoly& f, mpq_class* scale) {
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<mpz_class> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs())
    out.push_back(mpz_class(c.get_num() * (lcm_den / c.get_den())));
  if (scale) *scale = mpq_class(1, lcm_den);  // f = scale * (integer poly)
  return out;
}

// ---------------------------------------------------------------- resultant

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, trailing-trimmed

ZPoly z_trim(ZPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}
int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, computed by
// scaling the remainder by lc(b) at each reduction step so every division
// stays exact, then topping up the scale for skipped degrees.
ZPoly z_prem(ZPoly a, const ZPoly& b) {
  int d = z_deg(a) - z_deg(b);
  mpz_class lb = b.back();
  int steps = 0;
  while (z_deg(a) >= z_deg(b) && !a.empty()) {
    mpz_class head = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= head * b[i];
    a = z_trim(std::move(a));
    ++steps;
  }
  if (steps <= d)
    for (int k = steps; k <= d; ++k)
      for (auto& c : a) c *= lb;
  return a;
}

mpz_class z_pow(const mpz_class& x, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

// Subresultant PRS resultant of primitive integer polynomials.
mpz_class z_resultant(ZPoly a, ZPoly b) {
  a = z_trim(std::move(a));
  b = z_trim(std::move(b));
  if (a.empty() || b.empty()) return 0;
  int sign = 1;
  if (z_deg(a) < z_deg(b)) {
    if ((z_deg(a) & 1) && (z_deg(b) & 1)) sign = -sign;
    std::swap(a, b);
  }
  if (z_deg(b) == 0) return sign * z_pow(b[0], z_deg(a));
  mpz_class g = 1, h = 1;
  while (true) {
    int da = z_deg(a), db = z_deg(b);
    int d = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    ZPoly r = z_prem(a, b);
    if (r.empty()) return 0;  // common factor of positive degree
    a = std::move(b);
    b = std::move(r);
    mpz_class divisor = g * z_pow(h, d);
    for (auto& c : b) {
      mpz_class q, rr;
      mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), c.get_mpz_t(),
                  divisor.get_mpz_t());
      c = q;
    }
    g = a.back();
    if (d > 0) {
      mpz_class hd = z_pow(h, d - 1);
      h = z_pow(g, d) / (d >= 1 ? hd : mpz_class(1));
    }
    if (z_deg(b) == 0) {
      int dA = z_deg(a);
      mpz_class num = z_pow(b[0], dA);
      mpz_class res = num / z_pow(h, dA - 1);
      return sign * res;
    }
  }
}

}  // namespace

mpq_class resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  mpq_class sa, sb;
  ZPoly za = clear_denominators(a, &sa);
  ZPoly zb = clear_denominators(b, &sb);
  mpz_class ca = content_z(za), cb = content_z(zb);
  for (auto& c : za) c /= ca;
  for (auto& c : zb) c /= cb;
  mpz_class core = z_resultant(za, zb);
  // res(s*A, B) = s^degB res(A, B)
  mpq_class out(core);
  mpq_class fa = sa * mpq_class(ca), fb = sb * mpq_class(cb);
  for (int i = 0; i < b.degree(); ++i) out *= fa;
  for (int i = 0; i < a.degree(); ++i) out *= fb;
  return out;
}

mpq_class resultant_euclid(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() < b.degree()) {
    mpq_class s = (a.degree() & 1) && (b.degree() & 1) ? -1 : 1;
    return s * resultant_euclid(b, a);
  }
  if (b.degree() == 0) {
    mpq_class r = 1;
    for (int i = 0; i < a.degree(); ++i) r *= b.coeff(0);
    return r;
  }
  QPoly rem;
  QPoly::divrem(a, b, nullptr, &rem);
  if (rem.is_zero()) return 0;
  mpq_class lead = 1;
  for (int i = 0; i < a.degree() - rem.degree(); ++i) lead *= b.lc();
  mpq_class s = (a.degree() & 1) && (b.degree() & 1) ? -1 : 1;
  return s * lead * resultant_euclid(b, rem);
}

QPoly squarefree_part(const QPoly& f) {
  if (f.degree() < 1) return f.monic();
  QPoly g = QPoly::gcd(f, f.derivative());
  QPoly q;
  QPoly::divrem(f, g, &q, nullptr);
  return q.monic();
}

// ------------------------------------------------------------ factorization

bool is_square(const mpq_class& x, mpq_class* root) {
  if (x < 0) return false;
  mpz_class num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = mpq_class(rn) / mpq_class(rd);
  }
  return true;
}

namespace {

mpz_class pollard_rho(const mpz_class& n, unsigned long c0) {
  // Brent's variant; n must be odd composite
  mpz_class x = 2, y = 2, d = 1, c = c0;
  auto step = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
  while (d == 1) {
    x = step(x);
    y = step(step(y));
    mpz_class diff = x > y ? x - y : y - x;
    if (diff == 0) return 0;  // cycle without factor, retry with new c
    mpz_class g = gcd(diff, n);
    d = g;
  }
  return d == n ? 0 : d;
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& fac) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++fac[n];
    return;
  }
  for (unsigned long c = 1; c < 64; ++c) {
    mpz_class d = pollard_rho(n, c);
    if (d != 0) {
      factor_into(d, fac);
      factor_into(n / d, fac);
      return;
    }
  }
  throw ResourceBudgetExceeded(
      "coefficient too large for exact divisor enumeration");
}

// Divisors of |n|: trial division for the small part, Pollard rho beyond.
std::vector<mpz_class> divisors(mpz_class n, unsigned long bound = 100000) {
  n = abs(n);
  if (n == 0) throw Error("divisors of zero requested");
  std::map<mpz_class, unsigned> fac;
  for (mpz_class d = 2; d * d <= n && d <= bound; ++d) {
    while (n % d == 0) {
      ++fac[d];
      n /= d;
    }
  }
  if (n > 1) factor_into(n, fac);
  std::vector<mpz_class> out{1};
  for (const auto& [prime, mult] : fac) {
    std::size_t sz = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= mult; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<mpq_class> rational_roots(const QPoly& f) {
  std::vector<mpq_class> roots;
  if (f.degree() < 1) return roots;
  QPoly g = f;
  // strip zero roots first
  while (g.coeff(0) == 0) {
    roots.push_back(0);
    std::vector<mpq_class> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = QPoly(std::move(shifted));
  }
  if (g.degree() < 1) return roots;
  std::vector<mpz_class> z = clear_denominators(g, nullptr);
  mpz_class c = content_z(z);
  for (auto& x : z) x /= c;
  // candidates p/q with p | z[0], q | z.back()
  auto nums = divisors(z[0]);
  auto dens = divisors(z.back());
  if (nums.size() * dens.size() > 200000)
    throw ResourceBudgetExceeded(
        "too many rational root candidates for exact enumeration");
  for (const auto& p : nums)
    for (const auto& q : dens)
      for (int sign : {1, -1}) {
        mpq_class cand(sign * p, q);
        cand.canonicalize();
        if (g(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Monic squarefree quartic: does it split into two rational quadratics?
// Checked through the resolvent cubic of the depressed form.
std::optional<std::pair<QPoly, QPoly>> split_quartic(const QPoly& f) {
  // depress: X -> X - a3/4
  mpq_class a3 = f.coeff(3), a2 = f.coeff(2), a1 = f.coeff(1), a0 = f.coeff(0);
  mpq_class shift = a3 / 4;
  QPoly xs = QPoly(std::vector<mpq_class>{-shift, 1});
  QPoly dep = f.compose(xs);
  mpq_class p = dep.coeff(2), q = dep.coeff(1), r = dep.coeff(0);
  // resolvent: z^3 + 2p z^2 + (p^2-4r) z - q^2, roots z = u^2
  QPoly resolvent(std::vector<mpq_class>{-q * q, p * p - 4 * r, 2 * p, 1});
  for (const auto& z : rational_roots(resolvent)) {
    if (z < 0) continue;
    mpq_class u;
    if (!is_square(z, &u)) continue;
    // depressed = (X^2 + uX + s)(X^2 - uX + t)
    mpq_class s, t;
    if (u == 0) {
      // X^4 + pX^2 + r with q = 0: s+t = p, st = r
      mpq_class disc = p * p - 4 * r, sq;
      if (!is_square(disc, &sq)) continue;
      s = (p + sq) / 2;
      t = (p - sq) / 2;
    } else {
      s = (p + z - q / u) / 2;
      t = (p + z + q / u) / 2;
    }
    QPoly f1(std::vector<mpq_class>{s, u, 1});
    QPoly f2(std::vector<mpq_class>{t, -u, 1});
    if (f1 * f2 == dep) {
      // dep(X) = f(X - shift), so f(X) = dep(X + shift)
      QPoly undo(std::vector<mpq_class>{shift, 1});
      QPoly g1 = f1.compose(undo);
      QPoly g2 = f2.compose(undo);
      if (g1 * g2 == f) return std::make_pair(g1, g2);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<QFactor> factor_over_q(const QPoly& f) {
  std::vector<QFactor> out;
  if (f.degree() < 1) return out;
  for (const auto& [sf, mult] : squarefree_decomposition(f)) {
    QPoly rest = sf;
    // linear factors
    for (const auto& r : rational_roots(rest)) {
      QPoly lin(std::vector<mpq_class>{-r, 1});
      QPoly q, rem;
      QPoly::divrem(rest, lin, &q, &rem);
      if (!rem.is_zero()) throw Error("root verification failed");
      out.push_back({lin, mult});
      rest = q;
    }
    // remaining part: pull out quadratic factors where they exist
    while (rest.degree() >= 2) {
      if (rest.degree() == 2) {
        mpq_class disc =
            rest.coeff(1) * rest.coeff(1) - 4 * rest.coeff(2) * rest.coeff(0);
        if (is_square(disc, nullptr))
          throw Error("reducible quadratic escaped the root pass");
        out.push_back({rest.monic(), mult});
        rest = QPoly(mpq_class(1));
        break;
      }
      if (rest.degree() == 3) {
        // no rational root: irreducible
        out.push_back({rest.monic(), mult});
        rest = QPoly(mpq_class(1));
        break;
      }
      if (rest.degree() == 4) {
        auto split = split_quartic(rest.monic());
        if (split) {
          out.push_back({split->first.monic(), mult});
          rest = split->second;
          continue;
        }
        out.push_back({rest.monic(), mult});
        rest = QPoly(mpq_class(1));
        break;
      }
      throw ContextDegreeExceeded(
          "irreducible factor of degree > 4 encountered");
    }
  }
  return out;
}

// -------------------------------------------------------------- composition

QPoly compose(const QPoly& g, const QPoly& h, unsigned degree_cap) {
  long long dg = std::max(0, g.degree()), dh = std::max(0, h.degree());
  if (dg * dh > static_cast<long long>(degree_cap))
    throw DegreeOverflow("composition exceeds the degree cap");
  return g.compose(h);
}

bool compositions_equal(const QPoly& g, const QPoly& h, const QPoly& v,
                        const QPoly& u) {
  return compose(g, h) == compose(v, u);
}

std::optional<std::pair<QPoly, QPoly>> try_decompose(const QPoly& f,
                                                     unsigned m, unsigned n) {
  if (f.degree() < 1 || static_cast<unsigned>(f.degree()) != m * n)
    return std::nullopt;
  if (m < 1 || n < 1) return std::nullopt;
  QPoly fm = f.monic();
  // Solve for monic h of degree n with h(0) = 0 from the top n coefficients
  // of f = h^m + (lower order in h): coefficient of X^(mn - k), k = 1..n-1,
  // involves h_{n-k} linearly with known earlier terms.
  std::vector<mpq_class> hc(n + 1, 0);
  hc[n] = 1;
  for (unsigned k = 1; k < n; ++k) {
    // current h with unknowns below n-k set to 0
    QPoly h(hc);
    QPoly hm = h.power(m);
    // [X^{mn-k}] f  =  [X^{mn-k}] h^m + m * h_{n-k} * [X^{mn-k}] (X^{n})^{m-1} X^{n-k}
    // i.e. the unknown enters with coefficient m.
    mpq_class target = fm.coeff(m * n - k) - hm.coeff(m * n - k);
    hc[n - k] = target / m;
  }
  QPoly h(hc);
  // digits of f in base h must all be constants
  QPoly rest = fm;
  std::vector<mpq_class> digits;
  for (unsigned k = 0; k <= m; ++k) {
    QPoly q, r;
    QPoly::divrem(rest, h, &q, &r);
    if (r.degree() > 0) return std::nullopt;
    digits.push_back(r.is_zero() ? mpq_class(0) : r.coeff(0));
    rest = q;
    if (rest.is_zero()) break;
  }
  QPoly g(digits);
  if (compose(g, h) == fm) {
    // restore the leading coefficient of f on g
    QPoly g_scaled = g * f.lc();
    return std::make_pair(g_scaled, h);
  }
  return std::nullopt;
}

bool decomposable_as(const QPoly& f, unsigned m, unsigned n) {
  return try_decompose(f, m, n).has_value();
}

// ---------------------------------------------------------------- chebyshev

QPoly chebyshev(unsigned n) {
  if (n < 1) throw Error("chebyshev index must be >= 1");
  QPoly x = QPoly::x();
  if (n == 1) return x;
  QPoly prev = x;                                        // T_1
  QPoly cur(std::vector<mpq_class>{-2, 0, 1});           // T_2 = X^2 - 2
  if (n == 2) return cur;
  for (unsigned k = 3; k <= n; ++k) {
    QPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool chebyshev_identity_holds(const QPoly& t, unsigned n) {
  // t(X + 1/X) * X^n == X^{2n} + 1, cleared of denominators:
  // sum_k t_k (X^2+1)^k X^{n-k} == X^{2n} + 1
  QPoly x2p1(std::vector<mpq_class>{1, 0, 1});
  QPoly acc;
  for (int k = t.degree(); k >= 0; --k) {
    QPoly term = x2p1.power(static_cast<unsigned>(k)) * t.coeff(k);
    QPoly xpow = QPoly::x().power(n - static_cast<unsigned>(k));
    acc = acc + term * xpow;
  }
  std::vector<mpq_class> rhs(2 * n + 1, 0);
  rhs[0] = 1;
  rhs[2 * n] = 1;
  return acc == QPoly(std::move(rhs));
}

}  // namespace verikit::poly
