#include "verikit/branch_points.hpp"

#include <algorithm>
#include <sstream>

namespace verikit::poly {

std::string BranchDatum::value_string() const {
  if (at_infinity) return "inf";
  if (is_rational()) return rational_value.get_str();
  std::ostringstream os;
  os << "root of " << to_string(min_poly);
  return os.str();
}

std::vector<BranchDatum> branch_data(const QPoly& f) {
  int n = f.degree();
  if (n < 2) throw Error("branch data needs degree >= 2");
  QPoly fd = f.derivative();

  // R(t) = Res_X(f(X) - t, f'(X)) has degree exactly n-1 in t; recover it
  // from n interpolation points.
  std::vector<mpq_class> xs, ys;
  for (int k = 0; xs.size() < static_cast<std::size_t>(n); ++k) {
    mpq_class t(k);
    QPoly shifted = f - QPoly(t);
    xs.push_back(t);
    ys.push_back(resultant(shifted, fd));
  }
  // Lagrange interpolation
  QPoly r;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly li(mpq_class(1));
    mpq_class denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      li = li * QPoly(std::vector<mpq_class>{-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    r = r + li * (ys[i] / denom);
  }

  std::vector<BranchDatum> out;
  if (!r.is_zero()) {
    QPoly sf = squarefree_part(r);
    for (const auto& fac : factor_over_q(sf)) {
      BranchDatum d;
      d.min_poly = fac.factor;
      d.conjugates = static_cast<unsigned>(fac.factor.degree());
      std::vector<std::pair<unsigned, unsigned>> profile;
      if (d.conjugates == 1) {
        d.rational_value = -fac.factor.coeff(0);
        KPoly shifted = lift(f - QPoly(d.rational_value));
        profile = root_multiplicities(shifted);
      } else {
        auto ctx = std::make_shared<AlgebraicContext>(fac.factor);
        AlgebraicNumber c = AlgebraicNumber::generator(ctx);
        KPoly shifted = lift(f, ctx) - KPoly(c);
        profile = root_multiplicities(shifted);
      }
      std::vector<unsigned> parts;
      for (const auto& [mult, count] : profile)
        for (unsigned i = 0; i < count; ++i) parts.push_back(mult);
      d.ram_type = CycleType(parts);
      for (unsigned p : d.ram_type.parts())
        if (p == 1) ++d.unramified_preimages;
      if (d.ram_type.index() == 0) continue;  // not actually a branch point
      if (d.conjugates == 1)
        d.special_points = special_points(f, d.rational_value);
      out.push_back(std::move(d));
    }
  }
  BranchDatum inf;
  inf.at_infinity = true;
  inf.ram_type = CycleType(std::vector<unsigned>{static_cast<unsigned>(n)});
  out.push_back(std::move(inf));

  // Polynomial Riemann-Hurwitz sanity: finite indices sum to n-1.
  unsigned finite_index = 0;
  for (const auto& d : out)
    if (!d.at_infinity) finite_index += d.conjugates * d.ram_type.index();
  if (finite_index != static_cast<unsigned>(n - 1))
    throw Error("branch data failed the genus-zero index balance");
  return out;
}

std::vector<mpq_class> special_points(const QPoly& f, const mpq_class& c) {
  QPoly shifted = f - QPoly(c);
  QPoly g = QPoly::gcd(shifted, shifted.derivative());
  if (g.degree() < 1) throw NotBranchPoint("value is not a branch point");
  QPoly simple;
  QPoly::divrem(shifted, g, &simple, nullptr);
  // strip any residual multiple-root content: simple part of f - c
  QPoly reduced = simple;
  QPoly common = QPoly::gcd(reduced, g);
  while (common.degree() > 0) {
    QPoly q;
    QPoly::divrem(reduced, common, &q, nullptr);
    reduced = q;
    common = QPoly::gcd(reduced, g);
  }
  return rational_roots(reduced);
}

bool is_special_point(const QPoly& f, const AlgebraicNumber& alpha) {
  AlgebraicNumber val = lift(f)(alpha);
  AlgebraicNumber deriv = lift(f.derivative())(alpha);
  if (deriv.is_zero()) return false;  // ramified
  // unramified; lies over a branch point iff f - val has a multiple root
  KPoly shifted =
      alpha.context() ? lift(f, alpha.context()) - KPoly(val)
                      : lift(f) - KPoly(val);
  auto profile = root_multiplicities(shifted);
  for (const auto& [mult, count] : profile)
    if (mult > 1 && count > 0) return true;
  return false;
}

bool is_special_quartic(const QPoly& f) {
  if (f.degree() != 4) return false;
  std::vector<CycleType> finite;
  for (const auto& d : branch_data(f))
    if (!d.at_infinity)
      for (unsigned i = 0; i < d.conjugates; ++i) finite.push_back(d.ram_type);
  std::sort(finite.begin(), finite.end());
  return finite == std::vector<CycleType>{CycleType({3, 1}), CycleType({2, 1, 1})} ||
         finite == std::vector<CycleType>{CycleType({2, 1, 1}), CycleType({3, 1})};
}

bool is_generic_quartic(const QPoly& f) {
  if (f.degree() != 4) return false;
  std::vector<CycleType> finite;
  for (const auto& d : branch_data(f))
    if (!d.at_infinity)
      for (unsigned i = 0; i < d.conjugates; ++i) finite.push_back(d.ram_type);
  return finite.size() == 3 &&
         std::all_of(finite.begin(), finite.end(), [](const CycleType& t) {
           return t == CycleType({2, 1, 1});
         });
}

ConfigReport configuration_check(ConfigCase which) {
  ConfigReport rep;
  std::ostringstream os;
  switch (which) {
    case ConfigCase::CubeEdgeTimesCube: {
      QPoly g = parse_poly("X^3*(X-1)");
      QPoly h = parse_poly("X^3+1");
      QPoly f = compose(g, h);
      bool product_form = f == parse_poly("(X^3+1)^3*X^3");
      // 1 is a special point of g over the branch value 0
      bool special = g(mpq_class(1)) == 0 && g.derivative()(mpq_class(1)) != 0;
      auto data = branch_data(g);
      bool zero_is_branch = false;
      for (const auto& d : data)
        if (d.is_rational() && d.rational_value == 0 &&
            d.ram_type == CycleType({3, 1}))
          zero_is_branch = true;
      rep.holds = product_form && special && zero_is_branch;
      os << "g o h == (X^3+1)^3 X^3: " << product_form
         << "; 1 special over 0: " << special
         << "; branch 0 has profile [3.1]: " << zero_is_branch;
      break;
    }
    case ConfigCase::QuadraticShiftNonsplit: {
      // h = X^2 + b with b a root of X^2 + X/2 + 3/16: the branch value of h
      // (namely b) must be a special point of g = X^3(X-1) over its [2,1,1]
      // branch value -27/256.
      QPoly m = parse_poly("X^2 + 1/2*X + 3/16");
      auto ctx = std::make_shared<AlgebraicContext>(m);
      AlgebraicNumber b = AlgebraicNumber::generator(ctx);
      QPoly g = parse_poly("X^3*(X-1)");
      AlgebraicNumber gb = lift(g, ctx)(b);
      bool maps_to_branch = gb == AlgebraicNumber(mpq_class(-27, 256));
      bool unramified = !lift(g.derivative(), ctx)(b).is_zero();
      auto data = branch_data(g);
      bool branch_profile = false;
      for (const auto& d : data)
        if (d.is_rational() && d.rational_value == mpq_class(-27, 256) &&
            d.ram_type == CycleType({2, 1, 1}))
          branch_profile = true;
      rep.holds = maps_to_branch && unramified && branch_profile;
      os << "g(b) = -27/256: " << maps_to_branch
         << "; b unramified in g: " << unramified
         << "; -27/256 has profile [2.1^2]: " << branch_profile;
      break;
    }
    case ConfigCase::SpecialQuarticShift: {
      // X^3(X-1) o (X^2+3/4) = (X^2+3/4)^3 (X^2-1/4); branch value of h is
      // 3/4, the ramification point of g over -27/256.
      QPoly g = parse_poly("X^3*(X-1)");
      QPoly h = parse_poly("X^2+3/4");
      bool product_form =
          compose(g, h) == parse_poly("(X^2+3/4)^3*(X^2-1/4)");
      bool ram_point = g.derivative()(mpq_class(3, 4)) == 0 &&
                       g(mpq_class(3, 4)) == mpq_class(-27, 256);
      rep.holds = product_form && ram_point;
      os << "composition matches: " << product_form
         << "; 3/4 ramified over -27/256: " << ram_point;
      break;
    }
    case ConfigCase::SpecialTimesCubeKernel: {
      // h = X^3(X-4)+27 is the special quartic with its [2,1,1] branch
      // value at 0 (double root at X = 3).
      QPoly h = parse_poly("X^3*(X-4)+27");
      bool special = is_special_quartic(h);
      bool zero_branch = false;
      for (const auto& d : branch_data(h))
        if (d.is_rational() && d.rational_value == 0 &&
            d.ram_type == CycleType({2, 1, 1}))
          zero_branch = true;
      bool double_at_3 = h(mpq_class(3)) == 0 &&
                         h.derivative()(mpq_class(3)) == 0;
      rep.holds = special && zero_branch && double_at_3;
      os << "h special: " << special << "; [2.1^2] branch at 0: " << zero_branch
         << "; double root at 3: " << double_at_3;
      break;
    }
    case ConfigCase::AppendixQuinticSpecial: {
      // g = X^3(X^2+5X+40), alpha a root of X^2+5X+40: alpha is a special
      // point of g over its [3,1,1] branch value (the value 0 arises from the
      // triple root at X = 0 and both alpha-conjugates land on it).
      QPoly m = parse_poly("X^2+5*X+40");
      auto ctx = std::make_shared<AlgebraicContext>(m);
      AlgebraicNumber alpha = AlgebraicNumber::generator(ctx);
      QPoly g = parse_poly("X^3*(X^2+5*X+40)");
      AlgebraicNumber val = lift(g, ctx)(alpha);
      bool lands_on_zero = val.is_zero();
      bool unramified = !lift(g.derivative(), ctx)(alpha).is_zero();
      bool zero_profile = false;
      for (const auto& d : branch_data(g))
        if (d.is_rational() && d.rational_value == 0 &&
            d.ram_type == CycleType({3, 1, 1}))
          zero_profile = true;
      rep.holds = lands_on_zero && unramified && zero_profile;
      os << "g(alpha) = 0: " << lands_on_zero
         << "; alpha unramified: " << unramified
         << "; branch 0 profile [3.1^2]: " << zero_profile;
      break;
    }
    case ConfigCase::GenericSquareTwist: {
      // generic h with finite branch points u, v, w satisfying u = 0 and
      // v^2 = w^2, over the quadratic context w^2 = 3
      QPoly m = parse_poly("X^2-3");
      auto ctx = std::make_shared<AlgebraicContext>(m);
      AlgebraicNumber w = AlgebraicNumber::generator(ctx);
      // h = X^2 (X^2 + (w+3) X + 9/8 w + 27/8)
      AlgebraicNumber w3 = w + AlgebraicNumber(3);
      AlgebraicNumber c0 = w * AlgebraicNumber(mpq_class(9, 8)) +
                           AlgebraicNumber(mpq_class(27, 8));
      KPoly h(std::vector<AlgebraicNumber>{AlgebraicNumber(0),
                                           AlgebraicNumber(0), c0, w3,
                                           AlgebraicNumber(1)});
      // critical points: roots of h'; the three finite branch values are
      // h at those points.  u = 0 comes from the double root at X = 0.
      KPoly hd = h.derivative();
      AlgebraicNumber at0 = h(AlgebraicNumber(0));
      bool u_zero = at0.is_zero();
      // the other two critical values v, w must satisfy v^2 = w^2, i.e.
      // v = -w (v+w = 0): check symmetric function via the quadratic factor
      // of h' after removing the X factor.
      // h' = 4X^3 + 3(w3)X^2 + 2 c0 X = X (4X^2 + 3 w3 X + 2 c0)
      AlgebraicNumber a = hd.coeff(3), b = hd.coeff(2), c = hd.coeff(1);
      bool factors = hd.coeff(0).is_zero();
      // roots r1, r2 of (a X^2 + b X + c): v = h(r1), w = h(r2);
      // v + w expressed through power sums of r1, r2
      AlgebraicNumber s1 = AlgebraicNumber(0) - b / a;  // r1 + r2
      AlgebraicNumber e2 = c / a;                       // r1 r2
      // evaluate h(r1) + h(r2) via Newton power sums
      std::vector<AlgebraicNumber> power(5, AlgebraicNumber(0));
      power[0] = AlgebraicNumber(2);
      power[1] = s1;
      for (int k = 2; k <= 4; ++k)
        power[k] = s1 * power[k - 1] - e2 * power[k - 2];
      AlgebraicNumber sum(0);
      for (int k = 0; k <= 4; ++k) sum = sum + h.coeff(k) * power[k];
      bool opposite = sum.is_zero();
      rep.holds = u_zero && factors && opposite;
      os << "branch u = 0: " << u_zero << "; h' divisible by X: " << factors
         << "; remaining branch values sum to zero: " << opposite;
      break;
    }
  }
  rep.detail = os.str();
  return rep;
}

}  // namespace verikit::poly
