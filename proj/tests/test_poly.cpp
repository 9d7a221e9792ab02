#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "verikit/branch_points.hpp"

using namespace verikit;
using namespace verikit::poly;

namespace {
QPoly P(const std::string& s) { return parse_poly(s); }

QPoly random_poly(std::mt19937& rng, int maxdeg) {
  std::vector<mpq_class> c(1 + rng() % (maxdeg + 1));
  for (auto& x : c) {
    x = mpq_class(static_cast<int>(rng() % 11) - 5,
                  1 + static_cast<int>(rng() % 3));
    x.canonicalize();
  }
  return QPoly(std::move(c));
}
}  // namespace

TEST_CASE("parsing and arithmetic") {
  CHECK(P("X^3*(X-1)") == P("X^4 - X^3"));
  CHECK(P("(X+1)^2") == P("X^2+2X+1"));
  CHECK(P("27/256") == QPoly(mpq_class(27, 256)));
  CHECK(P("X^2-2")(mpq_class(3)) == 7);
  CHECK(to_string(P("X^4-X^3")) == "X^4 - X^3");
  QPoly q, r;
  QPoly::divrem(P("X^3+1"), P("X+1"), &q, &r);
  CHECK(r.is_zero());
  CHECK(q == P("X^2-X+1"));
  CHECK(QPoly::gcd(P("X^4-1"), P("X^2-1")) == P("X^2-1"));
}

TEST_CASE("chebyshev recurrence and identity") {
  CHECK(chebyshev(2) == P("X^2-2"));
  CHECK(chebyshev(3) == P("X^3-3X"));
  for (unsigned n = 1; n <= 64; ++n)
    CHECK(chebyshev_identity_holds(chebyshev(n), n));
  // commuting family
  for (unsigned m = 2; m <= 12; ++m)
    for (unsigned n = 2; n <= 12; ++n)
      if (m * n <= 144)
        CHECK(compose(chebyshev(m), chebyshev(n)) ==
              compose(chebyshev(n), chebyshev(m)));
  CHECK(compose(chebyshev(2), chebyshev(3)) == chebyshev(6));
}

TEST_CASE("composition identities") {
  CHECK(compose(P("X^2"), P("X^3")) == P("X^6"));
  // twisted-monomial exchange, s=1, n=2, shift polynomial X+1
  CHECK(compositions_equal(P("X^2"), P("X*(X^2+1)"), P("X*(X+1)^2"),
                           P("X^2")));
  CHECK(compositions_equal(chebyshev(2), chebyshev(3), chebyshev(3),
                           chebyshev(2)));
  CHECK_THROWS_AS(compose(P("X^32"), P("X^32")), DegreeOverflow);
  // associativity on random triples
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    QPoly a = random_poly(rng, 3), b = random_poly(rng, 3),
          c = random_poly(rng, 3);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("decomposition solver") {
  CHECK(decomposable_as(chebyshev(6), 2, 3));
  CHECK(decomposable_as(chebyshev(6), 3, 2));
  CHECK(decomposable_as(P("X^2*(X^2+1)^2"), 2, 3));
  CHECK(!decomposable_as(P("X^4+X^3+X^2+X"), 2, 2));
  auto dec = try_decompose(compose(P("X^3*(X-1)"), P("X^2+3/4")), 4, 2);
  REQUIRE(dec.has_value());
  CHECK(compose(dec->first, dec->second) ==
        compose(P("X^3*(X-1)"), P("X^2+3/4")));
}

TEST_CASE("resultants: subresultant PRS against the euclidean route") {
  std::mt19937 rng(31);
  for (int t = 0; t < 120; ++t) {
    QPoly a = random_poly(rng, 6), b = random_poly(rng, 5);
    if (a.degree() < 1 || b.degree() < 1) continue;
    CHECK(resultant(a, b) == resultant_euclid(a, b));
  }
  // shared factors give zero
  QPoly a = P("(X-1)*(X+2)"), b = P("(X-1)*(X+3)");
  CHECK(resultant(a, b) == 0);
}

TEST_CASE("rational roots and factorization") {
  auto roots = rational_roots(P("(X-2)*(X+1/3)*(X^2+1)"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == mpq_class(-1, 3));
  CHECK(roots[1] == 2);
  // quartic splitting into quadratics
  auto f = P("(X^2+X+1)*(X^2-X+3)");
  auto fac = factor_over_q(f);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].factor.degree() == 2);
  CHECK(fac[1].factor.degree() == 2);
  // irreducible quartic stays whole
  auto g = factor_over_q(P("X^4+X+1"));
  REQUIRE(g.size() == 1);
  CHECK(g[0].factor.degree() == 4);
  // squarefree decomposition picks up multiplicities
  auto h = factor_over_q(P("(X-1)^3*(X+1)"));
  REQUIRE(h.size() == 2);
  bool saw_triple = false;
  for (const auto& q : h)
    if (q.multiplicity == 3) saw_triple = true;
  CHECK(saw_triple);
}

TEST_CASE("algebraic contexts") {
  auto ctx = std::make_shared<AlgebraicContext>(P("X^2+1/2*X+3/16"));
  AlgebraicNumber b = AlgebraicNumber::generator(ctx);
  // b satisfies its modulus
  AlgebraicNumber val = lift(P("X^2+1/2*X+3/16"), ctx)(b);
  CHECK(val.is_zero());
  // arithmetic: (b + 1)(b - 1) = b^2 - 1 = -b/2 - 3/16 - 1
  AlgebraicNumber lhs = (b + AlgebraicNumber(1)) * (b - AlgebraicNumber(1));
  AlgebraicNumber rhs = AlgebraicNumber(0) - b / AlgebraicNumber(2) -
                        AlgebraicNumber(mpq_class(19, 16));
  CHECK(lhs == rhs);
  AlgebraicNumber inv = AlgebraicNumber(1) / b;
  CHECK(inv * b == AlgebraicNumber(1));
  CHECK_THROWS_AS(AlgebraicContext(P("X^2-1")), Error);  // reducible
}

TEST_CASE("branch data of the quartic shapes") {
  // special: X^3(X-1): 0 with [3,1], -27/256 with [2,1,1], infinity [4]
  auto data = branch_data(P("X^3*(X-1)"));
  REQUIRE(data.size() == 3);
  bool saw0 = false, saw27 = false, sawinf = false;
  for (const auto& d : data) {
    if (d.at_infinity) {
      sawinf = true;
      CHECK(d.ram_type == CycleType({4}));
    } else if (d.rational_value == 0) {
      saw0 = true;
      CHECK(d.ram_type == CycleType({3, 1}));
      CHECK(d.special_points == std::vector<mpq_class>{1});
    } else {
      saw27 = true;
      CHECK(d.rational_value == mpq_class(-27, 256));
      CHECK(d.ram_type == CycleType({2, 1, 1}));
    }
  }
  CHECK((saw0 && saw27 && sawinf));
  CHECK(is_special_quartic(P("X^3*(X-1)")));
  CHECK(is_special_quartic(P("X^3*(X-4)+27")));
  CHECK(!is_generic_quartic(P("X^3*(X-1)")));

  // generic at a=1: X^2(X^2+X+1): three finite [2,1,1] branch values
  CHECK(is_generic_quartic(P("X^2*(X^2+X+1)")));
  auto gen = branch_data(P("X^2*(X^2+X+1)"));
  unsigned finite_conjugates = 0;
  for (const auto& d : gen)
    if (!d.at_infinity) {
      CHECK(d.ram_type == CycleType({2, 1, 1}));
      finite_conjugates += d.conjugates;
    }
  CHECK(finite_conjugates == 3);
}

TEST_CASE("branch data of monomials and chebyshev") {
  auto xp = branch_data(P("X^5"));
  REQUIRE(xp.size() == 2);
  for (const auto& d : xp)
    if (!d.at_infinity) {
      CHECK(d.rational_value == 0);
      CHECK(d.ram_type == CycleType({5}));
    }
  auto t5 = branch_data(chebyshev(5));
  unsigned finite = 0;
  for (const auto& d : t5)
    if (!d.at_infinity) {
      CHECK(d.ram_type == CycleType({2, 2, 1}));
      CHECK((d.rational_value == 2 || d.rational_value == -2));
      ++finite;
    }
  CHECK(finite == 2);
  CHECK(special_points(chebyshev(5), 2) == std::vector<mpq_class>{2});
  CHECK(special_points(P("X^3*(X-1)"), 0) == std::vector<mpq_class>{1});
  CHECK(special_points(P("X^5"), 0).empty());
  CHECK_THROWS_AS(special_points(P("X^5"), 3), NotBranchPoint);
}

TEST_CASE("composite branch data stays exact") {
  // (X^3+1)^3 X^3: branch values 0, -27/256 (from the inner factor), infinity
  QPoly f = compose(P("X^3*(X-1)"), P("X^3+1"));
  auto data = branch_data(f);
  bool saw_zero = false;
  for (const auto& d : data) {
    if (!d.at_infinity && d.rational_value == 0) {
      saw_zero = true;
      // preimages: three cube roots of -1 with multiplicity 3 each, and 0
      // with multiplicity 3: profile [3,3,3,3]
      CHECK(d.ram_type == CycleType({3, 3, 3, 3}));
    }
  }
  CHECK(saw_zero);
}

TEST_CASE("named configuration checks") {
  for (ConfigCase c :
       {ConfigCase::CubeEdgeTimesCube, ConfigCase::QuadraticShiftNonsplit,
        ConfigCase::SpecialQuarticShift, ConfigCase::SpecialTimesCubeKernel,
        ConfigCase::AppendixQuinticSpecial, ConfigCase::GenericSquareTwist}) {
    auto rep = configuration_check(c);
    INFO(rep.detail);
    CHECK(rep.holds);
  }
}

TEST_CASE("riemann-hurwitz index balance holds for random products") {
  // small integer coefficients, the shape the verification pipeline feeds in
  std::mt19937 rng(77);
  for (int t = 0; t < 25; ++t) {
    std::vector<mpq_class> c(2 + rng() % 5);
    for (auto& x : c) x = static_cast<int>(rng() % 9) - 4;
    QPoly f{std::move(c)};
    if (f.degree() < 2) continue;
    CHECK_NOTHROW(branch_data(f));  // internal balance assertion
  }
}
