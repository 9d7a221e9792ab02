#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "verikit/fp_lemmas.hpp"
#include "verikit/fp_linear.hpp"
#include "verikit/groups_std.hpp"

using namespace verikit;
using namespace verikit::fp;

namespace {

FpVector vec(unsigned p, std::vector<std::uint8_t> c) {
  return FpVector(p, std::move(c));
}

MonomialAction cyclic_module(unsigned p, unsigned q) {
  return MonomialAction(groups::cyclic(q), p);
}

}  // namespace

TEST_CASE("echelon submodules") {
  FpSubmodule m(3, 4);
  CHECK(m.insert(vec(3, {1, 2, 0, 0})));
  CHECK(m.insert(vec(3, {0, 1, 1, 0})));
  CHECK(!m.insert(vec(3, {1, 0, 1, 0})));  // 1*r1 - 2*r2... dependent
  CHECK(m.dim() == 2);
  CHECK(m.contains(vec(3, {2, 4, 0, 0})));
  CHECK(!m.contains(vec(3, {0, 0, 0, 1})));
  // canonical: the same space from different spanning sets compares equal
  FpSubmodule m2(3, 4);
  m2.insert(vec(3, {1, 0, 1, 0}));
  m2.insert(vec(3, {0, 1, 1, 0}));
  CHECK(m == m2);
  // intersection / sum
  FpSubmodule a = FpSubmodule::span(3, 4, {vec(3, {1, 0, 0, 0}),
                                           vec(3, {0, 1, 0, 0})});
  FpSubmodule b = FpSubmodule::span(3, 4, {vec(3, {0, 1, 0, 0}),
                                           vec(3, {0, 0, 1, 0})});
  CHECK(a.intersection(b).dim() == 1);
  CHECK(a.sum(b).dim() == 3);
}

TEST_CASE("distinguished submodule shapes") {
  auto diag = make_distinguished(5, 6, SubmoduleKind::Diag);
  CHECK(diag.dim() == 1);
  CHECK(classify_submodule(diag).kind == SubmoduleKind::Diag);

  auto aug = make_distinguished(5, 6, SubmoduleKind::Aug);
  CHECK(aug.dim() == 5);
  for (const auto& row : aug.basis()) {
    unsigned s = 0;
    for (auto x : row.c) s += x;
    CHECK(s % 5 == 0);
  }
  CHECK(classify_submodule(aug).kind == SubmoduleKind::Aug);

  auto augm = make_distinguished(3, 6, SubmoduleKind::AugMinus);
  CHECK(augm.dim() == 5);
  CHECK(classify_submodule(augm).kind == SubmoduleKind::AugMinus);

  auto augp = make_distinguished(2, 6, SubmoduleKind::AugPower, 3);
  CHECK(augp.dim() == 4);
  CHECK(classify_submodule(augp).kind == SubmoduleKind::AugPower);
  CHECK(classify_submodule(augp).o == 3);

  CHECK(classify_submodule(FpSubmodule(7, 5)).kind == SubmoduleKind::Zero);
  CHECK(classify_submodule(FpSubmodule::full(7, 5)).kind ==
        SubmoduleKind::Full);

  // a dim-2 submodule of F_3^5 not of listed shape
  auto other = FpSubmodule::span(3, 5, {vec(3, {1, 0, 0, 0, 0}),
                                        vec(3, {0, 1, 0, 0, 0})});
  auto d = classify_submodule(other);
  CHECK(d.kind == SubmoduleKind::Other);
  CHECK(d.dim == 2);
}

TEST_CASE("cyclic codes agree with orbit spans") {
  // the span of the orbit of v under the coordinate rotation equals the
  // cyclic code generated by the coefficient polynomial of v
  std::mt19937 rng(5);
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned q = 2; q <= 9; ++q) {
      auto action = cyclic_module(p, q);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint8_t> coords(q);
        for (auto& x : coords) x = static_cast<std::uint8_t>(rng() % p);
        FpVector v(p, coords);
        if (v.is_zero()) continue;
        FpPoly f(coords.begin(), coords.end());
        CHECK(orbit_span(action, v) == cyclic_code(p, q, f));
      }
    }
  }
}

TEST_CASE("cyclic code dimension identity") {
  // dim = q - deg gcd(X^q - 1, f)
  std::mt19937 rng(17);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned q = 2; q <= 11; ++q) {
      for (int trial = 0; trial < 10; ++trial) {
        FpPoly f(1 + rng() % (q + 2));
        for (auto& x : f) x = static_cast<std::uint8_t>(rng() % p);
        f = fp_poly_trim(f);
        if (f.empty()) continue;
        FpPoly xq1(q + 1, 0);
        xq1[0] = static_cast<std::uint8_t>(p - 1);
        xq1[q] = 1;
        FpPoly g = fp_poly_gcd(p, xq1, f);
        CHECK(cyclic_code(p, q, f).dim() == q - (g.size() - 1));
      }
    }
  }
}

TEST_CASE("short-vector cyclic span closed form instances") {
  // p=3, q=5, v = e0 - e1 -> aug (dim 4)
  {
    auto action = cyclic_module(3, 5);
    auto span = orbit_span(action, vec(3, {1, 2, 0, 0, 0}));
    CHECK(classify_submodule(span).kind == SubmoduleKind::Aug);
    CHECK(span.dim() == 4);
    auto pred = predict(CyclicShortVectorParams{3, 5, 2, 1});
    CHECK(pred.shape.kind == SubmoduleKind::Aug);
  }
  // p=3, q=5, v = e0 + e1 -> full
  {
    auto action = cyclic_module(3, 5);
    auto span = orbit_span(action, vec(3, {1, 1, 0, 0, 0}));
    CHECK(classify_submodule(span).kind == SubmoduleKind::Full);
    auto pred = predict(CyclicShortVectorParams{3, 5, 1, 1});
    CHECK(pred.shape.kind == SubmoduleKind::Full);
  }
  // hypothesis violation: p = 1 mod q
  CHECK_THROWS_AS(predict(CyclicShortVectorParams{11, 5, 1, 1}),
                  HypothesisViolated);
}

TEST_CASE("two-term span over C_6 hits the power shapes") {
  // q=6, v = e0+e2: o(2)=3, p=2 -> (Aug(C_2^3))^2, dim 4;
  // gcd(X^6-1, X^2+1) = (X+1)^2 over F_2 is the independent route
  auto action = cyclic_module(2, 6);
  auto span = orbit_span(action, vec(2, {1, 0, 1, 0, 0, 0}));
  CHECK(span.dim() == 4);
  auto d = classify_submodule(span);
  CHECK(d.kind == SubmoduleKind::AugPower);
  CHECK(d.o == 3);
  FpPoly f{1, 0, 1};
  CHECK(span == cyclic_code(2, 6, f));
  auto pred = predict(CyclicTwoTermParams{2, 6, 2});
  CHECK(pred.shape.kind == SubmoduleKind::AugPower);
  CHECK(pred.shape.o == 3);
  CHECK(pred.shape.dim == 4);

  // q=6, i=3, p=3: o(3)=2 -> (Aug-(C_3^2))^3, dim 3
  auto action3 = cyclic_module(3, 6);
  auto span3 = orbit_span(action3, vec(3, {1, 0, 0, 1, 0, 0}));
  CHECK(span3.dim() == 3);
  auto d3 = classify_submodule(span3);
  CHECK(d3.kind == SubmoduleKind::AugMinusPower);
  CHECK(d3.o == 2);
  auto pred3 = predict(CyclicTwoTermParams{3, 6, 3});
  CHECK(pred3.shape.kind == SubmoduleKind::AugMinusPower);
  CHECK(pred3.shape.dim == 3);
}

TEST_CASE("exhaustive span lemma sweep (small)") {
  // every admissible two-term instance with p,q <= 7
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned q = 2; q <= 7; ++q) {
      auto action = cyclic_module(p, q);
      for (unsigned i = 1; i < q; ++i) {
        std::vector<std::uint8_t> c(q, 0);
        c[0] = 1;
        c[i] = static_cast<std::uint8_t>((c[i] + 1) % p);
        FpVector v(p, c);
        if (v.is_zero()) continue;
        auto span = orbit_span(action, v);
        auto pred = predict(CyclicTwoTermParams{p, q, i});
        auto target = pred.shape.kind == SubmoduleKind::Full
                          ? FpSubmodule::full(p, q)
                          : make_distinguished(p, q, pred.shape.kind,
                                               pred.shape.o);
        CHECK(span == target);
      }
    }
  }
}

TEST_CASE("reflection-invariant weight-4 spans over F_2") {
  for (unsigned q : {5u, 7u, 11u}) {
    auto action = cyclic_module(2, q);
    unsigned checked = 0;
    // supports {0, i, j, j+i} are exactly the reflection-invariant ones
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = a + 1; b < q; ++b)
        for (unsigned c2 = b + 1; c2 < q; ++c2)
          for (unsigned e = c2 + 1; e < q; ++e) {
            std::vector<unsigned> supp{a, b, c2, e};
            if (!reflection_invariant(supp, q)) continue;
            std::vector<std::uint8_t> coords(q, 0);
            for (unsigned s : supp) coords[s] = 1;
            auto span = orbit_span(action, FpVector(2, coords));
            CHECK(classify_submodule(span).kind == SubmoduleKind::Aug);
            ++checked;
          }
    CHECK(checked > 0);
  }
}

TEST_CASE("dihedral weight-3 spans fill the space") {
  for (unsigned q : {5u, 7u}) {
    MonomialAction action(groups::dihedral(q), 2);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = a + 1; b < q; ++b)
        for (unsigned c = b + 1; c < q; ++c) {
          std::vector<std::uint8_t> coords(q, 0);
          coords[a] = coords[b] = coords[c] = 1;
          auto span = orbit_span(action, FpVector(2, coords));
          CHECK(span.dim() == q);
        }
  }
}

TEST_CASE("symmetric small-support spans contain aug") {
  MonomialAction action(groups::symmetric(4), 3);
  for (unsigned mask = 1; mask < 16; ++mask) {
    unsigned weight = __builtin_popcount(mask);
    if (weight > 3) continue;
    std::vector<std::uint8_t> coords(4, 0);
    for (unsigned i = 0; i < 4; ++i)
      if (mask & (1u << i)) coords[i] = 1 + (i % 2);
    FpVector v(3, coords);
    auto span = orbit_span(action, v);
    CHECK(span.contains(make_distinguished(3, 4, SubmoduleKind::Aug)));
  }
}

TEST_CASE("invariant submodule survey") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned n : {4u, 5u, 6u}) {
      for (bool alt : {false, true}) {
        auto shapes = invariant_submodule_survey(p, n, alt);
        CHECK(shapes.size() >= 2);  // at least diag and full appear
        for (const auto& s : shapes)
          CHECK((s.kind == SubmoduleKind::Diag ||
                 s.kind == SubmoduleKind::Aug ||
                 s.kind == SubmoduleKind::Full));
      }
    }
  }
}

TEST_CASE("full cycles power into the diagonal") {
  // random mn-cycles sigma in C_n wr S_m: sigma^m is nontrivial diagonal
  std::mt19937 rng(99);
  unsigned trials_done = 0;
  while (trials_done < 100) {
    unsigned m = 2 + rng() % 5, n = 2 + rng() % 5;
    // random element of C_n wr S_m on m*n points: components + top perm
    std::vector<unsigned> top(m);
    std::iota(top.begin(), top.end(), 0);
    std::shuffle(top.begin(), top.end(), rng);
    std::vector<std::uint8_t> img(m * n);
    for (unsigned cell = 0; cell < m; ++cell) {
      unsigned shift = rng() % n;
      for (unsigned x = 0; x < n; ++x)
        img[cell * n + x] =
            static_cast<std::uint8_t>(top[cell] * n + (x + shift) % n);
    }
    Permutation sigma{std::vector<std::uint8_t>(img)};
    if (cycle_type(sigma).parts() != std::vector<unsigned>{m * n}) continue;
    ++trials_done;
    Permutation power = sigma.power(m);
    CHECK(!power.is_identity());
    // diagonal: every cell is shifted by the same nonzero amount
    unsigned shift0 = (power[0]) % n;
    CHECK(shift0 != 0);
    for (unsigned cell = 0; cell < m; ++cell)
      for (unsigned x = 0; x < n; ++x)
        CHECK(power[cell * n + x] == cell * n + (x + shift0) % n);
  }
}

TEST_CASE("monomial action consistency spot check") {
  MonomialAction good(groups::dihedral(5), 3);
  CHECK(good.spot_check_consistency(300));
  // an inconsistent character: scale one generator by 2
  std::vector<std::vector<std::uint8_t>> scales(
      groups::dihedral(5).generators().size(),
      std::vector<std::uint8_t>(5, 1));
  scales[0][0] = 2;
  MonomialAction bad(groups::dihedral(5), 3, scales);
  CHECK(!bad.spot_check_consistency(1000));
}
