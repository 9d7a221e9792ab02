#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "verikit/closure.hpp"
#include "verikit/frame.hpp"
#include "verikit/groups_std.hpp"
#include "verikit/wreath_extra.hpp"

using namespace verikit;
using namespace verikit::wreath;

namespace {

// ambient element of U wr V from components and a cells permutation
Permutation wreath_element(unsigned m, unsigned d,
                           const std::vector<Permutation>& comps,
                           const Permutation& cells) {
  std::vector<std::uint8_t> img(m * d);
  for (unsigned c = 0; c < d; ++c)
    for (unsigned x = 0; x < m; ++x)
      img[c * m + x] = static_cast<std::uint8_t>(cells[c] * m + comps[c][x]);
  return Permutation(std::move(img));
}

PermGroup c15_in_c3_wr_c5() {
  std::vector<Permutation> comps(5, Permutation(3));
  comps[4] = Permutation::cycle(3, {0, 1, 2});
  Permutation sigma =
      wreath_element(3, 5, comps, Permutation::cycle(5, {0, 1, 2, 3, 4}));
  return PermGroup(15, {sigma});
}

PermGroup gl23_on_8() {
  // GL_2(3) acting on the 8 nonzero vectors of F_3^2; the vector (a, b) is
  // the point 3a + b - 1 after skipping (0,0)
  auto idx = [](unsigned a, unsigned b) { return 3 * a + b - 1; };
  auto act = [&](std::array<std::array<unsigned, 2>, 2> mat) {
    std::vector<std::uint8_t> img(8);
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        unsigned a2 = (mat[0][0] * a + mat[0][1] * b) % 3;
        unsigned b2 = (mat[1][0] * a + mat[1][1] * b) % 3;
        img[idx(a, b)] = static_cast<std::uint8_t>(idx(a2, b2));
      }
    return Permutation(std::move(img));
  };
  Permutation g1 = act({{{1, 1}, {0, 1}}});
  Permutation g2 = act({{{2, 0}, {0, 1}}});
  Permutation g3 = act({{{0, 2}, {1, 0}}});
  return PermGroup(8, {g1, g2, g3});
}

PermGroup c3_x_a5_on_15() {
  auto a5 = groups::alternating(5);
  std::vector<Permutation> gens;
  for (const auto& g : a5.generators())
    gens.push_back(groups::embed_cells_action(g, 3, 5));
  Permutation diag(15);
  for (unsigned c = 0; c < 5; ++c)
    diag = diag * groups::embed_in_cell(Permutation::cycle(3, {0, 1, 2}), c, 3, 5);
  gens.push_back(diag);
  return PermGroup(15, gens);
}

}  // namespace

TEST_CASE("block kernel of small wreaths against brute force") {
  for (auto [mk_u, mk_v] :
       std::vector<std::pair<PermGroup, PermGroup>>{
           {groups::cyclic(2), groups::cyclic(3)},
           {groups::cyclic(3), groups::symmetric(3)},
           {groups::dihedral(3), groups::cyclic(2)},
           {groups::symmetric(3), groups::cyclic(2)}}) {
    PermGroup w = groups::wreath_product(mk_u, mk_v);
    unsigned m = mk_u.degree(), d = mk_v.degree();
    ImprimitiveFrame f(w, groups::wreath_blocks(m, d));
    // oracle: count elements fixing every cell setwise
    unsigned long long count = 0;
    const auto& blocks = f.blocks();
    w.for_each_element([&](const Permutation& g) {
      bool fixes = true;
      for (unsigned c = 0; c < d && fixes; ++c)
        if (blocks.cell_of(g[blocks.cell(c)[0]]) != c) fixes = false;
      if (fixes) ++count;
      return true;
    });
    CHECK(f.block_kernel().order() == count);
    CHECK(f.block_kernel().order() * f.blocks_image().order() == w.order());
  }
}

TEST_CASE("fifteen-cycle frame has a diagonal kernel") {
  PermGroup g = c15_in_c3_wr_c5();
  CHECK(g.order() == 15);
  ImprimitiveFrame f(g, groups::wreath_blocks(3, 5));
  CHECK(f.block_kernel().order() == 3);
  CHECK(f.blocks_image().order() == 5);
  CHECK(f.cell_action().order() == 3);
  auto module = kernel_socle_submodule(
      f, Permutation::cycle(3, {0, 1, 2}), 3);
  CHECK(module.dim() == 1);
  CHECK(fp::classify_submodule(module).kind == fp::SubmoduleKind::Diag);
  // diag rank 1 < 4: not a large kernel
  auto rep = large_kernel(f, socle_small(f.cell_action()));
  CHECK(!rep.large);
  CHECK(rep.socle_cyclic);
  CHECK(rep.socle_rank_in_kernel == 1);
  // full support of the diagonal element
  Permutation sigma = g.generators()[0];
  CHECK(support(f, sigma.power(5)) ==
        std::vector<unsigned>{0, 1, 2, 3, 4});
}

TEST_CASE("full wreath kernels are large") {
  PermGroup w = groups::wreath_product(groups::cyclic(2), groups::cyclic(3));
  ImprimitiveFrame f(w, groups::wreath_blocks(2, 3));
  CHECK(f.block_kernel().order() == 8);
  auto rep = large_kernel(f, socle_small(f.cell_action()));
  CHECK(rep.large);
  CHECK(rep.socle_power_contained);
  auto kr = block_kernel_report(f);
  CHECK(kr.is_full_kernel);
  CHECK(kr.contains_diag);
  CHECK(kr.contains_aug);
  CHECK(kr.socle_module_rank == 3);
}

TEST_CASE("kernel report for the S4-block wreath") {
  PermGroup w = groups::wreath_product(groups::symmetric(4), groups::cyclic(2));
  ImprimitiveFrame f(w, groups::wreath_blocks(4, 2));
  auto kr = block_kernel_report(f);
  CHECK(kr.gamma_order == 576);  // 24^2
  CHECK(kr.is_full_kernel);
  CHECK(kr.contains_socle_power);       // V_4^2
  CHECK(kr.contains_alternating_power); // A_4^2
  CHECK(kr.p_part_orders[2] == 6);
  CHECK(kr.p_part_orders[3] == 2);
}

TEST_CASE("ritt obstruction counts") {
  CHECK(ritt_obstruction(groups::cyclic(6)) == 2);
  CHECK(ritt_obstruction(gl23_on_8()) == 1);
  CHECK(ritt_obstruction(c15_in_c3_wr_c5()) == 2);
}

TEST_CASE("direct product embeddings") {
  // C_15 in C_3 wr C_5: embeds (coprime orders)
  {
    ImprimitiveFrame f(c15_in_c3_wr_c5(), groups::wreath_blocks(3, 5));
    CHECK(direct_product_embedding(f).embeds);
  }
  // the full wreath C_2 wr C_3 does not
  {
    PermGroup w = groups::wreath_product(groups::cyclic(2), groups::cyclic(3));
    ImprimitiveFrame f(w, groups::wreath_blocks(2, 3));
    CHECK(!direct_product_embedding(f).embeds);
  }
  // C_3 x A_5 on 15 points: embeds
  {
    PermGroup g = c3_x_a5_on_15();
    CHECK(g.order() == 180);
    ImprimitiveFrame f(g, groups::wreath_blocks(3, 5));
    CHECK(direct_product_embedding(f).embeds);
  }
}

TEST_CASE("classification for dihedral and linear blocks over S_n") {
  // full C_2 wr S_4: kernel power case
  {
    PermGroup w = groups::wreath_product(groups::cyclic(2), groups::symmetric(4));
    ImprimitiveFrame f(w, groups::wreath_blocks(2, 4));
    auto rep = sntp_case(f, 2);
    CHECK(rep.which == SnTpCase::KernelPower);
  }
  // GL_2(3) on 8 points: the linear case
  {
    PermGroup g = gl23_on_8();
    CHECK(g.order() == 48);
    ImprimitiveFrame f = ImprimitiveFrame::detect(g, 2);
    auto rep = sntp_case(f, 2);
    CHECK(rep.which == SnTpCase::LinearTwo);
    auto split = is_split_extension(g, f.block_kernel());
    CHECK(split.result == SplitResult::NonSplit);
  }
  // C_3 x A_5 on 15: the product case
  {
    ImprimitiveFrame f(c3_x_a5_on_15(), groups::wreath_blocks(3, 5));
    auto rep = sntp_case(f, 3);
    CHECK(rep.which == SnTpCase::ProductEmbed);
  }
}

TEST_CASE("iterated wreath order bounds") {
  auto b1 = iterated_wreath_bounds(3, 1);
  CHECK(b1.kernel_lower == 6);  // p^1 * 2^{p^0}
  CHECK(b1.ambient_order == 6);
  auto b2 = iterated_wreath_bounds(3, 2);
  CHECK(b2.kernel_lower == 648);   // 3^4 * 2^3
  CHECK(b2.ambient_order == 1296); // 6^4
  auto b4 = iterated_wreath_bounds(3, 4);
  mpz_class expect_kernel, expect_ambient, p40, two27;
  mpz_pow_ui(p40.get_mpz_t(), mpz_class(3).get_mpz_t(), 40);
  mpz_pow_ui(two27.get_mpz_t(), mpz_class(2).get_mpz_t(), 27);
  expect_kernel = p40 * two27;
  mpz_pow_ui(expect_ambient.get_mpz_t(), mpz_class(6).get_mpz_t(), 40);
  CHECK(b4.kernel_lower == expect_kernel);
  CHECK(b4.ambient_order == expect_ambient);
  CHECK(std::abs(b4.hausdorff_lower - 0.8711) < 1e-3);
  double logp2 = std::log(2.0) / std::log(3.0);
  CHECK(std::abs(b4.hausdorff_lower - (1.0 - logp2 / (3 * (1 + logp2)))) <
        1e-12);
}

TEST_CASE("quotient helpers") {
  PermGroup w = groups::wreath_product(groups::symmetric(4), groups::cyclic(3));
  ImprimitiveFrame f(w, groups::wreath_blocks(4, 3));
  PermGroup a4 = groups::alternating(4);
  PermGroup inner = kernel_in_power(f, a4);
  CHECK(inner.order() == 12ull * 12 * 12);  // A_4^3
  auto mod = kernel_quotient_module(f, f.block_kernel(), a4, 2);
  CHECK(mod.dim() == 3);  // kernel surjects onto C_2^3
  PermGroup v4(4, {Permutation::from_cycles("(1,2)(3,4)", 4),
                   Permutation::from_cycles("(1,3)(2,4)", 4)});
  auto mod3 = kernel_quotient_module(f, inner, v4, 3);
  CHECK(mod3.dim() == 3);  // A_4^3 onto C_3^3
}

TEST_CASE("closure engine: cyclic block over a 3-cycle frame") {
  // AGL_1(5) blocks: witnesses of order 4 meeting only at the focus cell
  PermGroup agl = groups::agl1(5);
  PermGroup w = groups::wreath_product(agl, groups::cyclic(3));
  ImprimitiveFrame f(w, groups::wreath_blocks(5, 3));
  Permutation mult = agl.generators()[1];  // order 4, fixes 0
  REQUIRE(mult.order() == 4);
  Permutation x1 = groups::embed_in_cell(mult, 0, 5, 3) *
                   groups::embed_in_cell(mult, 1, 5, 3);
  Permutation x2 = groups::embed_in_cell(mult, 0, 5, 3) *
                   groups::embed_in_cell(mult, 2, 5, 3);
  ClosureInstance inst;
  inst.p = 5;
  inst.w_basis = {Permutation::cycle(5, {0, 1, 2, 3, 4})};
  inst.decomposition = {fp::FpSubmodule::full(5, 1)};
  inst.witnesses = {x1, x2};
  inst.focus_cell = 0;
  inst.mode.kind = ClosureMode::Semisimple;
  auto cert = closure_lower_bound(f, inst);
  CHECK(cert.full_power_indices == std::vector<unsigned>{0});
  CHECK(cert.certified.dim() == 3);  // C_5^3 in W-coordinates
  for (const auto& e : cert.elements) CHECK(f.block_kernel().contains(e));
}

TEST_CASE("closure engine: even-kernel block with heart pieces") {
  // H = Aug(F_2^4).S_4 inside C_2 wr S_4 on 8 points, three blocks
  std::vector<Permutation> h_gens;
  auto flip2 = [&](unsigned i, unsigned j) {
    return Permutation::from_cycles(
        "(" + std::to_string(2 * i + 1) + "," + std::to_string(2 * i + 2) +
            ")(" + std::to_string(2 * j + 1) + "," + std::to_string(2 * j + 2) +
            ")",
        8);
  };
  h_gens.push_back(flip2(0, 1));
  h_gens.push_back(flip2(1, 2));
  h_gens.push_back(flip2(2, 3));
  PermGroup s4 = groups::symmetric(4);
  for (const auto& g : s4.generators())
    h_gens.push_back(groups::embed_cells_action(g, 2, 4));
  PermGroup h(8, h_gens);
  REQUIRE(h.order() == 192);

  PermGroup big = groups::wreath_product(h, groups::cyclic(3));
  ImprimitiveFrame f(big, groups::wreath_blocks(8, 3));

  // order-3 witnesses supported on two cells each, meeting at cell 0
  Permutation c3 = groups::embed_cells_action(
      Permutation::from_cycles("(1,2,3)", 4), 2, 4);  // inside H, order 3
  Permutation x1 = groups::embed_in_cell(c3, 0, 8, 3) *
                   groups::embed_in_cell(c3, 1, 8, 3);
  Permutation x2 = groups::embed_in_cell(c3, 0, 8, 3) *
                   groups::embed_in_cell(c3, 2, 8, 3);

  ClosureInstance inst;
  inst.p = 2;
  inst.w_basis = {flip2(0, 1), flip2(1, 2), flip2(2, 3)};
  inst.decomposition = {fp::FpSubmodule::full(2, 3)};
  inst.witnesses = {x1, x2};
  inst.focus_cell = 0;
  inst.mode.kind = ClosureMode::Heart;
  auto cert = closure_lower_bound(f, inst);
  CHECK(cert.full_power_indices.size() == 1);
  CHECK(cert.certified.dim() == 9);  // Aug(F_2^4)^3
  // cross-check: brute-force Delta = kernel ∩ W^3 has dimension 9 here
  unsigned long long count = 0;
  WTable table(2, inst.w_basis);
  std::vector<Permutation> cell_elems;
  for (const auto& [wp, coords] : table.dlog) cell_elems.push_back(wp);
  for (const auto& a : cell_elems)
    for (const auto& b : cell_elems)
      for (const auto& c : cell_elems) {
        Permutation cand = groups::embed_in_cell(a, 0, 8, 3) *
                           groups::embed_in_cell(b, 1, 8, 3) *
                           groups::embed_in_cell(c, 2, 8, 3);
        if (f.block_kernel().contains(cand)) ++count;
      }
  CHECK(count == 512);  // 2^9
}

TEST_CASE("closure engine: indecomposable tower blocks") {
  // H' = C_3 wr C_3 on 9 points; G = H' wr C_3 on 27 points
  PermGroup hp = groups::wreath_product(groups::cyclic(3), groups::cyclic(3));
  REQUIRE(hp.order() == 81);
  PermGroup big = groups::wreath_product(hp, groups::cyclic(3));
  ImprimitiveFrame f(big, groups::wreath_blocks(9, 3));

  ClosureInstance inst;
  inst.p = 3;
  inst.w_basis = {groups::embed_in_cell(Permutation::cycle(3, {0, 1, 2}), 0, 3, 3),
                  groups::embed_in_cell(Permutation::cycle(3, {0, 1, 2}), 1, 3, 3),
                  groups::embed_in_cell(Permutation::cycle(3, {0, 1, 2}), 2, 3, 3)};
  inst.focus_cell = 0;
  inst.mode.kind = ClosureMode::Indecomposable;
  auto cert = closure_lower_bound(f, inst);
  // W_1 = aug (dim 2), W_2 = diag (dim 1): W_2^3 certified at least
  fp::FpSubmodule w1_power(3, 9);
  auto aug = fp::make_distinguished(3, 3, fp::SubmoduleKind::Aug);
  for (unsigned cell = 0; cell < 3; ++cell)
    for (const auto& row : aug.basis()) {
      std::vector<std::uint8_t> v(9, 0);
      for (unsigned b = 0; b < 3; ++b) v[cell * 3 + b] = row.c[b];
      w1_power.insert(fp::FpVector(3, v));
    }
  auto inter = cert.certified.intersection(w1_power);
  CHECK(inter.dim() >= 2 * 3 - 1);  // codimension <= 1 in W_1^d
}
