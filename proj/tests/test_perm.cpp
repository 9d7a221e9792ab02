#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "verikit/fingerprint.hpp"
#include "verikit/groups_std.hpp"
#include "verikit/perm.hpp"
#include "verikit/perm_group.hpp"

using namespace verikit;

namespace {

Permutation random_perm(unsigned n, std::mt19937& rng) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// brute-force closure, the oracle for small orders
std::set<Permutation> enumerate_group(const std::vector<Permutation>& gens,
                                      unsigned degree) {
  std::set<Permutation> elems{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Permutation p = g * e;
        if (elems.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return elems;
}

}  // namespace

TEST_CASE("cycle parsing and printing") {
  Permutation p = Permutation::from_cycles("(1,2,3)(4,5)", 6);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[4] == 3);
  CHECK(p[5] == 5);
  CHECK(p.to_cycle_string() == "(1,2,3)(4,5)");
  CHECK(Permutation::from_cycles("()", 4).is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles("(0,1)", 3), ParseError);
}

TEST_CASE("products compose right to left") {
  // (a*b)(x) = a(b(x))
  Permutation a = Permutation::from_cycles("(1,2)", 3);
  Permutation b = Permutation::from_cycles("(2,3)", 3);
  Permutation ab = a * b;
  CHECK(ab[1] == 2);  // b: 1->2, a: 2->... 0-indexed: b(1)=2, a(2)=2
  CHECK(ab.to_cycle_string() == "(1,2,3)");
}

TEST_CASE("cycle type and index") {
  CHECK(cycle_type(Permutation(4)).parts() == std::vector<unsigned>{1, 1, 1, 1});
  Permutation c15 = Permutation::cycle(15, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10,
                                            11, 12, 13, 14});
  CHECK(cycle_type(c15).parts() == std::vector<unsigned>{15});
  CHECK(perm_index(c15) == 14);
  CHECK(perm_index(Permutation(7)) == 0);
  // [2,2,1] in S_5 has index 2
  Permutation dd = Permutation::from_cycles("(1,2)(3,4)", 5);
  CHECK(perm_index(dd) == 2);
  CHECK(cycle_type(dd).to_string() == "[2^2.1]");
  CHECK(CycleType::parse("[2^2.1]").parts() == cycle_type(dd).parts());
  CHECK(CycleType::parse("[3.1]").parts() == std::vector<unsigned>{3, 1});
  CHECK(CycleType::parse("[2,1,1]").parts() == std::vector<unsigned>{2, 1, 1});
}

TEST_CASE("index identities") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = 2 + rng() % 14;
    Permutation p = random_perm(n, rng), q = random_perm(n, rng);
    unsigned s = 0;
    for (const auto& c : p.cycles()) s += static_cast<unsigned>(c.size()) - 1;
    CHECK(perm_index(p) == s);
    // subadditivity, used by coalescing
    CHECK(perm_index(p * q) <= perm_index(p) + perm_index(q));
  }
}

TEST_CASE("group order matches exhaustive enumeration") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    unsigned n = 2 + rng() % 6;
    std::vector<Permutation> gens;
    unsigned k = 1 + rng() % 2;
    for (unsigned i = 0; i < k; ++i) gens.push_back(random_perm(n, rng));
    auto oracle = enumerate_group(gens, n);
    if (oracle.size() > 5000) continue;
    PermGroup g(n, gens);
    CHECK(g.order() == oracle.size());
    for (const auto& e : oracle) CHECK(g.contains(e));
    unsigned long long count = 0;
    g.for_each_element([&](const Permutation& p) {
      CHECK(oracle.count(p) == 1);
      ++count;
      return true;
    });
    CHECK(count == g.order());
  }
}

TEST_CASE("standard groups have the expected orders") {
  CHECK(groups::cyclic(4).order() == 4);
  CHECK(groups::symmetric(4).order() == 24);
  CHECK(groups::symmetric(8).order() == 40320);
  CHECK(groups::alternating(5).order() == 60);
  CHECK(groups::alternating(6).order() == 360);
  CHECK(groups::dihedral(5).order() == 10);
  CHECK(groups::agl1(5).order() == 20);
  CHECK(groups::psl32().order() == 168);
  CHECK(groups::psl33().order() == 5616);
  CHECK(groups::pgl2(5).order() == 120);
  CHECK(groups::pgl2(7).order() == 336);
  CHECK(groups::pgl2(9).order() == 720);
  CHECK(groups::pgammal29().order() == 1440);
  CHECK(groups::mathieu11().order() == 7920);
  CHECK(groups::wreath_product(groups::symmetric(4), groups::symmetric(4))
            .order() == 7962624ull);  // 24^4 * 24
}

TEST_CASE("orbits and transitivity") {
  PermGroup g(3, {Permutation::from_cycles("(1,2)", 3)});
  auto orbs = g.orbits();
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0] == std::vector<unsigned>{0, 1});
  CHECK(orbs[1] == std::vector<unsigned>{2});
  CHECK(!g.is_transitive());
  CHECK(groups::cyclic(7).is_transitive());
  CHECK(groups::symmetric(3).is_transitive());
}

TEST_CASE("block systems") {
  // C_4 has exactly one nontrivial system {{0,2},{1,3}}
  auto c4 = groups::cyclic(4);
  auto mins = minimal_block_systems(c4);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].cells() ==
        std::vector<std::vector<unsigned>>{{0, 2}, {1, 3}});
  auto all = all_block_systems(c4);
  CHECK(all.size() == 1);

  CHECK(is_primitive(groups::alternating(5)));
  CHECK(!is_primitive(groups::cyclic(4)));

  // S4 wr S4 on 16 points keeps the size-4 cell system
  auto w = groups::wreath_product(groups::symmetric(4), groups::symmetric(4));
  auto blocks = groups::wreath_blocks(4, 4);
  bool found = false;
  for (const auto& bs : all_block_systems(w))
    if (bs == blocks) found = true;
  CHECK(found);
  CHECK(maximal_block_systems(w).size() == 1);

  // C_6 decomposes two ways
  CHECK(maximal_block_systems(groups::cyclic(6)).size() == 2);
}

TEST_CASE("exhaustive primitivity check at small degree") {
  // all invariant partitions of a transitive group are detected
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = 3 + rng() % 6;
    std::vector<Permutation> gens{random_perm(n, rng), random_perm(n, rng)};
    PermGroup g(n, gens);
    if (!g.is_transitive()) continue;
    // oracle: enumerate all partitions into equal cells containing 0
    auto systems = all_block_systems(g);
    std::function<void(std::vector<int>&, unsigned)> noop;
    // check every reported system is invariant
    for (const auto& bs : systems)
      for (const auto& gen : g.generators()) CHECK(bs.invariant_under(gen));
    // oracle count via brute force over cell sizes dividing n
    unsigned brute = 0;
    std::vector<unsigned> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    for (unsigned size = 2; size < n; ++size) {
      if (n % size) continue;
      // enumerate subsets of size `size` containing 0
      std::vector<bool> mask(n, false);
      std::fill(mask.begin(), mask.begin() + size, true);
      std::vector<unsigned> idx(size - 1);
      std::function<void(unsigned, std::vector<unsigned>&)> rec =
          [&](unsigned start, std::vector<unsigned>& acc) {
            if (acc.size() == size - 1) {
              std::vector<unsigned> cell{0};
              cell.insert(cell.end(), acc.begin(), acc.end());
              // close under the group: is this cell a block?
              BlockSystem bs = minimal_block_system_containing(g, cell);
              if (bs.cell_size() == size &&
                  std::find(bs.cell(0).begin(), bs.cell(0).end(), 0) !=
                      bs.cell(0).end()) {
                // count each resulting system once
                if (bs.cell(bs.cell_of(0)) == cell) ++brute;
              }
              return;
            }
            for (unsigned x = start; x < n; ++x) {
              acc.push_back(x);
              rec(x + 1, acc);
              acc.pop_back();
            }
          };
      std::vector<unsigned> acc;
      rec(1, acc);
    }
    CHECK(brute == systems.size());
  }
}

TEST_CASE("normal closure") {
  auto s4 = groups::symmetric(4);
  PermGroup a4 = normal_closure(s4, {Permutation::from_cycles("(1,2,3)", 4)});
  CHECK(a4.order() == 12);
  PermGroup triv = normal_closure(s4, {Permutation(4)});
  CHECK(triv.order() == 1);
  auto s5 = groups::symmetric(5);
  CHECK(normal_closure(s5, {Permutation::from_cycles("(1,2)", 5)}).order() ==
        120);
  CHECK_THROWS_AS(
      normal_closure(groups::cyclic(4),
                     {Permutation::from_cycles("(1,2)", 4)}),
      MembershipFailure);
}

TEST_CASE("socle") {
  CHECK(socle_small(groups::symmetric(4)).order() == 4);  // V_4
  CHECK(socle_small(groups::dihedral(5)).order() == 5);
  CHECK(socle_small(groups::dihedral(7)).order() == 7);
  CHECK(socle_small(groups::alternating(5)).order() == 60);
  for (unsigned n = 5; n <= 8; ++n) {
    auto soc = socle_small(groups::symmetric(n));
    CHECK(soc.order() == groups::alternating(n).order());
  }
}

TEST_CASE("split extensions") {
  // direct product U x V over U x 1 splits
  auto u = groups::cyclic(3);
  auto s4 = groups::symmetric(4);
  // make C_3 x S_4 on 7 points
  std::vector<Permutation> gens;
  for (const auto& g : u.generators()) gens.push_back(g.extended(7));
  std::vector<std::uint8_t> img(7);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& g : s4.generators()) {
    auto im = img;
    for (unsigned x = 0; x < 4; ++x) im[3 + x] = static_cast<std::uint8_t>(3 + g[x]);
    gens.emplace_back(std::move(im));
  }
  PermGroup prod(7, gens);
  CHECK(prod.order() == 72);
  PermGroup n(7, {u.generators()[0].extended(7)});
  auto cert = is_split_extension(prod, n);
  CHECK(cert.result == SplitResult::Split);
  // witness validity
  PermGroup k(7, cert.complement_gens);
  CHECK(k.order() * n.order() == prod.order());

  // C_4 over C_2 is nonsplit
  auto c4 = groups::cyclic(4);
  PermGroup c2(4, {Permutation::from_cycles("(1,3)(2,4)", 4)});
  CHECK(is_split_extension(c4, c2).result == SplitResult::NonSplit);

  CHECK_THROWS_AS(
      is_split_extension(groups::cyclic(4),
                         PermGroup(4, {Permutation::from_cycles("(1,2)", 4)})),
      NotNormal);
}

TEST_CASE("action kernel") {
  // kernel of the cells action of C_2 wr C_3 is C_2^3, order 8
  auto w = groups::wreath_product(groups::cyclic(2), groups::cyclic(3));
  auto blocks = groups::wreath_blocks(2, 3);
  std::vector<Permutation> aux;
  for (const auto& g : w.generators()) aux.push_back(blocks.cells_action(g));
  PermGroup ker = action_kernel(w, aux);
  CHECK(ker.order() == 8);
  for (const auto& g : ker.generators()) {
    CHECK(w.contains(g));
    CHECK(blocks.cells_action(g).is_identity());
  }
}

TEST_CASE("fingerprints distinguish the desk groups") {
  auto f1 = fingerprint(groups::cyclic(6));
  auto f2 = fingerprint(groups::symmetric(3).order() == 6
                            ? groups::symmetric(3)
                            : groups::cyclic(6));
  CHECK(f1.order == 6);
  CHECK(!(f1 == fingerprint(groups::dihedral(5))));
  CHECK(f1.contains_full_cycle);
  auto w = groups::wreath_product(groups::symmetric(4), groups::symmetric(4));
  auto fw = fingerprint(w);
  CHECK(fw.cycle_types_sampled);
  CHECK(fw.order == 7962624ull);
}
