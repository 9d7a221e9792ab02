#include "verikit/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "verikit/errors.hpp"

namespace verikit {

// ---------------------------------------------------------------- BlockSystem

BlockSystem::BlockSystem(unsigned degree,
                         std::vector<std::vector<unsigned>> cells)
    : degree_(degree), cells_(std::move(cells)) {
  for (auto& c : cells_) std::sort(c.begin(), c.end());
  std::sort(cells_.begin(), cells_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  cell_of_.assign(degree_, 0);
  std::vector<bool> seen(degree_, false);
  std::size_t size0 = cells_.empty() ? 0 : cells_[0].size();
  for (unsigned i = 0; i < cells_.size(); ++i) {
    if (cells_[i].size() != size0)
      throw InvalidFrame("block cells must have equal size");
    for (unsigned x : cells_[i]) {
      if (x >= degree_ || seen[x])
        throw InvalidFrame("block cells must partition the points");
      seen[x] = true;
      cell_of_[x] = i;
    }
  }
  for (bool b : seen)
    if (!b) throw InvalidFrame("block cells must cover all points");
}

bool BlockSystem::invariant_under(const Permutation& g) const {
  for (const auto& c : cells_) {
    unsigned target = cell_of_[g[c[0]]];
    for (unsigned x : c)
      if (cell_of_[g[x]] != target) return false;
  }
  return true;
}

Permutation BlockSystem::cells_action(const Permutation& g) const {
  std::vector<std::uint8_t> img(num_cells());
  for (unsigned i = 0; i < num_cells(); ++i)
    img[i] = static_cast<std::uint8_t>(cell_of_[g[cells_[i][0]]]);
  return Permutation(std::move(img));
}

bool BlockSystem::refines(const BlockSystem& coarser) const {
  for (const auto& c : cells_) {
    unsigned target = coarser.cell_of(c[0]);
    for (unsigned x : c)
      if (coarser.cell_of(x) != target) return false;
  }
  return true;
}

// ------------------------------------------------------------------ PermGroup

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators)
    : degree_(degree) {
  if (degree > 64) throw Error("permutation groups are capped at degree 64");
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw InvalidPermutation("generator degree mismatch");
    if (!g.is_identity() &&
        std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));
  }
  build();
}

PermGroup PermGroup::trivial(unsigned degree) { return PermGroup(degree, {}); }

namespace {
unsigned smallest_moved_point(const Permutation& g) {
  for (unsigned x = 0; x < g.degree(); ++x)
    if (g[x] != x) return x;
  throw Error("identity has no moved point");
}
}  // namespace

void PermGroup::recompute_orbit(unsigned level) {
  auto& lv = chain_[level];
  lv.orbit.clear();
  lv.where.assign(degree_, -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.where[lv.base_point] = 0;
  lv.transversal.push_back(Permutation(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    unsigned x = lv.orbit[k];
    for (const auto& s : lv.gens) {
      unsigned y = s[x];
      if (lv.where[y] < 0) {
        lv.where[y] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.transversal.push_back(s * lv.transversal[k]);
      }
    }
  }
}

bool PermGroup::strip(const Permutation& g, unsigned from_level,
                      Permutation* residue, unsigned* drop_level) const {
  Permutation h = g;
  for (unsigned i = from_level; i < chain_.size(); ++i) {
    unsigned img = h[chain_[i].base_point];
    int k = chain_[i].where[img];
    if (k < 0) {
      *residue = h;
      *drop_level = i;
      return false;
    }
    h = chain_[i].transversal[k].inverse() * h;
  }
  if (h.is_identity()) return true;
  *residue = h;
  *drop_level = static_cast<unsigned>(chain_.size());
  return false;
}

// Appends h as a strong generator of levels top..j (it fixes the bases of
// all levels below j that the stripping walked through), then re-closes the
// affected levels deepest first.  Generator sets are nested: level k holds
// every strong generator fixing bases b_0..b_{k-1}.
void PermGroup::extend_level(unsigned top, const Permutation& h) {
  Permutation residue = h;
  unsigned j = top;
  {
    Permutation r;
    unsigned drop = 0;
    if (strip(h, top, &r, &drop)) return;  // already generated
    residue = r;
    j = drop;
  }
  if (j == chain_.size()) {
    StabilizerLevel lv;
    lv.base_point = smallest_moved_point(residue);
    chain_.push_back(std::move(lv));
  }
  for (unsigned k = top; k <= j; ++k) chain_[k].gens.push_back(residue);

  for (unsigned k = j + 1; k-- > top;) {
    // close level k: all Schreier generators must sift through deeper levels
    recompute_orbit(k);
    for (std::size_t oi = 0; oi < chain_[k].orbit.size(); ++oi) {
      for (std::size_t si = 0; si < chain_[k].gens.size(); ++si) {
        Permutation s = chain_[k].gens[si];
        unsigned y = s[chain_[k].orbit[oi]];
        Permutation schreier =
            chain_[k].transversal[chain_[k].where[y]].inverse() * s *
            chain_[k].transversal[oi];
        if (schreier.is_identity()) continue;
        Permutation res2;
        unsigned drop2 = 0;
        if (!strip(schreier, k + 1, &res2, &drop2))
          extend_level(k + 1, schreier);
      }
    }
  }
}

void PermGroup::build() {
  for (const auto& g : gens_) extend_level(0, g);
  order_ = 1;
  for (const auto& lv : chain_) order_ *= lv.orbit.size();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation residue;
  unsigned drop = 0;
  return strip(p, 0, &residue, &drop);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

std::vector<std::vector<unsigned>> PermGroup::orbits() const {
  std::vector<int> id(degree_, -1);
  std::vector<std::vector<unsigned>> out;
  for (unsigned x = 0; x < degree_; ++x) {
    if (id[x] >= 0) continue;
    std::vector<unsigned> orb{x};
    id[x] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& g : gens_) {
        unsigned y = g[orb[k]];
        if (id[y] < 0) {
          id[y] = id[x];
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ == 0 || orbits().size() == 1;
}

void PermGroup::for_each_element(
    const std::function<bool(const Permutation&)>& fn) const {
  // DFS over transversal products, deterministic order.
  std::vector<Permutation> stack;
  std::function<bool(unsigned, const Permutation&)> rec =
      [&](unsigned level, const Permutation& acc) -> bool {
    if (level == chain_.size()) return fn(acc);
    for (const auto& u : chain_[level].transversal)
      if (!rec(level + 1, acc * u)) return false;
    return true;
  };
  rec(0, Permutation(degree_));
}

std::vector<Permutation> PermGroup::elements(
    unsigned long long max_order) const {
  if (order_ > max_order)
    throw ResourceBudgetExceeded("element enumeration exceeds budget");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Permutation PermGroup::transversal_element(unsigned level,
                                           unsigned point) const {
  int k = chain_[level].where[point];
  if (k < 0) throw Error("point not in level orbit");
  return chain_[level].transversal[k];
}

// ------------------------------------------------------------- block systems

BlockSystem minimal_block_system_containing(const PermGroup& g,
                                            const std::vector<unsigned>& seed) {
  // Atkinson's merge algorithm.
  unsigned n = g.degree();
  std::vector<unsigned> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<unsigned(unsigned)> find = [&](unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<unsigned, unsigned>> queue;
  auto unite = [&](unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    queue.emplace_back(a, b);
  };
  for (std::size_t i = 1; i < seed.size(); ++i) unite(seed[0], seed[i]);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto [a, b] = queue[qi];
    for (const auto& s : g.generators()) unite(s[a], s[b]);
  }
  std::map<unsigned, std::vector<unsigned>> cells;
  for (unsigned x = 0; x < n; ++x) cells[find(x)].push_back(x);
  std::vector<std::vector<unsigned>> cc;
  for (auto& [_, c] : cells) cc.push_back(std::move(c));
  return BlockSystem(n, std::move(cc));
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  if (!g.is_transitive())
    throw NotTransitive("block systems require a transitive group");
  std::vector<BlockSystem> out;
  for (unsigned i = 1; i < g.degree(); ++i) {
    BlockSystem bs = minimal_block_system_containing(g, {0, i});
    if (bs.is_trivial()) continue;
    if (std::find(out.begin(), out.end(), bs) == out.end())
      out.push_back(std::move(bs));
  }
  // Keep only minimal elements of the refinement order.
  std::vector<BlockSystem> mins;
  for (const auto& a : out) {
    bool minimal = true;
    for (const auto& b : out)
      if (!(a == b) && b.refines(a)) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(a);
  }
  return mins;
}

namespace {
BlockSystem join(const PermGroup& g, const BlockSystem& a,
                 const BlockSystem& b) {
  // Partition join of invariant partitions is again invariant.
  unsigned n = g.degree();
  std::vector<unsigned> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<unsigned(unsigned)> find = [&](unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](unsigned x, unsigned y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (unsigned i = 0; i < a.num_cells(); ++i)
    for (unsigned x : a.cell(i)) unite(a.cell(i)[0], x);
  for (unsigned i = 0; i < b.num_cells(); ++i)
    for (unsigned x : b.cell(i)) unite(b.cell(i)[0], x);
  std::map<unsigned, std::vector<unsigned>> cells;
  for (unsigned x = 0; x < n; ++x) cells[find(x)].push_back(x);
  std::vector<std::vector<unsigned>> cc;
  for (auto& [_, c] : cells) cc.push_back(std::move(c));
  return BlockSystem(n, std::move(cc));
}
}  // namespace

std::vector<BlockSystem> all_block_systems(const PermGroup& g) {
  // Every invariant partition is a join of pair-minimal ones, so closing the
  // minimal systems under pairwise join exhausts the lattice.
  std::vector<BlockSystem> mins;
  if (!g.is_transitive())
    throw NotTransitive("block systems require a transitive group");
  for (unsigned i = 1; i < g.degree(); ++i) {
    BlockSystem bs = minimal_block_system_containing(g, {0, i});
    if (bs.is_trivial()) continue;
    if (std::find(mins.begin(), mins.end(), bs) == mins.end())
      mins.push_back(std::move(bs));
  }
  std::vector<BlockSystem> closure = mins;
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      BlockSystem joined = join(g, closure[i], closure[j]);
      if (joined.is_trivial()) continue;
      if (std::find(closure.begin(), closure.end(), joined) == closure.end())
        closure.push_back(std::move(joined));
    }
  std::sort(closure.begin(), closure.end());
  return closure;
}

std::vector<BlockSystem> maximal_block_systems(const PermGroup& g) {
  std::vector<BlockSystem> all = all_block_systems(g);
  std::vector<BlockSystem> out;
  for (const auto& a : all) {
    bool maximal = true;
    for (const auto& b : all)
      if (!(a == b) && a.refines(b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive())
    throw NotTransitive("primitivity requires a transitive group");
  return minimal_block_systems(g).empty();
}

// ------------------------------------------------------------ normal closure

PermGroup normal_closure(const PermGroup& g,
                         const std::vector<Permutation>& s) {
  for (const auto& x : s)
    if (!g.contains(x))
      throw MembershipFailure("closure seed outside the group");
  std::vector<Permutation> closure_gens;
  for (const auto& x : s)
    if (!x.is_identity()) closure_gens.push_back(x);
  PermGroup n(g.degree(), closure_gens);
  for (std::size_t i = 0; i < closure_gens.size(); ++i) {
    for (const auto& t : g.generators()) {
      Permutation conj = conjugate(closure_gens[i], t);
      if (!n.contains(conj)) {
        closure_gens.push_back(std::move(conj));
        n = PermGroup(g.degree(), closure_gens);
      }
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      comms.push_back(commutator(gs[i], gs[j]));
  return normal_closure(g, comms);
}

// -------------------------------------------------------- conjugacy classes

std::vector<Permutation> conjugacy_class(const PermGroup& g,
                                         const Permutation& x) {
  std::unordered_set<Permutation, PermHash> seen{x};
  std::vector<Permutation> orbit{x};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& t : g.generators()) {
      Permutation y = conjugate(orbit[k], t);
      if (seen.insert(y).second) orbit.push_back(std::move(y));
    }
  return orbit;
}

std::vector<Permutation> conjugacy_class_reps(const PermGroup& g,
                                              unsigned long long order_bound) {
  if (g.order() > order_bound)
    throw ResourceBudgetExceeded("conjugacy classes capped by order bound");
  std::unordered_set<Permutation, PermHash> assigned;
  std::vector<Permutation> reps;
  g.for_each_element([&](const Permutation& p) {
    if (assigned.count(p)) return true;
    reps.push_back(p);
    for (auto& y : conjugacy_class(g, p)) assigned.insert(std::move(y));
    return true;
  });
  return reps;
}

// ----------------------------------------------------------------- socle

PermGroup socle_small(const PermGroup& g, unsigned long long order_bound) {
  if (g.order() > order_bound)
    throw ResourceBudgetExceeded("socle computation capped by order bound");
  if (g.order() == 1) return PermGroup::trivial(g.degree());
  std::vector<PermGroup> closures;
  for (const auto& rep : conjugacy_class_reps(g, order_bound)) {
    if (rep.is_identity()) continue;
    unsigned ord = rep.order();
    // prime order only
    bool prime = ord > 1;
    for (unsigned d = 2; d * d <= ord; ++d)
      if (ord % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    PermGroup ncl = normal_closure(g, {rep});
    bool dup = false;
    for (const auto& c : closures)
      if (c.order() == ncl.order() && ncl.is_subgroup_of(c)) {
        dup = true;
        break;
      }
    if (!dup) closures.push_back(std::move(ncl));
  }
  // minimal members under containment
  std::vector<Permutation> socle_gens;
  for (const auto& a : closures) {
    bool minimal = true;
    for (const auto& b : closures)
      if (b.order() < a.order() && b.is_subgroup_of(a)) {
        minimal = false;
        break;
      }
    if (minimal)
      for (const auto& x : a.generators()) socle_gens.push_back(x);
  }
  return PermGroup(g.degree(), socle_gens);
}

// ------------------------------------------------------- split extensions

SplitCertificate is_split_extension(const PermGroup& g, const PermGroup& n,
                                    unsigned long long budget) {
  for (const auto& x : n.generators())
    if (!g.contains(x)) throw NotNormal("subgroup not contained in group");
  for (const auto& x : n.generators())
    for (const auto& t : g.generators())
      if (!n.contains(conjugate(x, t)))
        throw NotNormal("subgroup is not normal");

  unsigned long long index = g.order() / n.order();
  SplitCertificate cert;
  if (n.order() == 1) {
    cert.result = SplitResult::Split;
    cert.complement_gens = g.generators();
    return cert;
  }

  std::vector<Permutation> n_elems;
  try {
    n_elems = n.elements(1u << 20);
  } catch (const ResourceBudgetExceeded&) {
    cert.result = SplitResult::Unknown;
    return cert;
  }

  // A complement contains exactly one element of each coset gen_i * N, so
  // searching over all tuples of coset representatives is exhaustive.
  const auto& gens = g.generators();
  std::size_t k = gens.size();
  unsigned long long nodes = 0;
  std::vector<std::size_t> idx(k, 0);
  std::vector<Permutation> lift(k, Permutation(g.degree()));
  while (true) {
    if (++nodes > budget) {
      cert.result = SplitResult::Unknown;
      return cert;
    }
    for (std::size_t i = 0; i < k; ++i) lift[i] = gens[i] * n_elems[idx[i]];
    PermGroup cand(g.degree(), lift);
    if (cand.order() == index && cand.is_subgroup_of(g)) {
      bool trivial_meet = true;
      // order equality already forces K cap N = 1; keep the witness check
      cand.for_each_element([&](const Permutation& p) {
        if (!p.is_identity() && n.contains(p)) {
          trivial_meet = false;
          return false;
        }
        return true;
      });
      if (trivial_meet) {
        cert.result = SplitResult::Split;
        cert.complement_gens = lift;
        return cert;
      }
    }
    // increment tuple
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == n_elems.size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  cert.result = SplitResult::NonSplit;
  return cert;
}

// ----------------------------------------------------------- action kernel

PermGroup action_kernel(const PermGroup& g,
                        const std::vector<Permutation>& aux_images) {
  if (aux_images.size() != g.generators().size())
    throw Error("one auxiliary image per generator required");
  if (g.generators().empty()) return PermGroup::trivial(g.degree());
  unsigned n = g.degree();
  unsigned k = aux_images[0].degree();
  if (n + k > 64) {
    // The combined-domain trick needs headroom; fall back to a stabilizer
    // sweep on the auxiliary action tracked alongside the main one.
    // (All in-scope frames satisfy n + k <= 64, so this is just a guard.)
    throw ResourceBudgetExceeded("combined action degree exceeds 64");
  }
  // Combined action on n + k points; fix the auxiliary points first.
  std::vector<Permutation> combined;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    std::vector<std::uint8_t> img(n + k);
    for (unsigned x = 0; x < n; ++x)
      img[x] = static_cast<std::uint8_t>(g.generators()[i][x]);
    for (unsigned x = 0; x < k; ++x)
      img[n + x] = static_cast<std::uint8_t>(n + aux_images[i][x]);
    combined.emplace_back(std::move(img));
  }

  // Deterministic chain with base restricted to auxiliary points until they
  // are exhausted; the strong generators fixing all auxiliary points generate
  // the kernel.
  struct Level {
    unsigned base;
    std::vector<Permutation> gens;
  };
  std::vector<Permutation> current = combined;
  std::vector<Permutation> kernel_gens;
  for (unsigned aux = n; aux < n + k; ++aux) {
    bool moved = false;
    for (const auto& s : current)
      if (s[aux] != aux) {
        moved = true;
        break;
      }
    if (!moved) continue;
    // orbit/transversal of aux under current gens
    std::vector<int> where(n + k, -1);
    std::vector<unsigned> orbit{aux};
    std::vector<Permutation> transversal{Permutation(n + k)};
    where[aux] = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& s : current) {
        unsigned y = s[orbit[i]];
        if (where[y] < 0) {
          where[y] = static_cast<int>(orbit.size());
          orbit.push_back(y);
          transversal.push_back(s * transversal[i]);
        }
      }
    // Schreier generators of the stabilizer of aux
    std::vector<Permutation> next;
    PermGroup dedup_probe = PermGroup::trivial(n + k);
    std::vector<Permutation> sifted;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& s : current) {
        unsigned y = s[orbit[i]];
        Permutation sg = transversal[where[y]].inverse() * s * transversal[i];
        if (sg.is_identity()) continue;
        if (!dedup_probe.contains(sg)) {
          sifted.push_back(sg);
          dedup_probe = PermGroup(n + k, sifted);
        }
      }
    current = std::move(sifted);
  }
  for (const auto& s : current) {
    std::vector<std::uint8_t> img(n);
    for (unsigned x = 0; x < n; ++x) img[x] = static_cast<std::uint8_t>(s[x]);
    Permutation restricted(std::move(img));
    if (!restricted.is_identity()) kernel_gens.push_back(std::move(restricted));
  }
  return PermGroup(n, kernel_gens);
}

}  // namespace verikit
