#include "verikit/braid.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace verikit::branch {

BranchTuple braid_generator(const BranchTuple& t, unsigned i, bool inverse) {
  if (i < 1 || i >= t.size()) throw IndexOutOfRange("braid letter index");
  std::vector<Permutation> e = t.entries();
  unsigned a = i - 1, b = i;
  if (!inverse) {
    Permutation moved = e[a] * e[b] * e[a].inverse();
    e[b] = e[a];
    e[a] = std::move(moved);
  } else {
    Permutation moved = e[b].inverse() * e[a] * e[b];
    e[a] = e[b];
    e[b] = std::move(moved);
  }
  return BranchTuple::unchecked(t.degree(), std::move(e));
}

BranchTuple braid_act(const BranchTuple& t, const BraidWord& w) {
  BranchTuple cur = t;
  for (int letter : w.letters) {
    if (letter == 0) throw IndexOutOfRange("braid letters are nonzero");
    cur = braid_generator(cur, static_cast<unsigned>(std::abs(letter)),
                          letter < 0);
  }
  return cur;
}

Permutation canonical_of_type(const CycleType& type) {
  unsigned n = type.degree();
  std::vector<std::uint8_t> img(n);
  unsigned start = 0;
  for (unsigned len : type.parts()) {  // parts are descending
    for (unsigned k = 0; k < len; ++k)
      img[start + k] = static_cast<std::uint8_t>(start + (k + 1) % len);
    start += len;
  }
  return Permutation(std::move(img));
}

namespace {

// Elements of the centralizer of canonical_of_type(type): generated by the
// cycle rotations and swaps of equal-length cycles.
std::vector<Permutation> centralizer_of_canonical(
    const CycleType& type, unsigned long long budget) {
  unsigned n = type.degree();
  std::vector<Permutation> gens;
  unsigned start = 0;
  std::vector<std::pair<unsigned, unsigned>> cycles;  // (start, len)
  for (unsigned len : type.parts()) {
    cycles.emplace_back(start, len);
    if (len > 1) {
      std::vector<unsigned> pts;
      for (unsigned k = 0; k < len; ++k) pts.push_back(start + k);
      gens.push_back(Permutation::cycle(n, pts));
    }
    start += len;
  }
  for (std::size_t i = 0; i + 1 < cycles.size(); ++i)
    if (cycles[i].second == cycles[i + 1].second) {
      std::vector<std::uint8_t> img(n);
      for (unsigned x = 0; x < n; ++x) img[x] = static_cast<std::uint8_t>(x);
      for (unsigned k = 0; k < cycles[i].second; ++k) {
        img[cycles[i].first + k] =
            static_cast<std::uint8_t>(cycles[i + 1].first + k);
        img[cycles[i + 1].first + k] =
            static_cast<std::uint8_t>(cycles[i].first + k);
      }
      gens.emplace_back(std::move(img));
    }
  // enumerate by closure
  unsigned long long expect = 1;
  {
    std::map<unsigned, unsigned> count;
    for (unsigned len : type.parts()) ++count[len];
    for (const auto& [len, m] : count) {
      for (unsigned k = 0; k < m; ++k) expect *= len;
      for (unsigned k = 2; k <= m; ++k) expect *= k;
    }
  }
  if (expect > budget)
    throw ResourceBudgetExceeded("centralizer too large for canonicalization");
  std::set<Permutation> elems{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Permutation p = g * e;
        if (elems.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

std::vector<std::uint8_t> tuple_key(const BranchTuple& t) {
  std::vector<std::uint8_t> key;
  key.reserve(t.size() * t.degree());
  for (const auto& e : t.entries())
    key.insert(key.end(), e.images().begin(), e.images().end());
  return key;
}

}  // namespace

BranchTuple canonical_form(const BranchTuple& t,
                           unsigned long long centralizer_budget) {
  // conjugate the first entry to canonical layout
  CycleType type = cycle_type(t.entry(0));
  Permutation target = canonical_of_type(type);
  // build one conjugator s with s^-1 * e0 * s = target, i.e. e0^s = target:
  // map cycles of e0 onto the canonical layout in a fixed order
  auto cyc = t.entry(0).cycles();
  std::stable_sort(cyc.begin(), cyc.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  std::vector<std::uint8_t> to_canon(t.degree());
  unsigned pos = 0;
  for (const auto& c : cyc)
    for (unsigned x : c) to_canon[x] = static_cast<std::uint8_t>(pos++);
  Permutation s(std::move(to_canon));
  BranchTuple base = conjugate_tuple(t, s.inverse());
  // minimize over the centralizer of the canonical first entry
  BranchTuple best = base;
  std::vector<std::uint8_t> best_key = tuple_key(base);
  for (const auto& z : centralizer_of_canonical(type, centralizer_budget)) {
    BranchTuple cand = conjugate_tuple(base, z.inverse());
    auto key = tuple_key(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

std::vector<BranchTuple> braid_orbit(const BranchTuple& t,
                                     const BraidOrbitOptions& opts) {
  auto normalize = [&](const BranchTuple& x) {
    return opts.up_to_conjugacy ? canonical_form(x) : x;
  };
  std::set<BranchTuple> seen;
  std::vector<BranchTuple> frontier;
  BranchTuple start = normalize(t);
  seen.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    std::vector<BranchTuple> next;
    for (const auto& cur : frontier)
      for (unsigned i = 1; i < cur.size(); ++i)
        for (bool inv : {false, true}) {
          BranchTuple img = normalize(braid_generator(cur, i, inv));
          if (seen.size() >= opts.max_size)
            throw ResourceBudgetExceeded("braid orbit exceeded budget");
          if (seen.insert(img).second) next.push_back(std::move(img));
        }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<BranchTuple> enumerate_tuples(const PermGroup& group,
                                          const std::vector<CycleType>& types,
                                          unsigned long long budget) {
  unsigned n = group.degree();
  // class elements per position, gathered from the full group when small
  std::vector<std::vector<Permutation>> pools(types.size());
  if (group.order() > (1u << 22))
    throw ResourceBudgetExceeded("tuple enumeration needs a small group");
  std::vector<Permutation> all;
  group.for_each_element([&](const Permutation& p) {
    all.push_back(p);
    return true;
  });
  for (std::size_t i = 0; i < types.size(); ++i)
    for (const auto& p : all)
      if (cycle_type(p) == types[i]) pools[i].push_back(p);

  // Conjugating a whole tuple moves the first entry across its class, so one
  // representative per group-class suffices in position 0.
  {
    std::vector<Permutation> reps;
    std::set<Permutation> covered;
    for (const auto& p : pools[0]) {
      if (covered.count(p)) continue;
      reps.push_back(p);
      for (auto& q : conjugacy_class(group, p)) covered.insert(std::move(q));
    }
    pools[0] = std::move(reps);
  }

  std::vector<BranchTuple> found;
  std::set<BranchTuple> canon_seen;
  unsigned long long nodes = 0;

  // entries 0..r-2 free, last = inverse of the prefix product
  std::vector<Permutation> current(types.size(), Permutation(n));
  std::function<void(std::size_t, const Permutation&)> rec =
      [&](std::size_t pos, const Permutation& prefix) {
        if (++nodes > budget)
          throw ResourceBudgetExceeded("tuple enumeration budget");
        if (pos + 1 == types.size()) {
          Permutation last = prefix.inverse();
          if (!(cycle_type(last) == types.back())) return;
          current.back() = last;
          BranchTuple t = BranchTuple::unchecked(n, current);
          if (!t.is_transitive()) return;
          if (!(PermGroup(n, current).order() == group.order())) return;
          BranchTuple cf = canonical_form(t);
          if (canon_seen.insert(cf).second) found.push_back(cf);
          return;
        }
        for (const auto& cand : pools[pos]) {
          current[pos] = cand;
          rec(pos + 1, prefix * cand);
        }
      };
  rec(0, Permutation(n));
  return found;
}

}  // namespace verikit::branch
