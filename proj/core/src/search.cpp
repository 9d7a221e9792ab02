#include "verikit/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "verikit/errors.hpp"
#include "verikit/groups_std.hpp"

namespace verikit::search {

namespace {

using branch::BranchTuple;

// wreath coordinates: point = cell * m + model index
Permutation assemble(unsigned m, unsigned d,
                     const std::vector<Permutation>& components,
                     const Permutation& cells) {
  std::vector<std::uint8_t> img(m * d);
  for (unsigned c = 0; c < d; ++c)
    for (unsigned x = 0; x < m; ++x)
      img[c * m + x] = static_cast<std::uint8_t>(cells[c] * m +
                                                 components[c][x]);
  return Permutation(std::move(img));
}

std::vector<std::vector<unsigned>> base_cycles(const Permutation& b) {
  return b.cycles();
}

// All elements of u with a given cycle type.
std::vector<Permutation> class_elements(const PermGroup& u,
                                        const CycleType& t) {
  std::vector<Permutation> out;
  u.for_each_element([&](const Permutation& p) {
    if (cycle_type(p) == t) out.push_back(p);
    return true;
  });
  return out;
}

// Assignments of the slot multiset to concrete cycles (by index) with
// matching lengths; slots are consumed in order.
void slot_assignments(const std::vector<std::vector<unsigned>>& cycles,
                      const std::vector<ReturnSlot>& slots, std::size_t k,
                      std::vector<int>& cycle_slot,
                      std::vector<std::vector<int>>& out) {
  if (k == slots.size()) {
    out.push_back(cycle_slot);
    return;
  }
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (cycle_slot[c] >= 0) continue;
    if (cycles[c].size() != slots[k].base_cycle_length) continue;
    // avoid duplicate assignments of equal slots: enforce increasing cycle
    // index within runs of identical slots
    if (k > 0 && slots[k] == slots[k - 1]) {
      bool earlier_free_equal = false;
      for (std::size_t c2 = 0; c2 < c; ++c2)
        if (cycle_slot[c2] == static_cast<int>(k) - 1) earlier_free_equal = true;
      if (!earlier_free_equal) continue;
    }
    cycle_slot[c] = static_cast<int>(k);
    slot_assignments(cycles, slots, k + 1, cycle_slot, out);
    cycle_slot[c] = -1;
  }
}

}  // namespace

CycleType forced_ambient_type(unsigned m, const PositionSpec& pos) {
  std::vector<unsigned> parts;
  auto cycles = base_cycles(pos.base);
  // group slots per length for a deterministic assignment; types only
  std::map<unsigned, std::vector<CycleType>> per_len;
  for (const auto& s : pos.slots)
    per_len[s.base_cycle_length].push_back(s.return_type);
  for (const auto& c : cycles) {
    unsigned l = static_cast<unsigned>(c.size());
    auto& queue = per_len[l];
    if (!queue.empty()) {
      CycleType rt = queue.back();
      queue.pop_back();
      for (unsigned part : rt.parts())
        for (unsigned rep = 0; rep < 1; ++rep) parts.push_back(l * part);
    } else {
      for (unsigned rep = 0; rep < m; ++rep) parts.push_back(l);
    }
  }
  for (const auto& [l, rem] : per_len)
    if (!rem.empty())
      throw HypothesisViolated("slot does not fit any base cycle");
  return CycleType(parts);
}

std::vector<Permutation> lift_candidates(const PermGroup& u,
                                         const PermGroup& v,
                                         const PositionSpec& pos,
                                         bool canonical_full_cycle_only) {
  unsigned m = u.degree(), d = v.degree();
  auto cycles = base_cycles(pos.base);
  std::vector<int> cycle_slot(cycles.size(), -1);
  std::vector<std::vector<int>> assignments;
  slot_assignments(cycles, pos.slots, 0, cycle_slot, assignments);
  if (assignments.empty() && pos.slots.empty())
    assignments.push_back(std::vector<int>(cycles.size(), -1));

  std::vector<Permutation> u_all;
  u.for_each_element([&](const Permutation& p) {
    u_all.push_back(p);
    return true;
  });

  std::vector<Permutation> out;
  std::vector<Permutation> comps(d, Permutation(m));

  for (const auto& assign : assignments) {
    // per cycle: candidate return maps
    std::vector<std::vector<Permutation>> returns(cycles.size());
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (assign[c] >= 0)
        returns[c] = class_elements(u, pos.slots[assign[c]].return_type);
      else
        returns[c] = {Permutation(m)};
    }
    // In canonical gauge the diagonal kernel conjugation still moves the
    // return map across its class, so one representative per class suffices.
    if (canonical_full_cycle_only && cycles.size() == 1 &&
        returns[0].size() > 1) {
      std::vector<Permutation> reps;
      std::set<Permutation> covered;
      for (const auto& w : returns[0]) {
        if (covered.count(w)) continue;
        reps.push_back(w);
        for (auto& y : conjugacy_class(u, w)) covered.insert(std::move(y));
      }
      returns[0] = std::move(reps);
    }
    // free components: all but the last cell of each cycle
    // canonical full-cycle mode: everything pinned to identity, return a
    // fixed representative per return class value
    std::function<void(std::size_t)> rec_cycle = [&](std::size_t ci) {
      if (ci == cycles.size()) {
        out.push_back(assemble(m, d, comps, pos.base));
        return;
      }
      const auto& cyc = cycles[ci];
      // choose free components along the cycle
      std::function<void(std::size_t)> rec_free = [&](std::size_t k) {
        if (k + 1 == cyc.size() || cyc.size() == 1) {
          for (const auto& w : returns[ci]) {
            // last component makes the return map equal w:
            // w = h_{last} * h_{l-2} * ... * h_0  =>  h_last = w * (prod)^-1
            Permutation prod(m);
            for (std::size_t t = 0; t + 1 < cyc.size(); ++t)
              prod = comps[cyc[t]] * prod;
            comps[cyc.back()] = w * prod.inverse();
            rec_cycle(ci + 1);
          }
          comps[cyc.back()] = Permutation(m);
          return;
        }
        if (canonical_full_cycle_only) {
          comps[cyc[k]] = Permutation(m);
          rec_free(k + 1);
          return;
        }
        for (const auto& h : u_all) {
          comps[cyc[k]] = h;
          rec_free(k + 1);
        }
        comps[cyc[k]] = Permutation(m);
      };
      rec_free(0);
    };
    rec_cycle(0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SearchResult run_search(const SearchSpec& spec) {
  SearchResult result;
  unsigned m = spec.u.degree(), d = spec.v.degree();
  unsigned n = m * d;
  if (n > 32)
    throw ResourceBudgetExceeded("ambient degree above the search cap");
  std::size_t r = spec.positions.size();
  if (r < 2) throw HypothesisViolated("searches need at least two positions");

  // base tuple must have product one
  {
    Permutation prod(d);
    for (const auto& p : spec.positions) prod = prod * p.base;
    if (!prod.is_identity())
      throw HypothesisViolated("base tuple product is not the identity");
  }

  // genus precheck when every position's type is forced
  if (spec.require_genus0) {
    unsigned total = 0;
    bool all_forced = true;
    for (const auto& p : spec.positions) {
      try {
        total += forced_ambient_type(m, p).index();
      } catch (const HypothesisViolated&) {
        all_forced = false;
        break;
      }
    }
    if (all_forced && total != 2 * (n - 1)) {
      result.exhaustive = true;
      return result;  // no genus-zero tuple can match this prescription
    }
  }

  // candidates per position; position 0 in canonical mode when a full cycle
  // is required (every lift class has a representative with identity free
  // components, reachable by kernel-gauge conjugation)
  std::vector<std::vector<Permutation>> cands(r);
  for (std::size_t i = 0; i < r; ++i)
    cands[i] = lift_candidates(spec.u, spec.v, spec.positions[i],
                               i == 0 && spec.require_full_cycle);
  if (spec.require_full_cycle) {
    auto& c0 = cands[0];
    c0.erase(std::remove_if(c0.begin(), c0.end(),
                            [&](const Permutation& p) {
                              return cycle_type(p).parts().size() != 1;
                            }),
             c0.end());
  }

  std::set<BranchTuple> seen;
  std::vector<Permutation> current(r, Permutation(n));

  std::function<bool(std::size_t, const Permutation&)> rec =
      [&](std::size_t pos, const Permutation& prefix) -> bool {
    if (++result.nodes > spec.node_budget) return false;
    if (pos + 1 == r) {
      Permutation last = prefix.inverse();
      // projection and profile check via membership in the candidate set
      if (!std::binary_search(cands[pos].begin(), cands[pos].end(), last))
        return true;
      current[pos] = last;
      BranchTuple t = BranchTuple::unchecked(n, current);
      if (spec.require_transitive && !t.is_transitive()) return true;
      if (spec.require_genus0) {
        unsigned total = 0;
        for (const auto& e : t.entries()) total += perm_index(e);
        if (total != 2 * (n - 1)) return true;
      }
      ++result.raw_hits;
      BranchTuple cf = branch::canonical_form(t);
      if (seen.insert(cf).second) {
        FoundClass fc;
        fc.tuple = cf;
        PermGroup g = cf.generated_group();
        fc.order = g.order();
        fc.group = fingerprint(g);
        result.classes.push_back(std::move(fc));
      }
      return true;
    }
    for (const auto& cand : cands[pos]) {
      current[pos] = cand;
      if (!rec(pos + 1, prefix * cand)) return false;
    }
    return true;
  };

  result.exhaustive = rec(0, Permutation(n));
  std::sort(result.classes.begin(), result.classes.end(),
            [](const FoundClass& a, const FoundClass& b) {
              return a.tuple < b.tuple;
            });
  return result;
}

SearchResult brute_force_search(const SearchSpec& spec,
                                unsigned long long budget) {
  // reference: enumerate entries as arbitrary wreath elements with matching
  // projection and forced type, no canonicalization tricks
  SearchResult result;
  unsigned m = spec.u.degree(), d = spec.v.degree(), n = m * d;
  std::size_t r = spec.positions.size();
  std::vector<std::vector<Permutation>> cands(r);
  for (std::size_t i = 0; i < r; ++i)
    cands[i] = lift_candidates(spec.u, spec.v, spec.positions[i], false);
  if (spec.require_full_cycle) {
    auto& c0 = cands[0];
    c0.erase(std::remove_if(c0.begin(), c0.end(),
                            [&](const Permutation& p) {
                              return cycle_type(p).parts().size() != 1;
                            }),
             c0.end());
  }
  std::set<BranchTuple> seen;
  std::vector<Permutation> current(r, Permutation(n));
  std::function<bool(std::size_t, const Permutation&)> rec =
      [&](std::size_t pos, const Permutation& prefix) -> bool {
    if (++result.nodes > budget) return false;
    if (pos + 1 == r) {
      Permutation last = prefix.inverse();
      if (!std::binary_search(cands[pos].begin(), cands[pos].end(), last))
        return true;
      current[pos] = last;
      BranchTuple t = BranchTuple::unchecked(n, current);
      if (spec.require_transitive && !t.is_transitive()) return true;
      if (spec.require_genus0) {
        unsigned total = 0;
        for (const auto& e : t.entries()) total += perm_index(e);
        if (total != 2 * (n - 1)) return true;
      }
      ++result.raw_hits;
      BranchTuple cf = branch::canonical_form(t);
      if (seen.insert(cf).second) {
        FoundClass fc;
        fc.tuple = cf;
        PermGroup g = cf.generated_group();
        fc.order = g.order();
        fc.group = fingerprint(g);
        result.classes.push_back(std::move(fc));
      }
      return true;
    }
    for (const auto& cand : cands[pos]) {
      current[pos] = cand;
      if (!rec(pos + 1, prefix * cand)) return false;
    }
    return true;
  };
  result.exhaustive = rec(0, Permutation(n));
  std::sort(result.classes.begin(), result.classes.end(),
            [](const FoundClass& a, const FoundClass& b) {
              return a.tuple < b.tuple;
            });
  return result;
}

}  // namespace verikit::search
