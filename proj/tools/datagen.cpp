// Regenerates the frozen data files under core/data: exceptional composite
// rows (generators found by exhaustive lift searches over each branch-point
// configuration) and the degree-9 dihedral tower tuples.  Output goes to
// stdout as a JSON document per section.

#include <json.hpp>

#include <iostream>
#include <set>

#include "verikit/braid.hpp"
#include "verikit/fingerprint.hpp"
#include "verikit/frame.hpp"
#include "verikit/groups_std.hpp"
#include "verikit/json_io.hpp"
#include "verikit/search.hpp"

using namespace verikit;
using nlohmann::json;

namespace {

using branch::BranchTuple;
using search::PositionSpec;
using search::ReturnSlot;
using search::SearchSpec;

// polynomial-type base tuples of v: full cycle first, genus zero, generating
std::vector<BranchTuple> polynomial_bases(const PermGroup& v, unsigned extra) {
  std::vector<BranchTuple> out;
  unsigned n = v.degree();
  // collect class representatives and their types
  auto reps = conjugacy_class_reps(v, 40000000ull);
  std::vector<std::pair<CycleType, Permutation>> classes;
  for (const auto& r : reps)
    if (!r.is_identity()) classes.emplace_back(cycle_type(r), r);
  // full-cycle class present?
  std::vector<CycleType> types;
  for (const auto& [t, r] : classes)
    if (t.parts().size() == 1) types.push_back(t);
  if (types.empty()) return out;
  unsigned r = 2 + extra;  // number of branch points
  // enumerate type multisets for the finite positions with total index n-1
  std::vector<CycleType> finite;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t start,
                                                       unsigned left) {
    if (finite.size() == r - 1) {
      if (left) return;
      std::vector<CycleType> all{CycleType(std::vector<unsigned>{n})};
      all.insert(all.end(), finite.begin(), finite.end());
      try {
        for (auto& t : branch::enumerate_tuples(v, all, 600000000ull))
          out.push_back(t);
      } catch (const ResourceBudgetExceeded&) {
      }
      return;
    }
    for (std::size_t i = start; i < classes.size(); ++i) {
      unsigned ind = classes[i].first.index();
      if (ind == 0 || ind > left) continue;
      finite.push_back(classes[i].first);
      rec(i, left - ind);
      finite.pop_back();
    }
  };
  rec(0, n - 1);
  // dedupe by canonical form
  std::set<BranchTuple> seen;
  std::vector<BranchTuple> unique;
  for (auto& t : out)
    if (seen.insert(t).second) unique.push_back(t);
  return unique;
}

struct RowHit {
  std::string config;
  search::FoundClass cls;
};

// all placements of the finite branch data of h over a base tuple
std::vector<std::pair<std::string, SearchSpec>> configs_for(
    const PermGroup& u, const PermGroup& v, const BranchTuple& base,
    const CycleType& h_infinity, const std::vector<CycleType>& h_finite) {
  std::vector<std::pair<std::string, SearchSpec>> out;
  unsigned m = u.degree();
  // position specs from the base tuple: position 0 carries the h-infinity
  // return on its full cycle
  auto base_positions = [&]() {
    std::vector<PositionSpec> ps;
    for (unsigned i = 0; i < base.size(); ++i) {
      PositionSpec p;
      p.base = base.entry(i);
      if (i == 0) p.slots.push_back({base.degree(), h_infinity});
      ps.push_back(p);
    }
    return ps;
  };
  // one finite h-branch value (X^p or X^2): placements over base cycles or a
  // fresh position
  if (h_finite.size() == 1) {
    for (unsigned i = 1; i < base.size(); ++i) {
      std::set<unsigned> lens;
      for (const auto& c : base.entry(i).cycles())
        lens.insert(static_cast<unsigned>(c.size()));
      for (unsigned l : lens) {
        SearchSpec spec;
        spec.u = u;
        spec.v = v;
        spec.positions = base_positions();
        spec.positions[i].slots.push_back({l, h_finite[0]});
        out.emplace_back("pos" + std::to_string(i) + "/len" +
                             std::to_string(l),
                         std::move(spec));
      }
    }
    SearchSpec spec;
    spec.u = u;
    spec.v = v;
    spec.positions = base_positions();
    PositionSpec fresh;
    fresh.base = Permutation(v.degree());
    fresh.slots.push_back({1, h_finite[0]});
    spec.positions.push_back(fresh);
    out.emplace_back("fresh", std::move(spec));
  }
  return out;
}

json row_json(const std::string& key, unsigned deg_g, const std::string& h,
              const RowHit& hit, const PermGroup& g) {
  json j;
  j["key"] = key;
  j["deg_g"] = deg_g;
  j["h"] = h;
  j["config"] = hit.config;
  j["order"] = g.order();
  j["generators"] = io::group_to_json(g)["generators"];
  j["degree"] = g.degree();
  j["witness_tuple"] = io::tuple_to_json(hit.cls.tuple)["entries"];
  // split flag over the block kernel
  wreath::ImprimitiveFrame frame = wreath::ImprimitiveFrame::detect(
      g, g.degree() / deg_g);
  auto split = is_split_extension(g, frame.block_kernel(), 4000000ull);
  j["split"] = split.result == SplitResult::Split
                   ? "split"
                   : (split.result == SplitResult::NonSplit ? "nonsplit"
                                                            : "unknown");
  j["kernel_order"] = frame.block_kernel().order();
  // reality obstruction: no x in G conjugates a full cycle to its inverse;
  // the property is conjugation-invariant, so one representative per class
  // of full cycles suffices
  std::vector<Permutation> reps;
  {
    std::set<Permutation> covered;
    g.for_each_element([&](const Permutation& p) {
      if (cycle_type(p).parts().size() != 1 || covered.count(p)) return true;
      reps.push_back(p);
      for (auto& y : conjugacy_class(g, p)) covered.insert(std::move(y));
      return true;
    });
  }
  bool any_inverted = false;
  for (const auto& tau : reps) {
    Permutation tau_inv = tau.inverse();
    g.for_each_element([&](const Permutation& x) {
      if (conjugate(tau, x) == tau_inv) {
        any_inverted = true;
        return false;
      }
      return true;
    });
    if (any_inverted) break;
  }
  j["real_form_possible"] = any_inverted;
  return j;
}

void hunt(const std::string& key, unsigned deg_g, const PermGroup& v,
          const std::string& h_kind, unsigned long long claimed_order,
          const std::string& claimed_split, json* rows) {
  PermGroup u = h_kind == "X2" ? groups::cyclic(2) : groups::cyclic(3);
  CycleType h_inf({u.degree()});
  std::vector<CycleType> h_fin{CycleType({u.degree()})};
  for (unsigned extra : {1u, 2u}) {
    auto bases = polynomial_bases(v, extra);
    std::cerr << key << ": " << bases.size() << " base classes (r="
              << 2 + extra << ")\n";
    for (const auto& base : bases) {
      for (auto& [config, spec] : configs_for(u, v, base, h_inf, h_fin)) {
        search::SearchResult res;
        try {
          res = search::run_search(spec);
        } catch (const std::exception& e) {
          std::cerr << "  config " << config << " failed: " << e.what()
                    << "\n";
          continue;
        }
        for (const auto& cls : res.classes) {
          if (cls.order != claimed_order) continue;
          PermGroup g = cls.tuple.generated_group();
          RowHit hit{config, cls};
          json j = row_json(key, deg_g, h_kind, hit, g);
          if (j["split"] == claimed_split) {
            rows->push_back(j);
            std::cerr << "  hit: " << key << " via " << config << "\n";
            return;
          }
        }
      }
    }
    if (extra == 1) std::cerr << "  retrying with four branch points\n";
  }
  std::cerr << "  NO HIT for " << key << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string section = argc > 1 ? argv[1] : "rows";
  if (section == "rows") {
    json rows = json::array();
    hunt("gl2-3-8", 4, groups::symmetric(4), "X2", 48, "nonsplit", &rows);
    hunt("2pgl2-5-12", 6, groups::pgl2(5), "X2", 240, "nonsplit", &rows);
    hunt("c2xpsl3-2-14", 7, groups::psl32(), "X2", 336, "split", &rows);
    hunt("2e4psl3-2-14-nonsplit", 7, groups::psl32(), "X2", 2688, "nonsplit",
         &rows);
    hunt("2e4psl3-2-14-split", 7, groups::psl32(), "X2", 2688, "split",
         &rows);
    hunt("2pgl2-7-16", 8, groups::pgl2(7), "X2", 672, "nonsplit", &rows);
    hunt("c3xa5-15", 5, groups::alternating(5), "X3", 180, "split", &rows);
    hunt("2pgammal2-9-20", 10, groups::pgammal29(), "X2", 2880, "nonsplit",
         &rows);
    hunt("c2xm11-22", 11, groups::mathieu11(), "X2", 15840, "split", &rows);
    hunt("c3xpgl2-7-24", 8, groups::pgl2(7), "X3", 1008, "split", &rows);
    hunt("c2xpsl3-3-26", 13, groups::psl33(), "X2", 11232, "split", &rows);
    std::cout << rows.dump(1) << "\n";
  } else if (section == "tower") {
    // degree-9 tuples: D_3-blocks over a D_3 base, not the chebyshev tower
    PermGroup d3 = groups::dihedral(3);
    Permutation s3 = Permutation::cycle(3, {0, 1, 2});
    Permutation refl = d3.generators()[1];
    json tuples = json::array();
    // base: ([3],[2,1],[2,1]) chebyshev-type triple in D_3
    Permutation t2 = refl;
    Permutation t3 = (s3 * t2).inverse();
    SearchSpec spec;
    spec.u = d3;
    spec.v = d3;
    spec.positions.resize(4);
    spec.positions[0].base = s3;
    spec.positions[0].slots.push_back({3, CycleType({3})});
    spec.positions[1].base = t2;
    spec.positions[2].base = t3;
    spec.positions[3].base = Permutation(3);
    // h-branch points over fresh values keep the kernel large: place the two
    // finite branch points of the inner dihedral cubic over a base branch
    // point and a fresh point
    spec.positions[1].slots.push_back({1, CycleType({2, 1})});
    spec.positions[3].slots.push_back({1, CycleType({2, 1})});
    auto res = search::run_search(spec);
    for (const auto& cls : res.classes) {
      PermGroup g = cls.tuple.generated_group();
      json j = io::tuple_to_json(cls.tuple);
      j["order"] = g.order();
      tuples.push_back(j);
    }
    std::cout << tuples.dump(1) << "\n";
  }
  return 0;
}
