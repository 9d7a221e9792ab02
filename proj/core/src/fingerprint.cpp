#include "verikit/fingerprint.hpp"

#include <sstream>

namespace verikit {

std::string GroupFingerprint::canonical_string() const {
  std::ostringstream os;
  os << "deg=" << degree << ";ord=" << order << ";tr=" << transitive
     << ";bs=" << num_block_systems << ";mbs=" << num_maximal_block_systems
     << ";fc=" << contains_full_cycle << ";der=" << derived_order
     << ";ab=" << abelian_quotient_order
     << ";sampled=" << cycle_types_sampled << ";types={";
  for (const auto& [t, c] : cycle_type_counts) os << t << ":" << c << ",";
  os << "}";
  return os.str();
}

GroupFingerprint fingerprint(const PermGroup& g,
                             unsigned long long full_enum_bound) {
  GroupFingerprint fp;
  fp.degree = g.degree();
  fp.order = g.order();
  fp.transitive = g.is_transitive();
  if (fp.transitive) {
    auto systems = all_block_systems(g);
    fp.num_block_systems = static_cast<unsigned>(systems.size());
    fp.num_maximal_block_systems =
        static_cast<unsigned>(maximal_block_systems(g).size());
  }
  PermGroup der = derived_subgroup(g);
  fp.derived_order = der.order();
  fp.abelian_quotient_order = g.order() / der.order();

  auto note = [&](const Permutation& p) {
    CycleType t = cycle_type(p);
    ++fp.cycle_type_counts[t.to_string()];
    if (t.parts().size() == 1 && t.parts()[0] == g.degree())
      fp.contains_full_cycle = true;
  };

  if (g.order() <= full_enum_bound) {
    g.for_each_element([&](const Permutation& p) {
      note(p);
      return true;
    });
  } else {
    // 10^4 deterministic words over the generators (fixed LCG).
    fp.cycle_types_sampled = true;
    const auto& gens = g.generators();
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<std::size_t>(state >> 33);
    };
    for (unsigned w = 0; w < 10000; ++w) {
      Permutation p(g.degree());
      unsigned len = 3 + next() % 14;
      for (unsigned i = 0; i < len; ++i) p = p * gens[next() % gens.size()];
      note(p);
    }
  }
  return fp;
}

}  // namespace verikit
