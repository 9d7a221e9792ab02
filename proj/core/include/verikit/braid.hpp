#pragma once

#include <functional>

#include "verikit/branch_tuple.hpp"

namespace verikit::branch {

// Letters are 1-based: +i is the i-th elementary braid, -i its inverse.
struct BraidWord {
  std::vector<int> letters;
};

// (.., pi_i, pi_{i+1}, ..) -> (.., pi_i pi_{i+1} pi_i^{-1}, pi_i, ..)
BranchTuple braid_generator(const BranchTuple& t, unsigned i, bool inverse);
BranchTuple braid_act(const BranchTuple& t, const BraidWord& w);

// Canonical representative under simultaneous conjugation: the first entry
// is brought to its canonical cycle layout, then the lexicographically
// smallest image sequence over the centralizer of that layout is taken.
// This normal form is a repository convention; only equality of forms is
// meaningful.
BranchTuple canonical_form(const BranchTuple& t,
                           unsigned long long centralizer_budget = 2000000);

// Canonical permutation with the given cycle type: cycles laid out on
// consecutive points, longest first.
Permutation canonical_of_type(const CycleType& type);

struct BraidOrbitOptions {
  bool up_to_conjugacy = true;
  unsigned long long max_size = 2000000;
};
std::vector<BranchTuple> braid_orbit(const BranchTuple& t,
                                     const BraidOrbitOptions& opts = {});

// All product-one tuples with the given entry types generating exactly
// `group`, up to simultaneous conjugation.  Exhaustive for degree <= 16.
std::vector<BranchTuple> enumerate_tuples(
    const PermGroup& group, const std::vector<CycleType>& types,
    unsigned long long budget = 200000000);

}  // namespace verikit::branch
