#pragma once

#include "verikit/braid.hpp"
#include "verikit/branch_tuple.hpp"
#include "verikit/fingerprint.hpp"
#include "verikit/frame.hpp"

namespace verikit::search {

// One slot of a lift prescription: a cycle of the base entry of this length
// carries a return map of this type in the cell action.  Unprescribed cycles
// carry identity returns.
struct ReturnSlot {
  unsigned base_cycle_length = 1;
  CycleType return_type;  // in U
  friend bool operator==(const ReturnSlot& a, const ReturnSlot& b) {
    return a.base_cycle_length == b.base_cycle_length &&
           a.return_type == b.return_type;
  }
};

struct PositionSpec {
  Permutation base;               // entry of the projected tuple in V
  std::vector<ReturnSlot> slots;  // multiset of prescribed nontrivial returns
};

struct SearchSpec {
  PermGroup u;  // cell action, degree m
  PermGroup v;  // cells action, degree d
  std::vector<PositionSpec> positions;
  bool require_transitive = true;
  bool require_genus0 = true;
  bool require_full_cycle = true;  // position 0 lifts to a full md-cycle
  unsigned long long node_budget = 4000000000ull;
  unsigned seed = 0;  // exploration order only; the result set is canonical
};

struct FoundClass {
  branch::BranchTuple tuple;  // canonical form
  GroupFingerprint group;
  unsigned long long order = 0;
};

struct SearchResult {
  std::vector<FoundClass> classes;
  bool exhaustive = true;
  unsigned long long nodes = 0;
  unsigned long long raw_hits = 0;
};

SearchResult run_search(const SearchSpec& spec);

// All ambient lifts of `base` whose per-cycle return maps realize the given
// slot multiset (identity elsewhere); used by the search and by tests.
std::vector<Permutation> lift_candidates(const PermGroup& u,
                                         const PermGroup& v,
                                         const PositionSpec& pos,
                                         bool canonical_full_cycle_only);

// The ambient cycle type forced by a position prescription.
CycleType forced_ambient_type(unsigned m, const PositionSpec& pos);

// Naive reference enumerator for cross-checks at tiny degrees: enumerates
// every tuple over the full wreath product whose projections match.
SearchResult brute_force_search(const SearchSpec& spec,
                                unsigned long long budget = 400000000ull);

}  // namespace verikit::search
