#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "verikit/perm_group.hpp"

namespace verikit {

// Identity surrogate for a group: degree, order, transitivity, the multiset
// of element cycle types (all elements when the order is small, otherwise a
// fixed pseudo-random word sample), number of block systems and the shape of
// the abelianization.  Database labels cannot be certified here; callers may
// attach a claimed label as metadata next to the fingerprint.
struct GroupFingerprint {
  unsigned degree = 0;
  unsigned long long order = 0;
  bool transitive = false;
  unsigned num_block_systems = 0;
  unsigned num_maximal_block_systems = 0;
  bool contains_full_cycle = false;
  unsigned long long derived_order = 0;
  unsigned long long abelian_quotient_order = 0;
  std::map<std::string, unsigned long long> cycle_type_counts;
  bool cycle_types_sampled = false;  // true if counts come from word sampling

  std::string canonical_string() const;

  friend bool operator==(const GroupFingerprint& a, const GroupFingerprint& b) {
    return a.canonical_string() == b.canonical_string();
  }
  friend bool operator<(const GroupFingerprint& a, const GroupFingerprint& b) {
    return a.canonical_string() < b.canonical_string();
  }
};

GroupFingerprint fingerprint(const PermGroup& g,
                             unsigned long long full_enum_bound = 10000);

}  // namespace verikit
