#pragma once

#include <optional>

#include "verikit/perm.hpp"
#include "verikit/perm_group.hpp"

namespace verikit::branch {

// Tuple of inertia generators with product one.  The product composes right
// to left: entries[0] * entries[1] * ... * entries[r-1] == identity.
class BranchTuple {
 public:
  BranchTuple() = default;
  BranchTuple(unsigned degree, std::vector<Permutation> entries);

  // Unvalidated construction for search internals.
  static BranchTuple unchecked(unsigned degree,
                               std::vector<Permutation> entries);

  unsigned degree() const { return degree_; }
  unsigned size() const { return static_cast<unsigned>(entries_.size()); }
  const Permutation& entry(unsigned i) const { return entries_[i]; }
  const std::vector<Permutation>& entries() const { return entries_; }

  bool product_is_identity() const;
  PermGroup generated_group() const;
  bool is_transitive() const;

  friend bool operator==(const BranchTuple& a, const BranchTuple& b) {
    return a.degree_ == b.degree_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const BranchTuple& a, const BranchTuple& b);

 private:
  unsigned degree_ = 0;
  std::vector<Permutation> entries_;
};

struct RamificationType {
  std::vector<CycleType> types;  // sorted multiset
  explicit RamificationType(std::vector<CycleType> t = {});
  static RamificationType of(const BranchTuple& t);
  std::string to_string() const;
  friend bool operator==(const RamificationType& a, const RamificationType& b) {
    return a.types == b.types;
  }
};

// Riemann-Hurwitz genus: (sum of indices)/2 - degree + 1.  Throws
// OddIndexSum for impossible tuples and NotTransitive for disconnected ones.
int genus(const BranchTuple& t);

// product-one, transitive, genus 0, and some entry a full cycle
bool is_polynomial_tuple(const BranchTuple& t);

// Replaces (entry i, entry i+1) by their product; needs size >= 3.
BranchTuple coalesce(const BranchTuple& t, unsigned i);

BranchTuple conjugate_tuple(const BranchTuple& t, const Permutation& s);

}  // namespace verikit::branch
