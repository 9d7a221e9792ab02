#include "verikit/branch_tuple.hpp"

#include <algorithm>
#include <sstream>

namespace verikit::branch {

BranchTuple::BranchTuple(unsigned degree, std::vector<Permutation> entries)
    : degree_(degree), entries_(std::move(entries)) {
  if (entries_.size() < 2) throw Error("tuples need at least two entries");
  for (const auto& e : entries_)
    if (e.degree() != degree_)
      throw InvalidPermutation("tuple entry degree mismatch");
  if (!product_is_identity())
    throw Error("tuple product is not the identity");
}

BranchTuple BranchTuple::unchecked(unsigned degree,
                                   std::vector<Permutation> entries) {
  BranchTuple t;
  t.degree_ = degree;
  t.entries_ = std::move(entries);
  return t;
}

bool BranchTuple::product_is_identity() const {
  Permutation acc(degree_);
  for (const auto& e : entries_) acc = acc * e;
  return acc.is_identity();
}

PermGroup BranchTuple::generated_group() const {
  return PermGroup(degree_, entries_);
}

bool BranchTuple::is_transitive() const {
  // orbit of 0 under the entries, no chain needed
  std::vector<bool> seen(degree_, false);
  std::vector<unsigned> stack{0};
  seen[0] = true;
  unsigned count = 1;
  while (!stack.empty()) {
    unsigned x = stack.back();
    stack.pop_back();
    for (const auto& e : entries_) {
      unsigned y = e[x];
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree_;
}

bool operator<(const BranchTuple& a, const BranchTuple& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return a.entries_ < b.entries_;
}

RamificationType::RamificationType(std::vector<CycleType> t)
    : types(std::move(t)) {
  std::sort(types.begin(), types.end());
}

RamificationType RamificationType::of(const BranchTuple& t) {
  std::vector<CycleType> types;
  for (const auto& e : t.entries()) types.push_back(cycle_type(e));
  return RamificationType(std::move(types));
}

std::string RamificationType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) os << ",";
    os << types[i].to_string();
  }
  os << ")";
  return os.str();
}

int genus(const BranchTuple& t) {
  if (!t.product_is_identity()) throw Error("tuple product is not identity");
  if (!t.is_transitive())
    throw NotTransitive("tuple does not describe a connected cover");
  unsigned total = 0;
  for (const auto& e : t.entries()) total += perm_index(e);
  if (total % 2) throw OddIndexSum("odd total index: not a branch description");
  return static_cast<int>(total / 2) - static_cast<int>(t.degree()) + 1;
}

bool is_polynomial_tuple(const BranchTuple& t) {
  if (!t.product_is_identity() || !t.is_transitive()) return false;
  bool has_full_cycle = false;
  for (const auto& e : t.entries())
    if (cycle_type(e).parts().size() == 1) has_full_cycle = true;
  if (!has_full_cycle) return false;
  unsigned total = 0;
  for (const auto& e : t.entries()) total += perm_index(e);
  return total % 2 == 0 &&
         total / 2 == t.degree() - 1;  // genus 0
}

BranchTuple coalesce(const BranchTuple& t, unsigned i) {
  if (t.size() < 3)
    throw Error("coalescing needs at least three branch points");
  if (i + 1 >= t.size()) throw IndexOutOfRange("coalescing position");
  std::vector<Permutation> entries;
  for (unsigned k = 0; k < t.size(); ++k) {
    if (k == i) {
      entries.push_back(t.entry(i) * t.entry(i + 1));
      ++k;  // skip i+1
    } else {
      entries.push_back(t.entry(k));
    }
  }
  return BranchTuple(t.degree(), std::move(entries));
}

BranchTuple conjugate_tuple(const BranchTuple& t, const Permutation& s) {
  std::vector<Permutation> entries;
  for (const auto& e : t.entries()) entries.push_back(conjugate(e, s));
  return BranchTuple::unchecked(t.degree(), std::move(entries));
}

}  // namespace verikit::branch
