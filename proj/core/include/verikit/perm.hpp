#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "verikit/errors.hpp"

namespace verikit {

// Points are 0-indexed internally; the text format uses 1-indexed disjoint
// cycles, e.g. "(1,2,3)(4,5)".  Products compose right to left:
// (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(unsigned degree);  // identity
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation from_cycles(const std::string& text, unsigned degree);
  static Permutation cycle(unsigned degree,
                           const std::vector<unsigned>& points);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned at(unsigned x) const { return img_[x]; }
  unsigned operator[](unsigned x) const { return img_[x]; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation power(long long k) const;
  unsigned order() const;

  // Extends the domain with fixed points.
  Permutation extended(unsigned new_degree) const;

  std::vector<std::vector<unsigned>> cycles() const;  // includes fixed points
  std::string to_cycle_string() const;                // 1-indexed

  const std::vector<std::uint8_t>& images() const { return img_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

 private:
  std::vector<std::uint8_t> img_;
};

Permutation conjugate(const Permutation& g, const Permutation& h);  // h^-1 g h
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

// Multiset of cycle lengths, fixed points included; parts sum to the degree.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<unsigned> parts);
  static CycleType of(const Permutation& p);

  // Accepts "[3.1]", "[2^3.1]", "[2,1,1]" and mixtures of the two notations.
  static CycleType parse(const std::string& text, unsigned degree = 0);

  const std::vector<unsigned>& parts() const { return parts_; }  // descending
  unsigned degree() const;
  unsigned index() const;  // sum of (part - 1)
  std::string to_string() const;

  friend bool operator==(const CycleType& a, const CycleType& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const CycleType& a, const CycleType& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<unsigned> parts_;
};

CycleType cycle_type(const Permutation& p);
unsigned perm_index(const Permutation& p);  // degree minus number of cycles

}  // namespace verikit
