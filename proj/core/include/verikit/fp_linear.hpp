#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "verikit/perm_group.hpp"

namespace verikit::fp {

// Vector over F_p, all coordinates reduced mod p.
struct FpVector {
  unsigned p = 2;
  std::vector<std::uint8_t> c;

  FpVector() = default;
  FpVector(unsigned p_, std::vector<std::uint8_t> coords);
  static FpVector zero(unsigned p, unsigned n);
  static FpVector unit(unsigned p, unsigned n, unsigned i,
                       unsigned value = 1);

  unsigned size() const { return static_cast<unsigned>(c.size()); }
  bool is_zero() const;
  std::vector<unsigned> support() const;

  friend FpVector operator+(const FpVector& a, const FpVector& b);
  friend FpVector operator-(const FpVector& a, const FpVector& b);
  FpVector scaled(unsigned s) const;
  friend bool operator==(const FpVector& a, const FpVector& b) {
    return a.p == b.p && a.c == b.c;
  }
  friend bool operator<(const FpVector& a, const FpVector& b) {
    return a.c < b.c;
  }
};

// Submodule of F_p^n held in reduced row echelon form, so equality of
// submodules is plain sequence comparison.
class FpSubmodule {
 public:
  FpSubmodule() = default;
  FpSubmodule(unsigned p, unsigned n);
  static FpSubmodule span(unsigned p, unsigned n,
                          const std::vector<FpVector>& vectors);
  static FpSubmodule full(unsigned p, unsigned n);

  unsigned p() const { return p_; }
  unsigned length() const { return n_; }
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  const std::vector<FpVector>& basis() const { return rows_; }

  bool insert(const FpVector& v);  // returns true if dimension grew
  bool contains(const FpVector& v) const;
  bool contains(const FpSubmodule& other) const;
  FpVector reduce(FpVector v) const;

  FpSubmodule sum(const FpSubmodule& other) const;
  FpSubmodule intersection(const FpSubmodule& other) const;

  // All vectors (p^dim of them); guarded by an element budget.
  std::vector<FpVector> enumerate(unsigned long long budget = 1 << 20) const;

  friend bool operator==(const FpSubmodule& a, const FpSubmodule& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  unsigned p_ = 2, n_ = 0;
  std::vector<FpVector> rows_;  // RREF, pivots strictly increasing
};

// Group acting on F_p^n by permuting coordinates and scaling: generator i
// maps e_j to scale[i][perm(j)] * e_{perm(j)}.  The trivial character (all
// scales 1) is the permutation module.
class MonomialAction {
 public:
  MonomialAction(PermGroup group, unsigned p);  // permutation module
  MonomialAction(PermGroup group, unsigned p,
                 std::vector<std::vector<std::uint8_t>> scales);

  const PermGroup& group() const { return group_; }
  unsigned p() const { return p_; }
  unsigned n() const { return group_.degree(); }

  FpVector apply(unsigned gen_index, const FpVector& v) const;
  FpVector apply(const Permutation& g, const FpVector& v) const;  // scales=1

  // The character is stored only on generators; this samples random word
  // pairs with equal permutation part and compares the monomial parts.
  bool spot_check_consistency(unsigned trials = 1000) const;

 private:
  PermGroup group_;
  unsigned p_;
  std::vector<std::vector<std::uint8_t>> scales_;
};

// F_p-span of the orbit of v, closed under the action (verified on return).
FpSubmodule orbit_span(const MonomialAction& a, const FpVector& v);

// ------- distinguished submodules -------

enum class SubmoduleKind {
  Zero,
  Diag,
  Aug,        // product-one tuples
  AugMinus,   // alternating product-one tuples (even length)
  Full,
  AugPower,       // (Aug(C_p^o))^(n/o) along residue classes mod n/o
  AugMinusPower,  // (Aug^-(C_p^o))^(n/o), o even
  Other,
};

struct DistinguishedSubmodule {
  SubmoduleKind kind = SubmoduleKind::Other;
  unsigned o = 0;    // block length for the power kinds
  unsigned dim = 0;  // always filled
  std::string to_string() const;
  friend bool operator==(const DistinguishedSubmodule& a,
                         const DistinguishedSubmodule& b) {
    return a.kind == b.kind && a.o == b.o && a.dim == b.dim;
  }
};

// Explicit construction of each distinguished submodule of F_p^n.
FpSubmodule make_distinguished(unsigned p, unsigned n, SubmoduleKind kind,
                               unsigned o = 0);
DistinguishedSubmodule classify_submodule(const FpSubmodule& m);

// ------- cyclic codes -------

// Dense coefficient polynomials over F_p, index = degree of the monomial.
using FpPoly = std::vector<std::uint8_t>;
FpPoly fp_poly_trim(FpPoly f);
FpPoly fp_poly_mul(unsigned p, const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_mod(unsigned p, FpPoly a, const FpPoly& m);
FpPoly fp_poly_gcd(unsigned p, FpPoly a, FpPoly b);  // monic-normalized

// Code with generator polynomial gcd(X^q - 1, f), as a submodule of F_p^q;
// coordinate i carries the coefficient of X^i.
FpSubmodule cyclic_code(unsigned p, unsigned q, const FpPoly& f);

}  // namespace verikit::fp
