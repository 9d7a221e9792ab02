#pragma once

#include "verikit/fp_linear.hpp"
#include "verikit/frame.hpp"

namespace verikit::wreath {

// Input for the commutator-closure procedure on a kernel Gamma <= H^d with
// H = W.U: W an elementary-abelian p-subgroup of the cell action given by an
// explicit basis of commuting model p-elements.  The engine follows the
// constructive double induction (shrink witness supports by commutators,
// then empty them while keeping the focus cell alive) and returns a
// certified submodule of Delta = Gamma ∩ W^d.
struct ClosureMode {
  enum Kind {
    Semisimple,      // decomposition into irreducible U'-modules
    Heart,           // indecomposable pieces, irreducible modulo the diagonal
    Indecomposable,  // single indecomposable W, descending commutator chain
  } kind = Semisimple;
};

struct ClosureInstance {
  std::vector<Permutation> w_basis;      // model perms, F_p-basis of W
  unsigned p = 2;
  std::vector<fp::FpSubmodule> decomposition;  // W_j in W-coordinates
  std::vector<Permutation> witnesses;          // kernel elements x_1..x_s
  unsigned focus_cell = 0;
  ClosureMode mode;
  unsigned search_depth = 6;  // word length cap for witness searches
};

struct ClosureCertificate {
  // Span of everything certified, in cell-major W-coordinates (k*d long):
  // coordinate (cell * k + b) is the coefficient of w_basis[b] at cell.
  fp::FpSubmodule certified;
  // Ambient elements realizing a basis of the certified submodule, each
  // re-verified by kernel membership and block support.
  std::vector<Permutation> elements;
  // Indices j of the decomposition for which the full power W_j^d was
  // certified.
  std::vector<unsigned> full_power_indices;
  std::string detail;
};

ClosureCertificate closure_lower_bound(const ImprimitiveFrame& frame,
                                       const ClosureInstance& inst);

// W-coordinate helpers shared with tests.
struct WTable {
  unsigned p = 2, k = 0;
  std::vector<Permutation> basis;
  std::map<Permutation, fp::FpVector> dlog;
  WTable(unsigned p, std::vector<Permutation> basis);
  Permutation element_of(const fp::FpVector& v) const;
  bool contains(const Permutation& w) const { return dlog.count(w) > 0; }
  fp::FpVector coords(const Permutation& w) const;
};

}  // namespace verikit::wreath
