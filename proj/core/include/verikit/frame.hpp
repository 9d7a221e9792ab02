#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>

#include "verikit/fp_linear.hpp"
#include "verikit/perm_group.hpp"

namespace verikit::wreath {

// A transitive group together with an invariant block structure, identifying
// it with a subgroup of U wr V: U is the block action on one cell, V the
// action on cells.  Cells are ordered by minimum point; within each cell
// points are identified with {0..m-1} in sorted order.
class ImprimitiveFrame {
 public:
  ImprimitiveFrame(PermGroup ambient, BlockSystem blocks);
  // Auto-detect: unique invariant system with cells of the given size.
  static ImprimitiveFrame detect(PermGroup ambient, unsigned cell_size);

  const PermGroup& ambient() const { return ambient_; }
  const BlockSystem& blocks() const { return blocks_; }
  unsigned cell_size() const { return blocks_.cell_size(); }       // m
  unsigned num_cells() const { return blocks_.num_cells(); }       // d
  const PermGroup& blocks_image() const { return v_image_; }       // <= Sym(d)
  const PermGroup& cell_action() const { return u_model_; }        // <= Sym(m)

  Permutation cells_action_of(const Permutation& g) const;
  // Restriction of a cell-stabilizing element to one cell, in model points.
  Permutation component(const Permutation& g, unsigned cell) const;
  // Model permutation u placed on one cell, identity elsewhere.
  Permutation embed(const Permutation& u, unsigned cell) const;

  // Kernel of the cells action, generators from a deterministic
  // Schreier-generator sweep, with certified order.
  const PermGroup& block_kernel() const { return kernel_; }

 private:
  PermGroup ambient_;
  BlockSystem blocks_;
  PermGroup v_image_;
  PermGroup u_model_;
  PermGroup kernel_;
};

// Cells on which a kernel element acts nontrivially.
std::vector<unsigned> support(const ImprimitiveFrame& f, const Permutation& x);

// The subgroup of the kernel inside <s>^d for a model p-element s, as an
// F_p-submodule of F_p^d (coordinates: exponent of s per cell).
fp::FpSubmodule kernel_socle_submodule(const ImprimitiveFrame& f,
                                       const Permutation& model_element,
                                       unsigned p);

struct LargeKernelReport {
  bool large = false;
  bool socle_power_contained = false;  // soc(U)^d <= kernel
  bool socle_cyclic = false;
  unsigned socle_rank_in_kernel = 0;  // dim of kernel ∩ soc(U)^d when cyclic
  std::string reason;
};
LargeKernelReport large_kernel(const ImprimitiveFrame& f,
                               const PermGroup& socle_u);

struct BlockKernelReport {
  unsigned long long gamma_order = 0;
  std::map<unsigned, unsigned> p_part_orders;  // prime -> exponent
  bool contains_socle_power = false;           // soc(U)^d
  bool contains_alternating_power = false;     // A_m^d (only for U = S_m)
  bool is_full_kernel = false;                 // kernel == U^d
  bool contains_diag = false;                  // diag(<s>^d)
  bool contains_aug = false;                   // Aug(<s>^d)
  unsigned socle_module_rank = 0;              // dim kernel ∩ <s>^d
  std::optional<fp::DistinguishedSubmodule> socle_module_shape;
  std::optional<fp::DistinguishedSubmodule> sign_quotient_shape;  // U -> C_2
  std::string socle_description;
};
BlockKernelReport block_kernel_report(const ImprimitiveFrame& f);

// Number of maximal invariant partitions; >= 2 signals a group-level
// non-unique decomposition.
unsigned ritt_obstruction(const PermGroup& g);

// Is there a second block structure of transposed shape making the pair of
// cell actions a faithful product representation?
struct ProductEmbedding {
  bool embeds = false;
  BlockSystem witness_blocks;  // the transposed system, when found
};
ProductEmbedding direct_product_embedding(const ImprimitiveFrame& f);

// Case split for transitive G <= U wr V with U in {C_p, D_p} and V in
// {A_n, S_n}, n >= 4.
enum class SnTpCase {
  KernelPower,      // kernel contains C_p^{n-1}
  ProductEmbed,     // G embeds into U x V
  LinearTwo,        // n = 4, quotient is SL_2(3) or GL_2(3)
  NonsplitTriple,   // n = 6, G is a nonsplit extension 3.V
};
struct SnTpReport {
  SnTpCase which;
  std::string witness;
};
SnTpReport sntp_case(const ImprimitiveFrame& f, unsigned p);

// Closed-form order bounds for iterated wreath towers of dihedral blocks.
struct IteratedWreathBounds {
  mpz_class kernel_lower;   // p^(sum p^k) * 2^(p^(n-1))
  mpz_class ambient_order;  // (2p)^(sum p^k)
  double hausdorff_lower;   // 1 - log_p(2) / (p (1 + log_p 2))
};
IteratedWreathBounds iterated_wreath_bounds(unsigned p, unsigned n);

}  // namespace verikit::wreath
