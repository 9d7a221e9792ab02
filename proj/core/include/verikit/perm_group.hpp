#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "verikit/perm.hpp"

namespace verikit {

// Partition of {0..degree-1} into equal-size cells, each generator mapping
// cells to cells.  Cells are kept sorted internally and ordered by minimum
// point, which fixes the canonical cell numbering used everywhere else.
class BlockSystem {
 public:
  BlockSystem() = default;
  BlockSystem(unsigned degree, std::vector<std::vector<unsigned>> cells);

  unsigned degree() const { return degree_; }
  unsigned num_cells() const { return static_cast<unsigned>(cells_.size()); }
  unsigned cell_size() const {
    return cells_.empty() ? 0 : static_cast<unsigned>(cells_[0].size());
  }
  const std::vector<unsigned>& cell(unsigned i) const { return cells_[i]; }
  const std::vector<std::vector<unsigned>>& cells() const { return cells_; }
  unsigned cell_of(unsigned point) const { return cell_of_[point]; }

  bool is_trivial() const {
    return num_cells() == 1 || cell_size() == 1;
  }
  bool invariant_under(const Permutation& g) const;
  // Image of a generator on cell indices.
  Permutation cells_action(const Permutation& g) const;
  // True if every cell of *this is contained in a cell of coarser.
  bool refines(const BlockSystem& coarser) const;

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) {
    return a.cells_ == b.cells_;
  }
  friend bool operator<(const BlockSystem& a, const BlockSystem& b) {
    return a.cells_ < b.cells_;
  }

 private:
  unsigned degree_ = 0;
  std::vector<std::vector<unsigned>> cells_;
  std::vector<unsigned> cell_of_;
};

struct StabilizerLevel {
  unsigned base_point = 0;
  std::vector<Permutation> gens;          // generators of this stabilizer
  std::vector<unsigned> orbit;            // discovery (BFS) order
  std::vector<int> where;                 // point -> index in orbit, -1 if out
  std::vector<Permutation> transversal;   // u with base^u = orbit[k]
};

// Exact permutation group of degree <= 64 with a deterministic stabilizer
// chain: fixed base-selection rule, BFS orbit order, so orders, membership
// and element enumeration are reproducible across runs and thread counts.
// Immutable after construction.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(unsigned degree, std::vector<Permutation> generators);
  static PermGroup trivial(unsigned degree);

  unsigned degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<StabilizerLevel>& chain() const { return chain_; }

  unsigned long long order() const { return order_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  std::vector<std::vector<unsigned>> orbits() const;
  bool is_transitive() const;

  // Enumerates elements in a fixed order; stops early if fn returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const;
  std::vector<Permutation> elements(unsigned long long max_order = 2000000) const;

  Permutation transversal_element(unsigned level, unsigned point) const;

 private:
  void build();
  bool strip(const Permutation& g, unsigned from_level, Permutation* residue,
             unsigned* drop_level) const;
  void extend_level(unsigned level, const Permutation& g);
  void recompute_orbit(unsigned level);

  unsigned degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<StabilizerLevel> chain_;
  unsigned long long order_ = 1;
};

// ---- group-level operations ----

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);
std::vector<BlockSystem> all_block_systems(const PermGroup& g);
std::vector<BlockSystem> maximal_block_systems(const PermGroup& g);
bool is_primitive(const PermGroup& g);

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s);
PermGroup derived_subgroup(const PermGroup& g);

// Subgroup generated by all minimal normal subgroups, found as normal
// closures of prime-order class representatives, minimized by containment.
PermGroup socle_small(const PermGroup& g,
                      unsigned long long order_bound = 1000000);

enum class SplitResult { Split, NonSplit, Unknown };
struct SplitCertificate {
  SplitResult result = SplitResult::Unknown;
  std::vector<Permutation> complement_gens;  // witness when Split
};
SplitCertificate is_split_extension(const PermGroup& g, const PermGroup& n,
                                    unsigned long long budget = 1000000);

// Conjugacy classes by conjugation-orbit BFS; capped at order <= 10^6.
std::vector<Permutation> conjugacy_class_reps(
    const PermGroup& g, unsigned long long order_bound = 1000000);
std::vector<Permutation> conjugacy_class(const PermGroup& g,
                                         const Permutation& x);

// Kernel of the action described by aux_images: aux_images[i] is the
// (right-to-left composing) permutation induced by generators()[i] on an
// auxiliary point set.  Generators of the kernel come from a deterministic
// Schreier-generator sweep over a chain that fixes the auxiliary points
// first.
PermGroup action_kernel(const PermGroup& g,
                        const std::vector<Permutation>& aux_images);

// Smallest block system in which `seed` points share a cell (Atkinson merge).
BlockSystem minimal_block_system_containing(const PermGroup& g,
                                            const std::vector<unsigned>& seed);

}  // namespace verikit
