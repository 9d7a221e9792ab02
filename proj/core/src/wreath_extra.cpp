#include "verikit/wreath_extra.hpp"

#include "verikit/errors.hpp"

namespace verikit::wreath {

namespace {

// coset exponent of h in U/U0 = <u1 U0> of order p
unsigned coset_dlog(const Permutation& h, const PermGroup& u0,
                    const Permutation& u1, unsigned p) {
  Permutation probe = h;
  for (unsigned k = 0; k < p; ++k) {
    if (u0.contains(probe)) return k;  // h in u1^k U0
    probe = u1.inverse() * probe;
  }
  throw Error("element not in the expected coset structure");
}


}  // namespace

PermGroup kernel_in_power(const ImprimitiveFrame& f, const PermGroup& u0) {
  const PermGroup& kernel = f.block_kernel();
  if (kernel.generators().empty()) return kernel;
  unsigned d = f.num_cells();
  // aux action: cell c contributes points (2c, 2c+1); a generator swaps them
  // iff its component at c lies outside u0
  std::vector<Permutation> aux;
  for (const auto& g : kernel.generators()) {
    std::vector<std::uint8_t> img(2 * d);
    for (unsigned c = 0; c < d; ++c) {
      bool inside = u0.contains(f.component(g, c));
      img[2 * c] = static_cast<std::uint8_t>(inside ? 2 * c : 2 * c + 1);
      img[2 * c + 1] = static_cast<std::uint8_t>(inside ? 2 * c + 1 : 2 * c);
    }
    aux.emplace_back(std::move(img));
  }
  return action_kernel(kernel, aux);
}

fp::FpSubmodule kernel_quotient_module(const ImprimitiveFrame& f,
                                       const PermGroup& sub,
                                       const PermGroup& u0, unsigned p) {
  unsigned d = f.num_cells();
  fp::FpSubmodule out(p, d);
  if (sub.generators().empty()) return out;
  // dlog generator: first component of `sub` outside u0 (its coset generates
  // the image subgroup of the prime-order quotient)
  std::optional<Permutation> u1_opt;
  for (const auto& g : sub.generators()) {
    for (unsigned c = 0; c < d && !u1_opt; ++c) {
      Permutation comp = f.component(g, c);
      if (!u0.contains(comp)) u1_opt = comp;
    }
    if (u1_opt) break;
  }
  if (!u1_opt) return out;  // image is trivial
  Permutation u1 = *u1_opt;
  for (const auto& g : sub.generators()) {
    std::vector<std::uint8_t> vec(d, 0);
    for (unsigned c = 0; c < d; ++c)
      vec[c] = static_cast<std::uint8_t>(
          coset_dlog(f.component(g, c), u0, u1, p));
    out.insert(fp::FpVector(p, vec));
  }
  return out;
}

PermGroup sign_quotient_group(const ImprimitiveFrame& f, const PermGroup& u0) {
  unsigned d = f.num_cells();
  std::vector<Permutation> gens;
  for (const auto& g : f.ambient().generators()) {
    Permutation cells = f.cells_action_of(g);
    std::vector<std::uint8_t> img(2 * d);
    for (unsigned c = 0; c < d; ++c) {
      unsigned target = cells[c];
      // component of g out of cell c: restriction composed with transport;
      // sign is whether the within-cell part lies outside u0.  Compute it
      // from g directly: map cell c points through g, read the induced model
      // permutation on the target cell.
      const auto& src = f.blocks().cell(c);
      const auto& dst = f.blocks().cell(target);
      std::vector<std::uint8_t> model(f.cell_size());
      for (unsigned i = 0; i < f.cell_size(); ++i) {
        unsigned y = g[src[i]];
        auto it = std::lower_bound(dst.begin(), dst.end(), y);
        model[i] = static_cast<std::uint8_t>(it - dst.begin());
      }
      bool inside = u0.contains(Permutation(std::move(model)));
      img[2 * c] = static_cast<std::uint8_t>(2 * target + (inside ? 0 : 1));
      img[2 * c + 1] = static_cast<std::uint8_t>(2 * target + (inside ? 1 : 0));
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(2 * d, gens);
}

}  // namespace verikit::wreath
