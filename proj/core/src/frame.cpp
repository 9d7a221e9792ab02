#include "verikit/frame.hpp"

#include <algorithm>
#include <cmath>

#include "verikit/errors.hpp"
#include "verikit/fingerprint.hpp"
#include "verikit/groups_std.hpp"

namespace verikit::wreath {

namespace {

PermGroup cells_image_group(const PermGroup& ambient,
                            const BlockSystem& blocks) {
  std::vector<Permutation> gens;
  for (const auto& g : ambient.generators())
    gens.push_back(blocks.cells_action(g));
  return PermGroup(blocks.num_cells(), gens);
}

}  // namespace

ImprimitiveFrame::ImprimitiveFrame(PermGroup ambient, BlockSystem blocks)
    : ambient_(std::move(ambient)), blocks_(std::move(blocks)) {
  if (blocks_.degree() != ambient_.degree())
    throw InvalidFrame("block system degree mismatch");
  for (const auto& g : ambient_.generators())
    if (!blocks_.invariant_under(g))
      throw InvalidFrame("blocks not invariant under the group");
  v_image_ = cells_image_group(ambient_, blocks_);

  // Block stabilizer of cell 0 restricted to that cell: Schreier generators
  // of the cells-action point stabilizer, restricted.
  unsigned d = blocks_.num_cells();
  std::vector<int> where(d, -1);
  std::vector<unsigned> orbit{0};
  std::vector<Permutation> transversal{Permutation(ambient_.degree())};
  where[0] = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : ambient_.generators()) {
      unsigned img = blocks_.cell_of(g[blocks_.cell(orbit[i])[0]]);
      if (where[img] < 0) {
        where[img] = static_cast<int>(orbit.size());
        orbit.push_back(img);
        transversal.push_back(g * transversal[i]);
      }
    }
  std::vector<Permutation> u_gens;
  unsigned m = blocks_.cell_size();
  auto restrict_to_cell0 = [&](const Permutation& g) {
    std::vector<std::uint8_t> img(m);
    const auto& cell = blocks_.cell(0);
    for (unsigned i = 0; i < m; ++i) {
      unsigned target = g[cell[i]];
      auto it = std::lower_bound(cell.begin(), cell.end(), target);
      if (it == cell.end() || *it != target)
        throw InvalidFrame("element does not stabilize cell 0");
      img[i] = static_cast<std::uint8_t>(it - cell.begin());
    }
    return Permutation(std::move(img));
  };
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : ambient_.generators()) {
      unsigned img = blocks_.cell_of(g[blocks_.cell(orbit[i])[0]]);
      Permutation schreier = transversal[where[img]].inverse() * g *
                             transversal[i];
      if (blocks_.cell_of(schreier[blocks_.cell(0)[0]]) != 0)
        throw InvalidFrame("schreier element moved cell 0");
      Permutation r = restrict_to_cell0(schreier);
      if (!r.is_identity()) u_gens.push_back(std::move(r));
    }
  u_model_ = PermGroup(m, u_gens);

  std::vector<Permutation> aux;
  for (const auto& g : ambient_.generators())
    aux.push_back(blocks_.cells_action(g));
  kernel_ = action_kernel(ambient_, aux);
  if (kernel_.order() * v_image_.order() != ambient_.order())
    throw InvalidFrame("kernel order does not match the projection");
}

ImprimitiveFrame ImprimitiveFrame::detect(PermGroup ambient,
                                          unsigned cell_size) {
  std::vector<BlockSystem> hits;
  for (const auto& bs : all_block_systems(ambient))
    if (bs.cell_size() == cell_size) hits.push_back(bs);
  if (hits.empty()) throw InvalidFrame("no block system with that cell size");
  if (hits.size() > 1)
    throw InvalidFrame("block system of that cell size is not unique");
  return ImprimitiveFrame(std::move(ambient), hits[0]);
}

Permutation ImprimitiveFrame::cells_action_of(const Permutation& g) const {
  return blocks_.cells_action(g);
}

Permutation ImprimitiveFrame::component(const Permutation& g,
                                        unsigned cell) const {
  unsigned m = cell_size();
  const auto& c = blocks_.cell(cell);
  std::vector<std::uint8_t> img(m);
  for (unsigned i = 0; i < m; ++i) {
    unsigned target = g[c[i]];
    auto it = std::lower_bound(c.begin(), c.end(), target);
    if (it == c.end() || *it != target)
      throw NotInKernel("element does not stabilize the cell");
    img[i] = static_cast<std::uint8_t>(it - c.begin());
  }
  return Permutation(std::move(img));
}

Permutation ImprimitiveFrame::embed(const Permutation& u,
                                    unsigned cell) const {
  std::vector<std::uint8_t> img(ambient_.degree());
  for (unsigned x = 0; x < ambient_.degree(); ++x)
    img[x] = static_cast<std::uint8_t>(x);
  const auto& c = blocks_.cell(cell);
  for (unsigned i = 0; i < cell_size(); ++i)
    img[c[i]] = static_cast<std::uint8_t>(c[u[i]]);
  return Permutation(std::move(img));
}

std::vector<unsigned> support(const ImprimitiveFrame& f,
                              const Permutation& x) {
  if (!f.block_kernel().contains(x))
    throw NotInKernel("support is defined for kernel elements");
  std::vector<unsigned> out;
  for (unsigned cell = 0; cell < f.num_cells(); ++cell)
    if (!f.component(x, cell).is_identity()) out.push_back(cell);
  return out;
}

fp::FpSubmodule kernel_socle_submodule(const ImprimitiveFrame& f,
                                       const Permutation& s, unsigned p) {
  if (s.degree() != f.cell_size())
    throw DimensionMismatch("model element degree mismatch");
  unsigned d = f.num_cells();
  fp::FpSubmodule found(p, d);
  // Walk F_p^d in lex order; skip vectors already spanned.
  std::vector<std::uint8_t> v(d, 0);
  auto element_of = [&](const std::vector<std::uint8_t>& vec) {
    Permutation acc(f.ambient().degree());
    for (unsigned cell = 0; cell < d; ++cell)
      if (vec[cell]) acc = acc * f.embed(s.power(vec[cell]), cell);
    return acc;
  };
  while (true) {
    fp::FpVector cand(p, v);
    if (!cand.is_zero() && !found.contains(cand)) {
      if (f.block_kernel().contains(element_of(v))) found.insert(cand);
    }
    // increment
    unsigned pos = 0;
    while (pos < d && ++v[pos] == p) {
      v[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
    if (found.dim() == d) break;
  }
  return found;
}

LargeKernelReport large_kernel(const ImprimitiveFrame& f,
                               const PermGroup& socle_u) {
  LargeKernelReport rep;
  const PermGroup& kernel = f.block_kernel();
  rep.socle_power_contained = true;
  for (unsigned cell = 0; cell < f.num_cells() && rep.socle_power_contained;
       ++cell)
    for (const auto& s : socle_u.generators())
      if (!kernel.contains(f.embed(s, cell))) {
        rep.socle_power_contained = false;
        break;
      }
  if (rep.socle_power_contained) {
    rep.large = true;
    rep.reason = "socle power contained in the kernel";
    return rep;
  }
  // cyclic socle: a rank d-1 sub-socle suffices
  unsigned long long so = socle_u.order();
  bool prime = so > 1;
  for (unsigned long long t = 2; t * t <= so; ++t)
    if (so % t == 0) prime = false;
  std::vector<Permutation> nontrivial;
  for (const auto& g : socle_u.generators())
    if (!g.is_identity()) nontrivial.push_back(g);
  if (prime && nontrivial.size() >= 1 &&
      PermGroup(socle_u.degree(), {nontrivial[0]}).order() == so) {
    rep.socle_cyclic = true;
    unsigned p = static_cast<unsigned>(so);
    auto module = kernel_socle_submodule(f, nontrivial[0], p);
    rep.socle_rank_in_kernel = module.dim();
    if (module.dim() + 1 >= f.num_cells()) {
      rep.large = true;
      rep.reason = "cyclic socle with corank <= 1 kernel module";
      return rep;
    }
  }
  rep.reason = "no qualifying containment";
  return rep;
}

BlockKernelReport block_kernel_report(const ImprimitiveFrame& f) {
  BlockKernelReport rep;
  const PermGroup& kernel = f.block_kernel();
  rep.gamma_order = kernel.order();
  unsigned long long rest = rep.gamma_order;
  for (unsigned q = 2; q <= rest; ++q) {
    while (rest % q == 0) {
      ++rep.p_part_orders[q];
      rest /= q;
    }
  }
  unsigned d = f.num_cells();

  PermGroup socle = socle_small(f.cell_action());
  rep.socle_description = fingerprint(socle).canonical_string();
  rep.contains_socle_power = true;
  for (unsigned cell = 0; cell < d && rep.contains_socle_power; ++cell)
    for (const auto& s : socle.generators())
      if (!kernel.contains(f.embed(s, cell))) {
        rep.contains_socle_power = false;
        break;
      }

  // U = S_m: also check A_m^d
  unsigned m = f.cell_size();
  if (f.cell_action().order() >= 2) {
    PermGroup alt = groups::alternating(m);
    if (m >= 3 && alt.is_subgroup_of(f.cell_action())) {
      rep.contains_alternating_power = true;
      for (unsigned cell = 0; cell < d && rep.contains_alternating_power;
           ++cell)
        for (const auto& s : alt.generators())
          if (!kernel.contains(f.embed(s, cell)))
            rep.contains_alternating_power = false;
    }
  }

  // full kernel?
  {
    mpz_class full = 1;
    for (unsigned i = 0; i < d; ++i)
      full *= mpz_class(static_cast<unsigned long>(f.cell_action().order()));
    rep.is_full_kernel =
        full.fits_ulong_p() && rep.gamma_order == full.get_ui();
  }

  // elementary-abelian socle module analysis
  if (socle.order() > 1) {
    unsigned long long so = socle.order();
    bool prime = true;
    for (unsigned long long t = 2; t * t <= so; ++t)
      if (so % t == 0) prime = false;
    if (prime) {
      unsigned p = static_cast<unsigned>(so);
      Permutation s = socle.generators()[0];
      auto module = kernel_socle_submodule(f, s, p);
      rep.socle_module_rank = module.dim();
      rep.socle_module_shape = fp::classify_submodule(module);
      rep.contains_diag =
          module.contains(fp::FpVector(p, std::vector<std::uint8_t>(d, 1)));
      rep.contains_aug = module.contains(
          fp::make_distinguished(p, d, fp::SubmoduleKind::Aug));
    }
  }

  // sign quotient when the cell action has odd elements (U -> C_2)
  {
    bool has_odd = false;
    for (const auto& g : f.cell_action().generators())
      if (perm_index(g) % 2) has_odd = true;
    if (has_odd && kernel.order() > 1) {
      fp::FpSubmodule sign_mod(2, d);
      for (const auto& g : kernel.generators()) {
        std::vector<std::uint8_t> vec(d, 0);
        for (unsigned cell = 0; cell < d; ++cell)
          vec[cell] = static_cast<std::uint8_t>(
              perm_index(f.component(g, cell)) % 2);
        sign_mod.insert(fp::FpVector(2, vec));
      }
      rep.sign_quotient_shape = fp::classify_submodule(sign_mod);
    }
  }
  return rep;
}

unsigned ritt_obstruction(const PermGroup& g) {
  return static_cast<unsigned>(maximal_block_systems(g).size());
}

ProductEmbedding direct_product_embedding(const ImprimitiveFrame& f) {
  ProductEmbedding out;
  unsigned m = f.cell_size(), d = f.num_cells();
  for (const auto& bs : all_block_systems(f.ambient())) {
    if (bs.cell_size() != d || bs.num_cells() != m) continue;
    // combined action on cells of both systems: injective iff the kernels
    // intersect trivially, checked through the order of the image
    std::vector<Permutation> combined;
    for (const auto& g : f.ambient().generators()) {
      Permutation a = f.blocks().cells_action(g);   // on d points
      Permutation b = bs.cells_action(g);           // on m points
      std::vector<std::uint8_t> img(d + m);
      for (unsigned x = 0; x < d; ++x) img[x] = static_cast<std::uint8_t>(a[x]);
      for (unsigned x = 0; x < m; ++x)
        img[d + x] = static_cast<std::uint8_t>(d + b[x]);
      combined.emplace_back(std::move(img));
    }
    PermGroup image(d + m, combined);
    if (image.order() == f.ambient().order()) {
      out.embeds = true;
      out.witness_blocks = bs;
      return out;
    }
  }
  return out;
}

SnTpReport sntp_case(const ImprimitiveFrame& f, unsigned p) {
  unsigned n = f.num_cells();
  if (n < 4) throw HypothesisViolated("needs at least 4 cells");
  // i) kernel contains C_p^{n-1}?
  PermGroup socle = socle_small(f.cell_action());
  if (socle.order() == p) {
    auto module = kernel_socle_submodule(f, socle.generators()[0], p);
    if (module.dim() >= n - 1)
      return {SnTpCase::KernelPower, "socle module rank " +
                                         std::to_string(module.dim())};
  }
  // ii) product embedding?
  auto dp = direct_product_embedding(f);
  if (dp.embeds) return {SnTpCase::ProductEmbed, "transposed block system"};
  // iii) / iv): identified through order and invariants
  unsigned long long q_order;
  {
    // order of G / (kernel ∩ C_p^n)
    auto module = socle.order() == p
                      ? kernel_socle_submodule(f, socle.generators()[0], p)
                      : fp::FpSubmodule(p, n);
    unsigned long long sub = 1;
    for (unsigned i = 0; i < module.dim(); ++i) sub *= p;
    q_order = f.ambient().order() / sub;
  }
  if (n == 4 && (q_order == 24 || q_order == 48)) {
    return {SnTpCase::LinearTwo, "quotient order " + std::to_string(q_order)};
  }
  if (n == 6 && f.ambient().order() % 3 == 0) {
    return {SnTpCase::NonsplitTriple,
            "order " + std::to_string(f.ambient().order())};
  }
  throw HypothesisViolated("no case of the classification matched");
}

IteratedWreathBounds iterated_wreath_bounds(unsigned p, unsigned n) {
  if (p < 3 || n < 1) throw HypothesisViolated("needs odd prime p and n >= 1");
  IteratedWreathBounds out;
  mpz_class exponent = 0, pk = 1;
  for (unsigned k = 0; k < n; ++k) {
    exponent += pk;
    pk *= p;
  }
  mpz_class pn1 = 1;
  for (unsigned k = 0; k + 1 < n; ++k) pn1 *= p;
  // kernel_lower = p^exponent * 2^{p^{n-1}}
  mpz_pow_ui(out.kernel_lower.get_mpz_t(), mpz_class(p).get_mpz_t(),
             exponent.get_ui());
  mpz_class two_part;
  mpz_pow_ui(two_part.get_mpz_t(), mpz_class(2).get_mpz_t(), pn1.get_ui());
  out.kernel_lower *= two_part;
  mpz_pow_ui(out.ambient_order.get_mpz_t(), mpz_class(2 * p).get_mpz_t(),
             exponent.get_ui());
  double logp2 = std::log(2.0) / std::log(static_cast<double>(p));
  out.hausdorff_lower = 1.0 - logp2 / (p * (1.0 + logp2));
  return out;
}

}  // namespace verikit::wreath
