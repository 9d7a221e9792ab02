#include "verikit/closure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "verikit/errors.hpp"

namespace verikit::wreath {

WTable::WTable(unsigned p_, std::vector<Permutation> basis_)
    : p(p_), k(static_cast<unsigned>(basis_.size())), basis(std::move(basis_)) {
  if (basis.empty()) throw HypothesisViolated("W needs at least one generator");
  unsigned deg = basis[0].degree();
  for (const auto& b : basis) {
    if (b.power(p).is_identity() == false)
      throw HypothesisViolated("W basis element order is not p");
    for (const auto& c : basis)
      if (!(b * c == c * b))
        throw HypothesisViolated("W basis elements must commute");
  }
  // enumerate all p^k combinations
  std::vector<std::uint8_t> v(k, 0);
  while (true) {
    Permutation acc(deg);
    for (unsigned i = 0; i < k; ++i)
      if (v[i]) acc = acc * basis[i].power(v[i]);
    if (!dlog.emplace(acc, fp::FpVector(p, v)).second)
      throw HypothesisViolated("W basis is not independent");
    unsigned pos = 0;
    while (pos < k && ++v[pos] == p) {
      v[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
}

Permutation WTable::element_of(const fp::FpVector& v) const {
  Permutation acc(basis[0].degree());
  for (unsigned i = 0; i < k; ++i)
    if (v.c[i]) acc = acc * basis[i].power(v.c[i]);
  return acc;
}

fp::FpVector WTable::coords(const Permutation& w) const {
  auto it = dlog.find(w);
  if (it == dlog.end()) throw HypothesisViolated("element outside W");
  return it->second;
}

namespace {

using fp::FpSubmodule;
using fp::FpVector;

// Conjugation action of a model element on W, as a matrix on W-coordinates.
struct WAction {
  const WTable& table;
  std::vector<FpVector> columns;  // image of each basis vector

  WAction(const WTable& t, const Permutation& h) : table(t) {
    for (const auto& b : t.basis) {
      Permutation img = h.inverse() * b * h;
      columns.push_back(t.coords(img));  // throws if W is not normalized by h
    }
  }
  FpVector apply(const FpVector& v) const {
    FpVector out = FpVector::zero(table.p, table.k);
    for (unsigned i = 0; i < table.k; ++i)
      if (v.c[i]) out = out + columns[i].scaled(v.c[i]);
    return out;
  }
  bool fixes(const FpVector& v) const { return apply(v) == v; }
  bool trivial_on(const FpSubmodule& sub) const {
    for (const auto& row : sub.basis())
      if (!fixes(row)) return false;
    return true;
  }
  bool preserves(const FpSubmodule& sub) const {
    for (const auto& row : sub.basis())
      if (!sub.contains(apply(row))) return false;
    return true;
  }
};

// Per-cell projection of the kernel with ambient preimages: BFS over the
// image group tracking one kernel word per image element.
struct CellTransversal {
  std::vector<Permutation> images;     // model perms
  std::vector<Permutation> preimages;  // kernel elements

  CellTransversal(const ImprimitiveFrame& f, unsigned cell) {
    const PermGroup& kernel = f.block_kernel();
    std::map<Permutation, Permutation> seen;
    Permutation id_model(f.cell_size()), id_amb(f.ambient().degree());
    seen.emplace(id_model, id_amb);
    std::vector<Permutation> frontier{id_model};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& h : frontier)
        for (const auto& g : kernel.generators()) {
          Permutation img = f.component(g, cell) * h;
          if (!seen.count(img)) {
            seen.emplace(img, g * seen.at(h));
            next.push_back(img);
          }
        }
      frontier = std::move(next);
    }
    for (auto& [img, pre] : seen) {
      images.push_back(img);
      preimages.push_back(pre);
    }
  }

  // kernel element whose component at the cell equals h
  std::optional<Permutation> preimage_of(const Permutation& h) const {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] == h) return preimages[i];
    return std::nullopt;
  }
};

struct Engine {
  const ImprimitiveFrame& f;
  const ClosureInstance& inst;
  WTable table;
  unsigned d, k, i0;
  FpSubmodule diag_w;  // W ∩ scalar diagonal, for heart mode

  Engine(const ImprimitiveFrame& frame, const ClosureInstance& instance)
      : f(frame),
        inst(instance),
        table(instance.p, instance.w_basis),
        d(frame.num_cells()),
        k(static_cast<unsigned>(instance.w_basis.size())),
        i0(instance.focus_cell),
        diag_w(instance.p, static_cast<unsigned>(instance.w_basis.size())) {}

  FpVector component_coords(const Permutation& x, unsigned cell) const {
    return table.coords(f.component(x, cell));
  }

  bool in_w(const Permutation& model) const { return table.contains(model); }

  // support of x on the j-th piece: cells where the component's conjugation
  // action on W_j is nontrivial
  std::vector<unsigned> piece_support(const Permutation& x,
                                      const FpSubmodule& piece) const {
    std::vector<unsigned> cells;
    for (unsigned c = 0; c < d; ++c) {
      WAction act(table, f.component(x, c));
      if (!act.preserves(piece))
        throw HypothesisViolated("witness does not preserve the piece");
      if (!act.trivial_on(piece)) cells.push_back(c);
    }
    return cells;
  }

  // Is v (in W-coordinates) moved by the conjugation action of h, modulo the
  // diagonal in heart mode?
  bool moved_by(const FpVector& v, const Permutation& h, bool heart) const {
    WAction act(table, h);
    FpVector img = act.apply(v);
    if (heart) {
      FpVector delta = img - v;
      return !diag_w.contains(delta);
    }
    return !(img == v);
  }
};

}  // namespace

ClosureCertificate closure_lower_bound(const ImprimitiveFrame& frame,
                                       const ClosureInstance& inst) {
  Engine eng(frame, inst);
  const PermGroup& kernel = frame.block_kernel();
  unsigned d = eng.d, k = eng.k, i0 = eng.i0;
  unsigned p = inst.p;
  if (i0 >= d) throw HypothesisViolated("focus cell out of range");
  for (const auto& x : inst.witnesses)
    if (!kernel.contains(x))
      throw HypothesisViolated("witness not in the block kernel");

  // heart mode: the diagonal inside W (all-ones pattern across the natural
  // coordinates) expressed in W-coordinates, when it lies in W
  if (inst.mode.kind == ClosureMode::Heart) {
    // find diagonal-like elements: W elements fixed by every conjugation by
    // the per-cell projection group of the kernel
    CellTransversal trans(frame, i0);
    for (const auto& [w_perm, coords] : eng.table.dlog) {
      if (w_perm.is_identity()) continue;
      bool central = true;
      for (const auto& h : trans.images)
        if (!(h.inverse() * w_perm * h == w_perm)) {
          central = false;
          break;
        }
      if (central) eng.diag_w.insert(coords);
    }
  }

  ClosureCertificate cert;
  cert.certified = FpSubmodule(p, k * d);
  std::ostringstream detail;

  auto cell_major = [&](const FpVector& wcoords, unsigned cell) {
    std::vector<std::uint8_t> v(k * d, 0);
    for (unsigned b = 0; b < k; ++b) v[cell * k + b] = wcoords.c[b];
    return FpVector(p, v);
  };

  auto add_delta_element = [&](const Permutation& z) {
    // verify: kernel membership and components inside W
    if (!kernel.contains(z))
      throw Error("certified element failed kernel membership");
    std::vector<std::uint8_t> v(k * d, 0);
    for (unsigned c = 0; c < d; ++c) {
      FpVector coords = eng.component_coords(z, c);  // throws outside W
      for (unsigned b = 0; b < k; ++b) v[c * k + b] = coords.c[b];
    }
    if (cert.certified.insert(FpVector(p, v))) cert.elements.push_back(z);
  };

  CellTransversal focus_trans(frame, i0);

  if (inst.mode.kind == ClosureMode::Indecomposable) {
    // descending chain W_1 = [W, U'], W_2 = [W_1, U']: U'-module spans of
    // commutators
    auto commutator_module = [&](const FpSubmodule& sub) {
      FpSubmodule out(p, k);
      for (const auto& row : sub.basis())
        for (const auto& h : focus_trans.images) {
          WAction act(eng.table, h);
          out.insert(act.apply(row) - row);
        }
      // close under the action
      bool grew = true;
      while (grew) {
        grew = false;
        for (const auto& row : out.basis())
          for (const auto& h : focus_trans.images) {
            WAction act(eng.table, h);
            if (out.insert(act.apply(row))) grew = true;
          }
      }
      return out;
    };
    FpSubmodule w_full = FpSubmodule::full(p, k);
    FpSubmodule w1 = commutator_module(w_full);
    FpSubmodule w2 = commutator_module(w1);
    detail << "chain dims " << k << " > " << w1.dim() << " >= " << w2.dim()
           << "; ";

    // Delta elements from single and double commutators of kernel elements
    // whose focus component is known; only verified landings count.
    auto try_add = [&](const Permutation& zz) {
      if (zz.is_identity()) return;
      for (unsigned c = 0; c < d; ++c)
        if (!eng.in_w(frame.component(zz, c))) return;
      add_delta_element(zz);
    };
    for (const auto& [w_perm, coords] : eng.table.dlog) {
      if (w_perm.is_identity()) continue;
      auto z = focus_trans.preimage_of(w_perm);
      if (!z) continue;
      for (const auto& x : focus_trans.preimages) {
        Permutation once = commutator(*z, x);
        try_add(once);
        for (const auto& y : focus_trans.preimages)
          try_add(commutator(once, y));
      }
    }
    for (const auto& x : focus_trans.preimages)
      for (const auto& y : focus_trans.preimages) try_add(commutator(x, y));
    // close under kernel and ambient conjugation
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Permutation> snapshot = cert.elements;
      for (const auto& e : snapshot) {
        for (const auto& g : frame.ambient().generators()) {
          unsigned before = cert.certified.dim();
          try_add(conjugate(e, g));
          if (cert.certified.dim() > before) grew = true;
        }
        for (const auto& t : focus_trans.preimages) {
          unsigned before = cert.certified.dim();
          try_add(conjugate(e, t));
          if (cert.certified.dim() > before) grew = true;
        }
      }
    }
    // verify W_2^d is covered (the part 1 conclusion)
    for (unsigned c = 0; c < d; ++c)
      for (const auto& row : w2.basis())
        if (!cert.certified.contains(cell_major(row, c)))
          throw Error("indecomposable engine failed to certify the chain power");
    detail << "chain-square power certified; ";
    cert.detail = detail.str();
    return cert;
  }

  // Semisimple / Heart: per piece with equality of support intersections
  bool heart = inst.mode.kind == ClosureMode::Heart;
  std::vector<FpSubmodule> pieces = inst.decomposition;
  if (pieces.empty()) pieces.push_back(FpSubmodule::full(p, k));

  // hypothesis: intersection of witness piece-supports within {focus}
  std::vector<unsigned> equality_pieces;
  for (unsigned j = 0; j < pieces.size(); ++j) {
    std::set<unsigned> inter;
    bool first = true;
    for (const auto& x : inst.witnesses) {
      auto sup = eng.piece_support(x, pieces[j]);
      std::set<unsigned> s(sup.begin(), sup.end());
      if (first) {
        inter = s;
        first = false;
      } else {
        std::set<unsigned> tmp;
        std::set_intersection(inter.begin(), inter.end(), s.begin(), s.end(),
                              std::inserter(tmp, tmp.begin()));
        inter = tmp;
      }
    }
    if (inter.size() > 1 || (inter.size() == 1 && !inter.count(i0)))
      throw HypothesisViolated("witness supports do not meet inside the focus");
    if (inter.size() == 1) equality_pieces.push_back(j);
  }
  if (equality_pieces.empty())
    detail << "no piece with equality; certificate is empty; ";

  for (unsigned j : equality_pieces) {
    const FpSubmodule& piece = pieces[j];
    // start: z in Gamma with focus component a nonzero element of the piece
    std::optional<Permutation> z;
    for (const auto& row : piece.basis()) {
      auto pre = focus_trans.preimage_of(eng.table.element_of(row));
      if (pre) {
        z = pre;
        break;
      }
    }
    if (!z)
      throw HypothesisViolated(
          "kernel does not project onto the piece at the focus cell");

    auto conjugate_until_moved = [&](const Permutation& cur,
                                     const Permutation& u) {
      // find a kernel conjugate whose focus component stays in the piece and
      // is moved by u (modulo the diagonal in heart mode)
      for (const auto& t : focus_trans.preimages) {
        Permutation cand = conjugate(cur, t);
        Permutation comp = frame.component(cand, i0);
        if (!eng.in_w(comp)) continue;
        FpVector coords = eng.table.coords(comp);
        if (coords.is_zero() || !piece.contains(coords)) continue;
        if (eng.moved_by(coords, u, heart)) return cand;
      }
      throw Error("no suitable conjugate found (irreducibility failure?)");
    };

    // Claim 1: empty all piece supports away from the focus cell
    Permutation cur = *z;
    for (const auto& x : inst.witnesses) {
      Permutation u = frame.component(x, i0);
      Permutation moved = conjugate_until_moved(cur, u);
      cur = commutator(moved, x);
      Permutation comp = frame.component(cur, i0);
      if (!eng.in_w(comp) || eng.table.coords(comp).is_zero())
        throw Error("commutator lost the focus component");
    }
    // now all components act trivially on every piece: cur should be in Delta
    for (unsigned c = 0; c < d; ++c)
      if (!eng.in_w(frame.component(cur, c)))
        throw Error("claim-1 element is not inside the abelian layer");

    // Claim 2: empty the W-support away from the focus cell
    for (const auto& x : inst.witnesses) {
      Permutation u = frame.component(x, i0);
      Permutation moved = conjugate_until_moved(cur, u);
      cur = commutator(moved, x);
    }
    std::vector<unsigned> sup;
    for (unsigned c = 0; c < d; ++c)
      if (!frame.component(cur, c).is_identity()) sup.push_back(c);
    if (sup != std::vector<unsigned>{i0})
      throw Error("claim-2 element is not supported on the focus cell alone");
    add_delta_element(cur);

    // conjugate by kernel transversal to span the piece at the focus cell
    for (const auto& t : focus_trans.preimages) {
      Permutation cand = conjugate(cur, t);
      bool in_delta = true;
      for (unsigned c = 0; c < d && in_delta; ++c)
        if (!eng.in_w(frame.component(cand, c))) in_delta = false;
      if (in_delta) add_delta_element(cand);
    }
    cert.full_power_indices.push_back(j);
  }

  // translate across cells with ambient conjugation until stable
  {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Permutation> snapshot = cert.elements;
      for (const auto& g : frame.ambient().generators())
        for (const auto& e : snapshot) {
          Permutation movedelt = conjugate(e, g);
          bool in_delta = true;
          for (unsigned c = 0; c < d && in_delta; ++c)
            if (!eng.in_w(frame.component(movedelt, c))) in_delta = false;
          if (in_delta) {
            unsigned before = cert.certified.dim();
            add_delta_element(movedelt);
            if (cert.certified.dim() > before) grew = true;
          }
        }
    }
  }

  // final check: for every equality piece, W_j^d is certified (heart mode:
  // modulo nothing extra; the diagonal handling only affects the search)
  for (unsigned j : cert.full_power_indices) {
    for (unsigned c = 0; c < d; ++c)
      for (const auto& row : pieces[j].basis()) {
        Permutation w = eng.table.element_of(row);
        Permutation emb = frame.embed(w, c);
        if (!kernel.contains(emb))
          throw Error("piece power verification failed at a cell");
        add_delta_element(emb);
      }
  }
  detail << "pieces certified: " << cert.full_power_indices.size() << "/"
         << pieces.size();
  cert.detail = detail.str();
  return cert;
}

}  // namespace verikit::wreath
