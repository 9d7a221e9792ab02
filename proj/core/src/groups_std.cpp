#include "verikit/groups_std.hpp"

#include <array>
#include <numeric>

#include "verikit/errors.hpp"

namespace verikit::groups {

PermGroup cyclic(unsigned n) {
  std::vector<unsigned> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return PermGroup(n, {Permutation::cycle(n, pts)});
}

PermGroup symmetric(unsigned n) {
  if (n < 2) return PermGroup::trivial(n);
  std::vector<unsigned> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return PermGroup(n, {Permutation::cycle(n, pts),
                       Permutation::cycle(n, {0, 1})});
}

PermGroup alternating(unsigned n) {
  if (n < 3) return PermGroup::trivial(n);
  std::vector<Permutation> gens{Permutation::cycle(n, {0, 1, 2})};
  if (n > 3) {
    std::vector<unsigned> pts;
    if (n % 2 == 1) {
      for (unsigned i = 0; i < n; ++i) pts.push_back(i);
    } else {
      for (unsigned i = 1; i < n; ++i) pts.push_back(i);
    }
    gens.push_back(Permutation::cycle(n, pts));
  }
  return PermGroup(n, gens);
}

PermGroup dihedral(unsigned p) {
  if (p < 3) throw Error("dihedral groups here have degree >= 3");
  std::vector<unsigned> pts(p);
  std::iota(pts.begin(), pts.end(), 0);
  std::vector<std::uint8_t> refl(p);
  for (unsigned i = 0; i < p; ++i) refl[i] = static_cast<std::uint8_t>((p - i) % p);
  return PermGroup(p, {Permutation::cycle(p, pts), Permutation(std::move(refl))});
}

PermGroup agl1(unsigned p) {
  std::vector<unsigned> pts(p);
  std::iota(pts.begin(), pts.end(), 0);
  // x -> x + 1 and x -> g*x for a primitive root g mod p
  unsigned g = 0;
  for (unsigned cand = 2; cand < p; ++cand) {
    unsigned x = 1, ord = 0;
    do {
      x = (x * cand) % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) {
      g = cand;
      break;
    }
  }
  std::vector<Permutation> gens{Permutation::cycle(p, pts)};
  if (g) {
    std::vector<std::uint8_t> mul(p);
    for (unsigned i = 0; i < p; ++i) mul[i] = static_cast<std::uint8_t>((i * g) % p);
    gens.emplace_back(std::move(mul));
  }
  return PermGroup(p, gens);
}

namespace {

// Projective plane over F_q for q in {2,3}: points are the normalized
// nonzero column triples; matrices act on the left.
struct ProjPlane {
  unsigned q;
  std::vector<std::array<unsigned, 3>> points;

  explicit ProjPlane(unsigned q_) : q(q_) {
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        for (unsigned c = 0; c < q; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          std::array<unsigned, 3> v{a, b, c};
          if (normalized(v) == v) points.push_back(v);
        }
  }

  std::array<unsigned, 3> normalized(std::array<unsigned, 3> v) const {
    unsigned lead = v[0] ? v[0] : (v[1] ? v[1] : v[2]);
    // scale so the first nonzero entry is 1
    unsigned inv = 1;
    for (unsigned t = 1; t < q; ++t)
      if ((t * lead) % q == 1) inv = t;
    for (auto& x : v) x = (x * inv) % q;
    return v;
  }

  Permutation act(const std::array<std::array<unsigned, 3>, 3>& m) const {
    std::vector<std::uint8_t> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::array<unsigned, 3> w{0, 0, 0};
      for (unsigned r = 0; r < 3; ++r)
        for (unsigned c = 0; c < 3; ++c)
          w[r] = (w[r] + m[r][c] * points[i][c]) % q;
      w = normalized(w);
      auto it = std::find(points.begin(), points.end(), w);
      img[i] = static_cast<std::uint8_t>(it - points.begin());
    }
    return Permutation(std::move(img));
  }
};

}  // namespace

PermGroup psl32() {
  ProjPlane plane(2);
  std::array<std::array<unsigned, 3>, 3> a{{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}};
  std::array<std::array<unsigned, 3>, 3> b{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  return PermGroup(7, {plane.act(a), plane.act(b)});
}

PermGroup psl33() {
  ProjPlane plane(3);
  std::array<std::array<unsigned, 3>, 3> a{{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}};
  std::array<std::array<unsigned, 3>, 3> b{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  return PermGroup(13, {plane.act(a), plane.act(b)});
}

namespace {

// P^1(F_q) for prime q, and for q = 9 via F_3[i]/(i^2+1).
// Point order: infinity last.
struct ProjLine {
  unsigned q;
  bool ext;  // q = 9

  unsigned add(unsigned a, unsigned b) const {
    if (!ext) return (a + b) % q;
    unsigned a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
    return (a0 + b0) % 3 + 3 * ((a1 + b1) % 3);
  }
  unsigned mul(unsigned a, unsigned b) const {
    if (!ext) return (a * b) % q;
    unsigned a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
    // (a0 + a1 i)(b0 + b1 i), i^2 = -1
    unsigned re = (a0 * b0 + 2 * (a1 * b1)) % 3;
    unsigned im = (a0 * b1 + a1 * b0) % 3;
    return re + 3 * im;
  }
  unsigned inv(unsigned a) const {
    for (unsigned t = 1; t < q; ++t)
      if (mul(a, t) == 1) return t;
    throw Error("not invertible");
  }
  unsigned frob(unsigned a) const { return ext ? mul(a, mul(a, a)) : a; }

  unsigned npoints() const { return q + 1; }  // q affine + infinity

  Permutation moebius(unsigned a, unsigned b, unsigned c, unsigned d) const {
    // x -> (a x + b) / (c x + d)
    std::vector<std::uint8_t> img(npoints());
    unsigned inf = q;
    for (unsigned x = 0; x < q; ++x) {
      unsigned num = add(mul(a, x), b), den = add(mul(c, x), d);
      img[x] = den == 0 ? static_cast<std::uint8_t>(inf)
                        : static_cast<std::uint8_t>(mul(num, inv(den)));
    }
    img[inf] = c == 0 ? static_cast<std::uint8_t>(inf)
                      : static_cast<std::uint8_t>(mul(a, inv(c)));
    return Permutation(std::move(img));
  }

  Permutation frobenius() const {
    std::vector<std::uint8_t> img(npoints());
    for (unsigned x = 0; x < q; ++x) img[x] = static_cast<std::uint8_t>(frob(x));
    img[q] = static_cast<std::uint8_t>(q);
    return Permutation(std::move(img));
  }

  unsigned generator() const {
    for (unsigned g = 2; g < q; ++g) {
      unsigned x = 1, ord = 0;
      do {
        x = mul(x, g);
        ++ord;
      } while (x != 1);
      if (ord == q - 1) return g;
    }
    throw Error("no multiplicative generator");
  }
};

}  // namespace

PermGroup pgl2(unsigned q) {
  if (q != 5 && q != 7 && q != 9) throw Error("pgl2 supports q in {5,7,9}");
  ProjLine line{q, q == 9};
  unsigned g = line.generator();
  std::vector<Permutation> gens{line.moebius(1, 1, 0, 1),
                                line.moebius(g, 0, 0, 1),
                                line.moebius(0, 1, 1, 0)};
  return PermGroup(line.npoints(), gens);
}

PermGroup pgammal29() {
  ProjLine line{9, true};
  unsigned g = line.generator();
  std::vector<Permutation> gens{line.moebius(1, 1, 0, 1),
                                line.moebius(g, 0, 0, 1),
                                line.moebius(0, 1, 1, 0), line.frobenius()};
  return PermGroup(10, gens);
}

PermGroup mathieu11() {
  Permutation a =
      Permutation::from_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11);
  Permutation b = Permutation::from_cycles("(3,7,11,8)(4,10,5,6)", 11);
  return PermGroup(11, {a, b});
}

BlockSystem wreath_blocks(unsigned m, unsigned d) {
  std::vector<std::vector<unsigned>> cells(d);
  for (unsigned j = 0; j < d; ++j)
    for (unsigned i = 0; i < m; ++i) cells[j].push_back(j * m + i);
  return BlockSystem(m * d, std::move(cells));
}

Permutation embed_in_cell(const Permutation& u, unsigned cell, unsigned m,
                          unsigned d) {
  std::vector<std::uint8_t> img(m * d);
  std::iota(img.begin(), img.end(), 0);
  for (unsigned i = 0; i < m; ++i)
    img[cell * m + i] = static_cast<std::uint8_t>(cell * m + u[i]);
  return Permutation(std::move(img));
}

Permutation embed_cells_action(const Permutation& v, unsigned m, unsigned d) {
  std::vector<std::uint8_t> img(m * d);
  for (unsigned j = 0; j < d; ++j)
    for (unsigned i = 0; i < m; ++i)
      img[j * m + i] = static_cast<std::uint8_t>(v[j] * m + i);
  return Permutation(std::move(img));
}

PermGroup wreath_product(const PermGroup& u, const PermGroup& v) {
  unsigned m = u.degree(), d = v.degree();
  std::vector<Permutation> gens;
  // For transitive v one base cell suffices; otherwise embed everywhere.
  unsigned cells = v.is_transitive() ? 1 : d;
  for (unsigned j = 0; j < cells; ++j)
    for (const auto& g : u.generators())
      gens.push_back(embed_in_cell(g, j, m, d));
  for (const auto& g : v.generators())
    gens.push_back(embed_cells_action(g, m, d));
  return PermGroup(m * d, gens);
}

}  // namespace verikit::groups
