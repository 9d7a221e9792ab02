#include "verikit/fp_linear.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "verikit/errors.hpp"

namespace verikit::fp {

namespace {
unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned t = 1; t < p; ++t)
    if ((a * t) % p == 1) return t;
  throw Error("not invertible mod p");
}
}  // namespace

FpVector::FpVector(unsigned p_, std::vector<std::uint8_t> coords)
    : p(p_), c(std::move(coords)) {
  for (auto& x : c) x = static_cast<std::uint8_t>(x % p);
}

FpVector FpVector::zero(unsigned p, unsigned n) {
  return FpVector(p, std::vector<std::uint8_t>(n, 0));
}

FpVector FpVector::unit(unsigned p, unsigned n, unsigned i, unsigned value) {
  FpVector v = zero(p, n);
  v.c[i] = static_cast<std::uint8_t>(value % p);
  return v;
}

bool FpVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](std::uint8_t x) { return !x; });
}

std::vector<unsigned> FpVector::support() const {
  std::vector<unsigned> s;
  for (unsigned i = 0; i < size(); ++i)
    if (c[i]) s.push_back(i);
  return s;
}

FpVector operator+(const FpVector& a, const FpVector& b) {
  if (a.p != b.p || a.size() != b.size())
    throw DimensionMismatch("vector addition shape mismatch");
  FpVector r = a;
  for (unsigned i = 0; i < r.size(); ++i)
    r.c[i] = static_cast<std::uint8_t>((r.c[i] + b.c[i]) % a.p);
  return r;
}

FpVector operator-(const FpVector& a, const FpVector& b) {
  if (a.p != b.p || a.size() != b.size())
    throw DimensionMismatch("vector subtraction shape mismatch");
  FpVector r = a;
  for (unsigned i = 0; i < r.size(); ++i)
    r.c[i] = static_cast<std::uint8_t>((r.c[i] + a.p - b.c[i]) % a.p);
  return r;
}

FpVector FpVector::scaled(unsigned s) const {
  FpVector r = *this;
  for (auto& x : r.c) x = static_cast<std::uint8_t>((x * s) % p);
  return r;
}

// ------------------------------------------------------------- FpSubmodule

FpSubmodule::FpSubmodule(unsigned p, unsigned n) : p_(p), n_(n) {}

FpSubmodule FpSubmodule::span(unsigned p, unsigned n,
                              const std::vector<FpVector>& vectors) {
  FpSubmodule m(p, n);
  for (const auto& v : vectors) m.insert(v);
  return m;
}

FpSubmodule FpSubmodule::full(unsigned p, unsigned n) {
  FpSubmodule m(p, n);
  for (unsigned i = 0; i < n; ++i) m.insert(FpVector::unit(p, n, i));
  return m;
}

FpVector FpSubmodule::reduce(FpVector v) const {
  for (const auto& row : rows_) {
    unsigned pivot = row.support().front();
    if (v.c[pivot]) v = v - row.scaled(v.c[pivot]);
  }
  return v;
}

bool FpSubmodule::insert(const FpVector& v) {
  if (v.p != p_ || v.size() != n_)
    throw DimensionMismatch("vector does not fit submodule shape");
  FpVector r = reduce(v);
  if (r.is_zero()) return false;
  unsigned pivot = r.support().front();
  r = r.scaled(inv_mod(r.c[pivot], p_));
  for (auto& row : rows_)
    if (row.c[pivot]) row = row - r.scaled(row.c[pivot]);
  auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const FpVector& w) {
    return w.support().front() > pivot;
  });
  rows_.insert(pos, std::move(r));
  return true;
}

bool FpSubmodule::contains(const FpVector& v) const {
  if (v.p != p_ || v.size() != n_) return false;
  return reduce(v).is_zero();
}

bool FpSubmodule::contains(const FpSubmodule& other) const {
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

FpSubmodule FpSubmodule::sum(const FpSubmodule& other) const {
  FpSubmodule m = *this;
  for (const auto& row : other.rows_) m.insert(row);
  return m;
}

FpSubmodule FpSubmodule::intersection(const FpSubmodule& other) const {
  // Zassenhaus trick: reduce rows [v|v] for ours and [w|0] for theirs; rows
  // with zero left half carry intersection vectors on the right.
  unsigned n2 = 2 * n_;
  FpSubmodule work(p_, n2);
  auto glue = [&](const FpVector& v, bool mirror) {
    std::vector<std::uint8_t> w(n2, 0);
    std::copy(v.c.begin(), v.c.end(), w.begin());
    if (mirror) std::copy(v.c.begin(), v.c.end(), w.begin() + n_);
    return FpVector(p_, std::move(w));
  };
  for (const auto& row : rows_) work.insert(glue(row, true));
  for (const auto& row : other.rows_) work.insert(glue(row, false));
  FpSubmodule result(p_, n_);
  for (const auto& row : work.basis()) {
    bool left_zero = std::all_of(row.c.begin(), row.c.begin() + n_,
                                 [](std::uint8_t x) { return !x; });
    if (left_zero)
      result.insert(FpVector(
          p_, std::vector<std::uint8_t>(row.c.begin() + n_, row.c.end())));
  }
  return result;
}

std::vector<FpVector> FpSubmodule::enumerate(unsigned long long budget) const {
  unsigned long long count = 1;
  for (unsigned i = 0; i < dim(); ++i) {
    count *= p_;
    if (count > budget)
      throw ResourceBudgetExceeded("submodule too large to enumerate");
  }
  std::vector<FpVector> out{FpVector::zero(p_, n_)};
  for (const auto& row : rows_) {
    std::vector<FpVector> next;
    next.reserve(out.size() * p_);
    for (const auto& v : out)
      for (unsigned s = 0; s < p_; ++s) next.push_back(v + row.scaled(s));
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------- MonomialAction

MonomialAction::MonomialAction(PermGroup group, unsigned p)
    : group_(std::move(group)), p_(p) {
  scales_.assign(group_.generators().size(),
                 std::vector<std::uint8_t>(group_.degree(), 1));
}

MonomialAction::MonomialAction(PermGroup group, unsigned p,
                               std::vector<std::vector<std::uint8_t>> scales)
    : group_(std::move(group)), p_(p), scales_(std::move(scales)) {
  if (scales_.size() != group_.generators().size())
    throw DimensionMismatch("one scale vector per generator required");
}

FpVector MonomialAction::apply(unsigned gen_index, const FpVector& v) const {
  const Permutation& g = group_.generators()[gen_index];
  const auto& sc = scales_[gen_index];
  FpVector out = FpVector::zero(p_, v.size());
  for (unsigned j = 0; j < v.size(); ++j) {
    unsigned t = g[j];
    out.c[t] = static_cast<std::uint8_t>((out.c[t] + v.c[j] * sc[t]) % p_);
  }
  return out;
}

FpVector MonomialAction::apply(const Permutation& g, const FpVector& v) const {
  FpVector out = FpVector::zero(p_, v.size());
  for (unsigned j = 0; j < v.size(); ++j) out.c[g[j]] = v.c[j];
  return out;
}

bool MonomialAction::spot_check_consistency(unsigned trials) const {
  if (group_.generators().empty()) return true;
  std::uint64_t state = 0xc0ffee123456789ull;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::size_t>(state >> 33);
  };
  std::map<Permutation, std::vector<FpVector>> seen;
  unsigned n = group_.degree();
  for (unsigned t = 0; t < trials; ++t) {
    unsigned len = 1 + next() % 6;
    Permutation p(n);
    std::vector<FpVector> cols;
    for (unsigned i = 0; i < n; ++i) cols.push_back(FpVector::unit(p_, n, i));
    for (unsigned i = 0; i < len; ++i) {
      unsigned gi = static_cast<unsigned>(next() % group_.generators().size());
      p = group_.generators()[gi] * p;
      for (auto& col : cols) col = apply(gi, col);
    }
    auto [it, fresh] = seen.emplace(p, cols);
    if (!fresh && !(it->second == cols)) return false;
  }
  return true;
}

FpSubmodule orbit_span(const MonomialAction& a, const FpVector& v) {
  if (v.size() != a.n() || v.p != a.p())
    throw DimensionMismatch("vector does not match the action");
  FpSubmodule m(a.p(), a.n());
  std::vector<FpVector> frontier;
  if (m.insert(v)) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<FpVector> next;
    for (const auto& w : frontier)
      for (unsigned gi = 0; gi < a.group().generators().size(); ++gi) {
        FpVector img = a.apply(gi, w);
        if (m.insert(img)) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  for (const auto& row : m.basis())
    for (unsigned gi = 0; gi < a.group().generators().size(); ++gi)
      if (!m.contains(a.apply(gi, row)))
        throw Error("orbit span failed closure verification");
  return m;
}

// ------------------------------------------------- distinguished submodules

std::string DistinguishedSubmodule::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case SubmoduleKind::Zero:
      return "zero";
    case SubmoduleKind::Diag:
      return "diag";
    case SubmoduleKind::Aug:
      return "aug";
    case SubmoduleKind::AugMinus:
      return "aug-";
    case SubmoduleKind::Full:
      return "full";
    case SubmoduleKind::AugPower:
      os << "aug(" << o << ")^" << (dim ? dim / (o - 1) : 0);
      return os.str();
    case SubmoduleKind::AugMinusPower:
      os << "aug-(" << o << ")^" << (dim ? dim / (o - 1) : 0);
      return os.str();
    case SubmoduleKind::Other:
      os << "other(dim=" << dim << ")";
      return os.str();
  }
  return "?";
}

FpSubmodule make_distinguished(unsigned p, unsigned n, SubmoduleKind kind,
                               unsigned o) {
  FpSubmodule m(p, n);
  switch (kind) {
    case SubmoduleKind::Zero:
      return m;
    case SubmoduleKind::Full:
      return FpSubmodule::full(p, n);
    case SubmoduleKind::Diag: {
      m.insert(FpVector(p, std::vector<std::uint8_t>(n, 1)));
      return m;
    }
    case SubmoduleKind::Aug:
    case SubmoduleKind::AugPower: {
      if (kind == SubmoduleKind::Aug) o = n;
      if (o < 2 || n % o)
        throw HypothesisViolated("block length must divide n");
      unsigned step = n / o;
      // progression j, j+step, ..., j+(o-1)step for each j < step:
      // differences of consecutive progression members span the factor
      for (unsigned j = 0; j < step; ++j)
        for (unsigned k = 0; k + 1 < o; ++k) {
          FpVector v = FpVector::zero(p, n);
          v.c[j + k * step] = 1;
          v.c[j + (k + 1) * step] = static_cast<std::uint8_t>(p - 1);
          m.insert(v);
        }
      return m;
    }
    case SubmoduleKind::AugMinus:
    case SubmoduleKind::AugMinusPower: {
      if (kind == SubmoduleKind::AugMinus) o = n;
      if (o < 2 || o % 2) throw HypothesisViolated("aug- needs even length");
      if (n % o) throw HypothesisViolated("block length must divide n");
      unsigned step = n / o;
      // alternating signs along each progression: e_j + e_{j+step} spans
      for (unsigned j = 0; j < step; ++j)
        for (unsigned k = 0; k + 1 < o; ++k) {
          FpVector v = FpVector::zero(p, n);
          v.c[j + k * step] = 1;
          v.c[j + (k + 1) * step] = 1;
          m.insert(v);
        }
      return m;
    }
    case SubmoduleKind::Other:
      throw Error("cannot construct an unspecified submodule");
  }
  return m;
}

DistinguishedSubmodule classify_submodule(const FpSubmodule& m) {
  unsigned p = m.p(), n = m.length();
  DistinguishedSubmodule d;
  d.dim = m.dim();
  auto matches = [&](SubmoduleKind kind, unsigned o) {
    return m == make_distinguished(p, n, kind, o);
  };
  if (m.dim() == 0) {
    d.kind = SubmoduleKind::Zero;
    return d;
  }
  if (m.dim() == n) {
    d.kind = SubmoduleKind::Full;
    return d;
  }
  if (matches(SubmoduleKind::Diag, 0)) {
    d.kind = SubmoduleKind::Diag;
    return d;
  }
  if (matches(SubmoduleKind::Aug, 0)) {
    d.kind = SubmoduleKind::Aug;
    return d;
  }
  if (n % 2 == 0 && matches(SubmoduleKind::AugMinus, 0)) {
    d.kind = SubmoduleKind::AugMinus;
    return d;
  }
  for (unsigned o = 2; o < n; ++o) {
    if (n % o) continue;
    if (matches(SubmoduleKind::AugPower, o)) {
      d.kind = SubmoduleKind::AugPower;
      d.o = o;
      return d;
    }
    if (o % 2 == 0 && matches(SubmoduleKind::AugMinusPower, o)) {
      d.kind = SubmoduleKind::AugMinusPower;
      d.o = o;
      return d;
    }
  }
  d.kind = SubmoduleKind::Other;
  return d;
}

// ------------------------------------------------------------ cyclic codes

FpPoly fp_poly_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

FpPoly fp_poly_mul(unsigned p, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % p);
  return fp_poly_trim(std::move(r));
}

FpPoly fp_poly_mod(unsigned p, FpPoly a, const FpPoly& m) {
  a = fp_poly_trim(std::move(a));
  FpPoly mm = fp_poly_trim(m);
  if (mm.empty()) throw Error("division by zero polynomial");
  unsigned lead_inv = inv_mod(mm.back(), p);
  while (a.size() >= mm.size()) {
    unsigned factor = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i)
      a[i + shift] = static_cast<std::uint8_t>(
          (a[i + shift] + p * p - factor * mm[i]) % p);
    a = fp_poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

FpPoly fp_poly_gcd(unsigned p, FpPoly a, FpPoly b) {
  a = fp_poly_trim(std::move(a));
  b = fp_poly_trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = fp_poly_mod(p, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    unsigned inv = inv_mod(a.back(), p);
    for (auto& x : a) x = static_cast<std::uint8_t>((x * inv) % p);
  }
  return a;
}

FpSubmodule cyclic_code(unsigned p, unsigned q, const FpPoly& f) {
  FpPoly xq1(q + 1, 0);
  xq1[0] = static_cast<std::uint8_t>(p - 1);
  xq1[q] = 1;
  FpPoly g = fp_poly_gcd(p, xq1, fp_poly_trim(f));
  if (g.empty()) return cyclic_code(p, q, xq1);  // gcd(x^q-1, 0) = x^q-1
  FpSubmodule code(p, q);
  for (unsigned shift = 0; shift < q; ++shift) {
    FpPoly row(q, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      unsigned idx = (shift + static_cast<unsigned>(i)) % q;
      row[idx] = static_cast<std::uint8_t>((row[idx] + g[i]) % p);
    }
    code.insert(FpVector(p, row));
  }
  return code;
}

}  // namespace verikit::fp
