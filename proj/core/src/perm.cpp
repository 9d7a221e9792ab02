#include "verikit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace verikit {

namespace {
constexpr unsigned kMaxDegree = 255;
}

Permutation::Permutation(unsigned degree) : img_(degree) {
  if (degree > kMaxDegree) throw InvalidPermutation("degree too large");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<std::uint8_t> images)
    : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (unsigned x : img_) {
    if (x >= img_.size() || seen[x])
      throw InvalidPermutation("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::cycle(unsigned degree,
                               const std::vector<unsigned>& points) {
  Permutation p(degree);
  if (points.empty()) return p;
  for (std::size_t i = 0; i < points.size(); ++i) {
    unsigned from = points[i];
    unsigned to = points[(i + 1) % points.size()];
    if (from >= degree || to >= degree)
      throw InvalidPermutation("cycle point out of range");
    if (p.img_[from] != from && p.img_[from] != to)
      throw InvalidPermutation("repeated point in cycle");
    p.img_[from] = static_cast<std::uint8_t>(to);
  }
  return p;
}

Permutation Permutation::from_cycles(const std::string& text,
                                     unsigned degree) {
  Permutation p(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i < text.size() && (text.compare(i, 2, "id") == 0)) return p;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle string");
    ++i;
    std::vector<unsigned> pts;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',' || text[i] == ' ') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character in cycle string");
      unsigned v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v == 0) throw ParseError("cycle points are 1-indexed");
      pts.push_back(v - 1);
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      unsigned from = pts[k], to = pts[(k + 1) % pts.size()];
      if (from >= degree || to >= degree)
        throw ParseError("cycle point exceeds degree");
      p.img_[from] = static_cast<std::uint8_t>(to);
    }
  }
  // validate
  return Permutation(std::move(p.img_));
}

bool Permutation::is_identity() const {
  for (unsigned x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (unsigned x = 0; x < degree(); ++x) inv[img_[x]] = x;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidPermutation("degree mismatch in product");
  Permutation p;
  p.img_.resize(a.degree());
  for (unsigned x = 0; x < a.degree(); ++x) p.img_[x] = a.img_[b.img_[x]];
  return p;
}

Permutation Permutation::power(long long k) const {
  unsigned n = order();
  long long e = k % static_cast<long long>(n);
  if (e < 0) e += n;
  Permutation acc(degree()), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

unsigned Permutation::order() const {
  unsigned ord = 1;
  for (const auto& c : cycles())
    ord = std::lcm(ord, static_cast<unsigned>(c.size()));
  return ord;
}

Permutation Permutation::extended(unsigned new_degree) const {
  if (new_degree < degree())
    throw InvalidPermutation("cannot shrink a permutation");
  Permutation p(new_degree);
  std::copy(img_.begin(), img_.end(), p.img_.begin());
  return p;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(degree(), false);
  for (unsigned x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::vector<unsigned> c;
    unsigned y = x;
    do {
      seen[y] = true;
      c.push_back(y);
      y = img_[y];
    } while (y != x);
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i] + 1;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  return h.inverse() * g * h;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

CycleType::CycleType(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

CycleType CycleType::of(const Permutation& p) {
  std::vector<unsigned> parts;
  for (const auto& c : p.cycles()) parts.push_back(c.size());
  return CycleType(std::move(parts));
}

CycleType CycleType::parse(const std::string& text, unsigned degree) {
  std::vector<unsigned> parts;
  std::size_t i = 0;
  auto read_num = [&]() -> unsigned {
    unsigned v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return v;
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      unsigned base = read_num();
      unsigned rep = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        rep = read_num();
      }
      for (unsigned k = 0; k < rep; ++k) parts.push_back(base);
    } else {
      ++i;
    }
  }
  unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
  if (degree) {
    if (total > degree) throw ParseError("cycle type exceeds degree");
    for (unsigned k = total; k < degree; ++k) parts.push_back(1);
  }
  return CycleType(std::move(parts));
}

unsigned CycleType::degree() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned CycleType::index() const {
  unsigned s = 0;
  for (unsigned p : parts_) s += p - 1;
  return s;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i) os << '.';
    os << parts_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ']';
  return os.str();
}

CycleType cycle_type(const Permutation& p) { return CycleType::of(p); }

unsigned perm_index(const Permutation& p) {
  return p.degree() - static_cast<unsigned>(p.cycles().size());
}

}  // namespace verikit
