#include "verikit/fp_lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "verikit/errors.hpp"
#include "verikit/groups_std.hpp"

namespace verikit::fp {

unsigned additive_order(unsigned i, unsigned q) {
  i %= q;
  if (i == 0) throw HypothesisViolated("offset must be nonzero mod q");
  return q / std::gcd(i, q);
}

bool reflection_invariant(const std::vector<unsigned>& support, unsigned q) {
  std::set<unsigned> s(support.begin(), support.end());
  for (unsigned c = 0; c < q; ++c) {
    bool ok = true;
    for (unsigned x : s)
      if (!s.count(((c + q) - x % q) % q)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

namespace {
bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

SpanPrediction predict(const CyclicShortVectorParams& params) {
  auto [p, q, mu, i] = params;
  if (!is_prime(p) || !is_prime(q))
    throw HypothesisViolated("p and q must be prime");
  if (p % q == 1)
    throw HypothesisViolated("requires p != 1 mod q");
  if (mu % p == 0) throw HypothesisViolated("mu must be a unit");
  if (i % q == 0) throw HypothesisViolated("distinct coordinates required");
  SpanPrediction out;
  if (mu % p == p - 1)
    out.shape = {SubmoduleKind::Aug, 0, q - 1};
  else
    out.shape = {SubmoduleKind::Full, 0, q};
  return out;
}

SpanPrediction predict(const CyclicTwoTermParams& params) {
  auto [p, q, i] = params;
  if (!is_prime(p)) throw HypothesisViolated("p must be prime");
  if (q < 2) throw HypothesisViolated("q >= 2 required");
  unsigned o = additive_order(i, q);
  SpanPrediction out;
  if (p == 2)
    out.shape = {o == q ? SubmoduleKind::Aug : SubmoduleKind::AugPower, o,
                 q - q / o};
  else if (o % 2 == 0)
    out.shape = {o == q ? SubmoduleKind::AugMinus : SubmoduleKind::AugMinusPower,
                 o, q - q / o};
  else
    out.shape = {SubmoduleKind::Full, 0, q};
  if (out.shape.kind == SubmoduleKind::Aug ||
      out.shape.kind == SubmoduleKind::AugMinus)
    out.shape.o = 0;
  return out;
}

SpanPrediction predict(const ReflectionWeight4Params& params) {
  if (!is_prime(params.q) || params.q < 5)
    throw HypothesisViolated("q must be a prime >= 5");
  if (params.support.size() != 4)
    throw HypothesisViolated("support size must be 4");
  if (!reflection_invariant(params.support, params.q))
    throw HypothesisViolated("support must be reflection-invariant");
  return {{SubmoduleKind::Aug, 0, params.q - 1}, false};
}

SpanPrediction predict(const DihedralWeight3Params& params) {
  if (!is_prime(params.q) || params.q < 5)
    throw HypothesisViolated("q must be a prime >= 5");
  if (params.support.size() != 3)
    throw HypothesisViolated("support size must be 3");
  return {{SubmoduleKind::Full, 0, params.q}, false};
}

SpanPrediction predict(const S4SmallSupportParams& params) {
  if (params.v.size() != 4) throw HypothesisViolated("length-4 vector required");
  std::size_t w = params.v.support().size();
  if (w < 1 || w > 3)
    throw HypothesisViolated("support size must be 1, 2 or 3");
  return {{SubmoduleKind::Aug, 0, 3}, true};
}

std::vector<DistinguishedSubmodule> invariant_submodule_survey(
    unsigned p, unsigned n, bool alternating) {
  if (n < 4) throw HypothesisViolated("n >= 4 required");
  PermGroup v = alternating ? groups::alternating(n) : groups::symmetric(n);
  MonomialAction action(v, p);

  std::vector<DistinguishedSubmodule> shapes;
  auto note = [&](const DistinguishedSubmodule& d) {
    if (std::find(shapes.begin(), shapes.end(), d) == shapes.end())
      shapes.push_back(d);
  };

  // Spans depend on v only through the sorted coordinate multiset (the listed
  // shapes are all coordinate-permutation invariant), so enumerate
  // non-increasing coordinate sequences.
  std::vector<std::uint8_t> coords(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos,
                                                    unsigned maxval) {
    if (pos == n) {
      FpVector vec(p, coords);
      if (vec.is_zero()) return;
      FpSubmodule span = orbit_span(action, vec);
      DistinguishedSubmodule d = classify_submodule(span);
      if (d.kind != SubmoduleKind::Diag && d.kind != SubmoduleKind::Aug &&
          d.kind != SubmoduleKind::Full)
        throw Error("invariant submodule outside the expected list");
      note(d);
      return;
    }
    for (unsigned val = 0; val <= maxval; ++val) {
      coords[pos] = static_cast<std::uint8_t>(val);
      rec(pos + 1, val);
    }
  };
  rec(0, p - 1);
  return shapes;
}

}  // namespace verikit::fp
