#pragma once

#include "verikit/fp_linear.hpp"

namespace verikit::fp {

// Closed-form right-hand sides for the span lemmas on short-support vectors
// in permutation modules of C_q, D_q and S_4, plus the invariant-submodule
// list under A_n / S_n.

enum class SpanLemma {
  CyclicShortVector,   // C_q span of e_i + mu*e_j, p != 1 mod q
  CyclicTwoTerm,       // C_q span of e_j + e_{i+j}, arbitrary q
  ReflectionWeight4,   // C_q span, |supp| = 4 reflection-invariant, p = 2
  DihedralWeight3,     // D_q span, |supp| = 3, p = 2
  S4SmallSupport,      // S_4 span contains aug, |supp| <= 3
};

struct SpanPrediction {
  DistinguishedSubmodule shape;
  bool containment_only = false;  // prediction is a lower bound, not equality
};

struct CyclicShortVectorParams {
  unsigned p, q;   // primes, p != 1 mod q
  unsigned mu;     // nonzero mod p
  unsigned i = 1;  // offset, 0 < i < q
};
struct CyclicTwoTermParams {
  unsigned p, q;  // p prime, q >= 2
  unsigned i;     // nonzero mod q
};
struct ReflectionWeight4Params {
  unsigned q;                     // prime >= 5
  std::vector<unsigned> support;  // size 4, invariant under a reflection
};
struct DihedralWeight3Params {
  unsigned q;                     // prime >= 5
  std::vector<unsigned> support;  // size 3
};
struct S4SmallSupportParams {
  unsigned p;
  FpVector v;  // length 4, 1 <= |supp| <= 3
};

SpanPrediction predict(const CyclicShortVectorParams& params);
SpanPrediction predict(const CyclicTwoTermParams& params);
SpanPrediction predict(const ReflectionWeight4Params& params);
SpanPrediction predict(const DihedralWeight3Params& params);
SpanPrediction predict(const S4SmallSupportParams& params);

unsigned additive_order(unsigned i, unsigned q);

// True iff the support (as a subset of Z/q) is invariant under some
// reflection x -> c - x.
bool reflection_invariant(const std::vector<unsigned>& support, unsigned q);

// Checks that every ⟨V·v⟩, V in {A_n, S_n}, lies in {0, diag, aug, full},
// enumerating v up to coordinate permutation and scaling.  Returns the set
// of shapes seen.  Throws on a violation.
std::vector<DistinguishedSubmodule> invariant_submodule_survey(unsigned p,
                                                               unsigned n,
                                                               bool alternating);

}  // namespace verikit::fp
