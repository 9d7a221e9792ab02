#pragma once

#include "verikit/frame.hpp"

namespace verikit::wreath {

// Per-cell quotient machinery for frames whose cell action U carries a
// designated normal subgroup U0 (rotations in D_p, A_4 in S_4, V_4 in A_4):
// elements of the kernel project cellwise into U/U0.

// Subgroup of the block kernel whose components all lie in u0.
PermGroup kernel_in_power(const ImprimitiveFrame& f, const PermGroup& u0);

// Image of `sub` (a subgroup of the kernel) in (U/U0)^d when U/U0 is cyclic
// of prime order p, as an F_p-submodule of F_p^d.  The coset discrete log is
// fixed by the first generator of U found outside U0.
fp::FpSubmodule kernel_quotient_module(const ImprimitiveFrame& f,
                                       const PermGroup& sub,
                                       const PermGroup& u0, unsigned p);

// Faithful-on-quotient action of the ambient group on cells x {0,1} through
// the sign U -> U/U0 = C_2; returns the group it generates on 2d points.
PermGroup sign_quotient_group(const ImprimitiveFrame& f, const PermGroup& u0);

}  // namespace verikit::wreath
