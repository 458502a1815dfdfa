#pragma once

// Wigner 6-j symbols of sl2 in exact arithmetic (Racah single-sum formula).

#include "sl2ybe/exact.hpp"

namespace sl2ybe {

/// Arguments of {a b e; c d f}. Nonzero only if the triads (a,b,e), (a,d,f),
/// (c,b,f) and (c,d,e) all couple.
struct SixJArgs {
  HalfInt a, b, e, c, d, f;
};

/// |x-y| <= z <= x+y and x+y+z integral.
bool triangle_ok(HalfInt x, HalfInt y, HalfInt z);

/// Exact {a b e; c d f}; zero for inadmissible arguments.
SqrtRational sixj(const SixJArgs& args);

/// Left minus right side of the Racah identity
///   sum_p (-1)^p (2p+1) {r1 r3 l; r2 r4 p}{r1 r2 l'; r3 r4 p} = (-1)^(l+l') {r3 r1 l; r2 r4 l'}.
/// The summation label p runs over integers, so r1+r4 and l+l' must be integral.
SqrtRational racah_identity_check(HalfInt r1, HalfInt r2, HalfInt r3, HalfInt r4, HalfInt l,
                                  HalfInt lp);

/// The Racah identity at the labels of the level-n matrix entry (k, k'):
/// r1 = r2 = r3 = s, r4 = 3s - n, l = 2s - k, l' = 2s - k'.
SqrtRational racah_level_residual(HalfInt s, int n, int k, int kp);

}  // namespace sl2ybe
