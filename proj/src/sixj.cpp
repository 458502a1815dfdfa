#include "sl2ybe/sixj.hpp"

#include <algorithm>
#include <array>

namespace sl2ybe {

bool triangle_ok(HalfInt x, HalfInt y, HalfInt z) {
  if (x.twice < 0 || y.twice < 0 || z.twice < 0) return false;
  if ((x.twice + y.twice + z.twice) % 2 != 0) return false;
  return std::abs(x.twice - y.twice) <= z.twice && z.twice <= x.twice + y.twice;
}

namespace {

// Delta(x y z)^2 = (x+y-z)!(x-y+z)!(-x+y+z)!/(x+y+z+1)! for an admissible triad.
Rational triangle_coefficient_sq(HalfInt x, HalfInt y, HalfInt z) {
  const long a = (x.twice + y.twice - z.twice) / 2;
  const long b = (x.twice - y.twice + z.twice) / 2;
  const long c = (-x.twice + y.twice + z.twice) / 2;
  const long t = (x.twice + y.twice + z.twice) / 2;
  return Rational(factorial(a) * factorial(b) * factorial(c), factorial(t + 1));
}

}  // namespace

SqrtRational sixj(const SixJArgs& g) {
  const std::array<std::array<HalfInt, 3>, 4> triads{{
      {g.a, g.b, g.e},
      {g.a, g.d, g.f},
      {g.c, g.b, g.f},
      {g.c, g.d, g.e},
  }};
  Rational delta_sq(1);
  std::array<long, 4> alpha{};
  for (std::size_t i = 0; i < triads.size(); ++i) {
    const auto& t = triads[i];
    if (!triangle_ok(t[0], t[1], t[2])) return {};
    delta_sq *= triangle_coefficient_sq(t[0], t[1], t[2]);
    alpha[i] = (t[0].twice + t[1].twice + t[2].twice) / 2;
  }
  const std::array<long, 3> beta{
      (g.a.twice + g.b.twice + g.c.twice + g.d.twice) / 2,
      (g.b.twice + g.e.twice + g.d.twice + g.f.twice) / 2,
      (g.e.twice + g.a.twice + g.f.twice + g.c.twice) / 2,
  };
  const long lo = *std::max_element(alpha.begin(), alpha.end());
  const long hi = *std::min_element(beta.begin(), beta.end());
  Rational sum(0);
  for (long t = lo; t <= hi; ++t) {
    BigInt den = 1;
    for (long al : alpha) den *= factorial(t - al);
    for (long be : beta) den *= factorial(be - t);
    sum += Rational(parity_sign(t) * factorial(t + 1), den);
  }
  return SqrtRational::make(sum, delta_sq);
}

SqrtRational racah_identity_check(HalfInt r1, HalfInt r2, HalfInt r3, HalfInt r4, HalfInt l,
                                  HalfInt lp) {
  if ((r1.twice + r4.twice) % 2 != 0 || (l.twice + lp.twice) % 2 != 0)
    throw std::domain_error("Racah identity needs integral r1+r4 and l+l'");
  SqrtRational lhs;
  const int p_max = (r1.twice + r4.twice) / 2;
  for (int p = 0; p <= p_max; ++p) {
    const HalfInt hp = HalfInt::from_int(p);
    const SqrtRational term = sixj({r1, r3, l, r2, r4, hp}) * sixj({r1, r2, lp, r3, r4, hp});
    lhs = lhs + Rational(parity_sign(p) * (2 * p + 1)) * term;
  }
  const SqrtRational rhs =
      Rational(parity_sign((l.twice + lp.twice) / 2)) * sixj({r3, r1, l, r2, r4, lp});
  return lhs - rhs;
}

SqrtRational racah_level_residual(HalfInt s, int n, int k, int kp) {
  const HalfInt r4 = HalfInt::from_twice(3 * s.twice - 2 * n);
  return racah_identity_check(s, s, s, r4, HalfInt::from_twice(2 * s.twice - 2 * k),
                              HalfInt::from_twice(2 * s.twice - 2 * kp));
}

}  // namespace sl2ybe
