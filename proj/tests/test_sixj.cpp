#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "sl2ybe/sixj.hpp"

using namespace sl2ybe;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

// Independent route: 6-j as a contraction of four Wigner 3-j symbols, each
// from the Racah 3-j formula, in double precision. All labels are twice-values.
double fact(int twice_n) {
  // twice_n is even here
  return std::tgamma(twice_n / 2 + 1.0);
}

bool tri(int a, int b, int c) { return c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0; }

double three_j(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0 || !tri(j1, j2, j3)) return 0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0;
  if ((j1 + m1) % 2 || (j2 + m2) % 2 || (j3 + m3) % 2) return 0;
  const double delta = fact(j1 + j2 - j3) * fact(j1 - j2 + j3) * fact(-j1 + j2 + j3) / fact(j1 + j2 + j3 + 2);
  const double pre = std::sqrt(delta * fact(j1 + m1) * fact(j1 - m1) * fact(j2 + m2) * fact(j2 - m2) *
                               fact(j3 + m3) * fact(j3 - m3));
  double sum = 0;
  for (int k = 0; k <= 2 * (j1 + j2 + j3); k += 2) {
    const std::array<int, 5> args{j3 - j2 + k + m1, j3 - j1 + k - m2, j1 + j2 - j3 - k, j1 - k - m1, j2 - k + m2};
    bool ok = true;
    for (int x : args) ok = ok && x >= 0;
    if (!ok) continue;
    double den = fact(k);
    for (int x : args) den *= fact(x);
    sum += ((k / 2) % 2 ? -1.0 : 1.0) / den;
  }
  const int phase = (j1 - j2 - m3) / 2;
  return (phase % 2 ? -1.0 : 1.0) * pre * sum;
}

double sixj_brute(int j1, int j2, int j3, int j4, int j5, int j6) {
  // The projection labels are fixed by m1, m2, m5 through the zero-sum rule.
  double total = 0;
  for (int m1 = -j1; m1 <= j1; m1 += 2)
    for (int m2 = -j2; m2 <= j2; m2 += 2)
      for (int m5 = -j5; m5 <= j5; m5 += 2) {
        const int m3 = -m1 - m2;
        const int m6 = m5 - m1;
        const int m4 = m6 - m2;
        const double a = three_j(j1, j2, j3, -m1, -m2, -m3);
        const double b = three_j(j1, j5, j6, m1, -m5, m6);
        const double c = three_j(j4, j2, j6, m4, m2, -m6);
        const double d = three_j(j4, j5, j3, -m4, m5, m3);
        const int s = (j1 - m1 + j2 - m2 + j3 - m3 + j4 - m4 + j5 - m5 + j6 - m6) / 2;
        total += (s % 2 ? -1.0 : 1.0) * a * b * c * d;
      }
  return total;
}

}  // namespace

TEST_CASE("triangle conditions") {
  CHECK(triangle_ok(h(1), h(1), h(2)));
  CHECK_FALSE(triangle_ok(h(1), h(1), h(4)));
  CHECK_FALSE(triangle_ok(h(2), h(1), h(2)));
}

TEST_CASE("small 6-j values") {
  CHECK(sixj({h(1), h(1), h(0), h(1), h(1), h(0)}) == SqrtRational(q(-1, 2)));
  CHECK(sixj({h(1), h(1), h(2), h(1), h(1), h(2)}) == SqrtRational(q(1, 6)));
  CHECK(sixj({h(1), h(1), h(4), h(1), h(1), h(2)}).is_zero());
  CHECK(sixj({h(2), h(1), h(2), h(1), h(1), h(1)}).is_zero());
}

TEST_CASE("6-j agrees with the 3-j contraction") {
  int compared = 0;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int e = 0; e <= 5; ++e)
        for (int c = 0; c <= 4; ++c)
          for (int d = 0; d <= 4; ++d)
            for (int f = 0; f <= 4; ++f) {
              if (!tri(a, b, e) || !tri(c, d, e) || !tri(a, d, f) || !tri(c, b, f)) continue;
              const double exact = sixj({h(a), h(b), h(e), h(c), h(d), h(f)}).to_double();
              // {a b e; c d f} in Wikipedia's labelling {j1 j2 j3; j4 j5 j6}
              CHECK(exact == doctest::Approx(sixj_brute(a, b, e, c, d, f)).epsilon(1e-10));
              ++compared;
            }
  CHECK(compared > 500);
}

TEST_CASE("tetrahedral symmetry on random admissible labels") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> lab(0, 9);
  int tested = 0;
  while (tested < 300) {
    const int a = lab(rng), b = lab(rng), e = lab(rng), c = lab(rng), d = lab(rng), f = lab(rng);
    if (!tri(a, b, e) || !tri(c, d, e) || !tri(a, d, f) || !tri(c, b, f)) continue;
    ++tested;
    const auto v = sixj({h(a), h(b), h(e), h(c), h(d), h(f)});
    // column permutations
    CHECK(sixj({h(b), h(a), h(e), h(d), h(c), h(f)}) == v);
    CHECK(sixj({h(a), h(e), h(b), h(c), h(f), h(d)}) == v);
    CHECK(sixj({h(e), h(b), h(a), h(f), h(d), h(c)}) == v);
    CHECK(sixj({h(b), h(e), h(a), h(d), h(f), h(c)}) == v);
    // upper/lower exchange in two columns
    CHECK(sixj({h(c), h(d), h(e), h(a), h(b), h(f)}) == v);
    CHECK(sixj({h(c), h(b), h(f), h(a), h(d), h(e)}) == v);
    CHECK(sixj({h(a), h(d), h(f), h(c), h(b), h(e)}) == v);
  }
}

TEST_CASE("orthogonality") {
  // sum_x (2x+1)(2p+1) {a b x; c d p}{a b x; c d q} = delta_pq
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c)
        for (int d = 0; d <= 6; ++d)
          for (int p = 0; p <= 6; ++p)
            for (int qq = p; qq <= 6; ++qq) {
              if (!tri(a, d, p) || !tri(c, b, p) || !tri(a, d, qq) || !tri(c, b, qq)) continue;
              Rational exact_sum(0);
              double sum = 0;
              for (int x = 0; x <= 12; ++x) {
                if (!tri(a, b, x) || !tri(c, d, x)) continue;
                const auto u = sixj({h(a), h(b), h(x), h(c), h(d), h(p)});
                const auto w = sixj({h(a), h(b), h(x), h(c), h(d), h(qq)});
                if (p == qq) exact_sum += Rational(x + 1) * u.squared();
                sum += (x + 1) * u.to_double() * w.to_double();
              }
              if (p == qq) {
                CHECK(exact_sum == Rational(BigInt(1), BigInt(p + 1)));
              } else {
                CHECK(std::abs(sum) < 1e-12);
              }
            }
}

TEST_CASE("Racah identity") {
  CHECK(racah_identity_check(h(1), h(1), h(1), h(1), h(0), h(0)).is_zero());
  CHECK(racah_identity_check(h(2), h(2), h(2), h(4), h(4), h(2)).is_zero());
  CHECK(racah_identity_check(h(6), h(6), h(6), h(10), h(6), h(6)).is_zero());
  for (int tw = 1; tw <= 6; ++tw) {
    const HalfInt s = h(tw);
    for (int n = 0; n <= (3 * tw) / 2; ++n) {
      const int k_min = std::max(0, n - tw), k_max = std::min(n, tw);
      for (int k = k_min; k <= k_max; ++k)
        for (int kp = k_min; kp <= k_max; ++kp) CHECK(racah_level_residual(s, n, k, kp).is_zero());
    }
  }
}
