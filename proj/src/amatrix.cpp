#include "sl2ybe/amatrix.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "sl2ybe/poly.hpp"
#include "sl2ybe/sixj.hpp"

namespace sl2ybe {

// ---------------------------------------------------------------- LevelRange

LevelRange LevelRange::of(HalfInt s, int n) {
  if (s.twice < 0) throw std::domain_error("negative spin " + s.str());
  if (n < 0 || n > max_level(s))
    throw std::domain_error("level n = " + std::to_string(n) + " outside [0, " +
                            std::to_string(max_level(s)) + "] for s = " + s.str());
  LevelRange r;
  r.s = s;
  r.n = n;
  if (n <= s.twice) {
    r.k_min = 0;
    r.k_max = n;
  } else {
    r.k_min = n - s.twice;
    r.k_max = 2 * s.twice - n;
  }
  return r;
}

std::size_t LevelRange::position(int k) const {
  if (!contains(k))
    throw std::domain_error("index k = " + std::to_string(k) + " outside [" +
                            std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
  return static_cast<std::size_t>(k - k_min);
}

std::vector<int> LevelRange::indices() const {
  std::vector<int> ks;
  for (int k = k_min; k <= k_max; ++k) ks.push_back(k);
  return ks;
}

SignDiagonal SignDiagonal::of(const LevelRange& range) {
  SignDiagonal d{range, {}};
  for (int k : range.indices()) d.signs.push_back(parity_sign(k));
  return d;
}

// ---------------------------------------------------------------- A^(s,n)

namespace {

// (4s-2k+1) * F_k^2
Rational gauge_weight(int tw, int n, int k) {
  const BigInt f = factorial(tw - k);
  const BigInt num = f * f * factorial(k) * factorial(n - k) * factorial(tw - n + k) *
                     factorial(2 * tw - n - k);
  const BigInt den = factorial(2 * tw - k + 1) * factorial(3 * tw - n - k + 1);
  return Rational(2 * tw - 2 * k + 1) * Rational(num, den);
}

// The alternating factorial sum; l runs over the printed limits intersected
// with nonnegative factorial arguments.
Rational core_sum(int tw, int n, int k, int kp) {
  const long lo_printed = 3L * tw - n - std::min(k, kp);
  const long hi_printed = 3L * tw - std::max(n, k + kp);
  Rational sum(0);
  for (long l = std::max(0L, lo_printed); l <= hi_printed; ++l) {
    const std::array<long, 7> args{l - 2L * tw + k,      l - 2L * tw + kp,  l - 3L * tw + n + k,
                                   l - 3L * tw + n + kp, 3L * tw - n - l,   3L * tw - k - kp - l,
                                   4L * tw - n - k - kp - l};
    if (*std::min_element(args.begin(), args.end()) < 0) continue;
    BigInt den = 1;
    for (long a : args) den *= factorial(a);
    sum += Rational(parity_sign(l) * factorial(l + 1), den);
  }
  return sum;
}

GaugedMatrix<Rational> build_a_matrix(HalfInt s, int n) {
  const LevelRange range = LevelRange::of(s, n);
  const int tw = s.twice;
  auto weights = std::make_shared<std::vector<Rational>>();
  for (int k : range.indices()) weights->push_back(gauge_weight(tw, n, k));
  const Rational sign(parity_sign(tw - n));
  Matrix<Rational> core(range.dim(), range.dim());
  const auto ks = range.indices();
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i; j < ks.size(); ++j) {
      core(i, j) = sign * core_sum(tw, n, ks[i], ks[j]);
      core(j, i) = core(i, j);
    }
  return GaugedMatrix<Rational>(range, std::move(weights), std::move(core));
}

}  // namespace

GaugedMatrix<Rational> a_matrix(HalfInt s, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, GaugedMatrix<Rational>> cache;
  const auto key = std::make_pair(s.twice, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  GaugedMatrix<Rational> a = build_a_matrix(s, n);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(a)).first->second;
}

std::vector<std::vector<SqrtRational>> a_matrix_from_sixj(HalfInt s, int n) {
  const LevelRange range = LevelRange::of(s, n);
  const auto ks = range.indices();
  const int tw = s.twice;
  const HalfInt lower = HalfInt::from_twice(3 * tw - 2 * n);
  std::vector<std::vector<SqrtRational>> out(ks.size(), std::vector<SqrtRational>(ks.size()));
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j) {
      const HalfInt e = HalfInt::from_twice(2 * tw - 2 * ks[i]);
      const HalfInt f = HalfInt::from_twice(2 * tw - 2 * ks[j]);
      const SqrtRational prefactor = SqrtRational::make(
          Rational(parity_sign(tw - n)),
          Rational((2 * tw - 2 * ks[i] + 1) * (2 * tw - 2 * ks[j] + 1)));
      out[i][j] = prefactor * sixj({s, s, e, s, lower, f});
    }
  return out;
}

int sixj_route_sign(HalfInt s, int n) {
  const auto a = a_matrix(s, n);
  const auto b = a_matrix_from_sixj(s, n);
  const auto ks = a.range().indices();
  bool plus = true;
  bool minus = true;
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j) {
      const SqrtRational x = a.entry(ks[i], ks[j]);
      plus = plus && x == b[i][j];
      minus = minus && x == -b[i][j];
    }
  return plus ? 1 : (minus ? -1 : 0);
}

bool verify_a_properties(HalfInt s, int n) {
  const auto a = a_matrix(s, n);
  if (!a.core().is_symmetric()) return false;
  return a * a == GaugedMatrix<Rational>::identity(a.range(), a.weights());
}

bool verify_lemma3(HalfInt s, int n) {
  const auto a = a_matrix(s, n);
  const auto d0 = SignDiagonal::of(a.range()).gauged<Rational>(a.weights());
  return a * d0 * a == Rational(parity_sign(n)) * (d0 * a * d0);
}

Rational eta(HalfInt s, int m, int n) {
  const auto a = a_matrix(s, n);
  if (!a.range().contains(m))
    throw std::domain_error("eta: m = " + std::to_string(m) + " outside the index range of level " +
                            std::to_string(n));
  // Diagonal entries carry u_m * u_m under the root, hence are rational.
  return Rational(parity_sign(n)) * a.entry(m, m).to_rational();
}

Rational eta_closed_form(HalfInt s, int m) {
  const int tw = s.twice;
  if (m < 0 || m > tw) throw std::domain_error("eta_closed_form needs 0 <= m <= 2s");
  return Rational(factorial(tw), factorial(tw - m)) *
         Rational(factorial(2 * tw - 2 * m + 1), factorial(2 * tw - m + 1));
}

// ---------------------------------------------------------------- continuation

namespace {

using RPoly = Polynomial<Rational>;

// x(x-1)...(x-j+1) with x = a + b*X.
RPoly falling(const Rational& a, const Rational& b, int j) {
  RPoly p(Rational(1));
  for (int t = 0; t < j; ++t) p = p * RPoly::linear(a - Rational(t), b);
  return p;
}

// x(x+1)...(x+j-1) with x = a + b*X.
RPoly rising(const Rational& a, const Rational& b, int j) {
  RPoly p(Rational(1));
  for (int t = 0; t < j; ++t) p = p * RPoly::linear(a + Rational(t), b);
  return p;
}

BigInt binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

Rational continued_diagonal(HalfInt s, int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("continued_diagonal needs 0 <= k <= n");
  const int tw = s.twice;
  // Polynomials in X = 2s. The summation index i = l - (6s - n - k) runs over
  // 0..min(k, n-k); signs are fixed by the parity class of 2s.
  RPoly num;
  for (int i = 0; i <= std::min(k, n - k); ++i) {
    const int sign = parity_sign(3L * tw - n - k + i);
    RPoly term(Rational(sign) * Rational(binomial(k, i) * binomial(n - k, i)));
    term = term * falling(Rational(-k), Rational(1), i);
    term = term * falling(Rational(-k), Rational(1), n - k - i);
    term = term * falling(Rational(k - n), Rational(1), k - i);
    term = term * rising(Rational(2 - n - k), Rational(3), i);
    num = num + term;
  }
  num = num * RPoly::linear(Rational(1 - 2 * k), Rational(2)) * RPoly(Rational(parity_sign(tw - n)));
  RPoly den = falling(Rational(1 - k), Rational(2), n + 1);
  const Rational x0(tw);
  while (den(x0).is_zero()) {
    if (!num(x0).is_zero())
      throw std::domain_error("continued_diagonal: pole at s = " + s.str());
    num = num.divide_root(x0);
    den = den.divide_root(x0);
  }
  return num(x0) / den(x0);
}

EtaValue eta_continued(HalfInt s, int m, int n) {
  if (n <= LevelRange::max_level(s) && LevelRange::of(s, n).contains(m)) return {eta(s, m, n), false};
  return {Rational(parity_sign(n)) * continued_diagonal(s, n, m), true};
}

// ---------------------------------------------------------------- transported algebra

std::vector<IdentityCheck> lemma4_identities(HalfInt s, int m, int n) {
  const auto a = a_matrix(s, n);
  const LevelRange& range = a.range();
  if (m < 0 || m > n) throw std::domain_error("lemma4: need 0 <= m <= n");
  const auto& w = a.weights();
  const auto e = GaugedMatrix<Rational>::identity(range, w);
  const auto d0 = SignDiagonal::of(range).gauged<Rational>(w);
  const auto pi = RankOneProjector{range, m}.gauged<Rational>(w);
  const auto d0_hat = a * d0 * a;
  const auto pi_hat = a * pi * a;
  const Rational xi(parity_sign(m));
  // pi vanishes when m is outside the level range; eta is then irrelevant.
  const Rational et = range.contains(m) ? eta(s, m, n) : Rational(0);

  std::vector<IdentityCheck> out;
  auto run = [&](const std::string& tag, const GaugedMatrix<Rational>& x,
                 const GaugedMatrix<Rational>& y, const GaugedMatrix<Rational>& p,
                 const GaugedMatrix<Rational>& q) {
    out.push_back({tag + " p p = p", p * p == p});
    out.push_back({tag + " X X = E", x * x == e});
    out.push_back({tag + " p X = xi p", p * x == xi * p});
    out.push_back({tag + " X p = xi p", x * p == xi * p});
    out.push_back({tag + " X Y X = Y X Y", x * y * x == y * x * y});
    out.push_back({tag + " p Y X = Y X q", p * y * x == y * x * q});
    out.push_back({tag + " X q X = Y p Y", x * q * x == y * p * y});
    out.push_back({tag + " p Y p = eta p", p * y * p == et * p});
    out.push_back({tag + " p q p = eta^2 p", p * q * p == (et * et) * p});
    out.push_back({tag + " p q X = xi eta p Y", p * q * x == (xi * et) * (p * y)});
    out.push_back({tag + " X q p = xi eta Y p", x * q * p == (xi * et) * (y * p)});
  };
  run("direct:", d0, d0_hat, pi, pi_hat);
  run("swapped:", d0_hat, d0, pi_hat, pi);
  const auto braid_lhs = d0 * a * d0 * a * d0;
  const auto braid_rhs = a * d0 * a * d0 * a * d0 * a;
  out.push_back({"braid D0 A D0 A D0 = A D0 A D0 A D0 A", braid_lhs == braid_rhs});
  out.push_back({"pi A D0 A D0 A = A D0 A D0 A pi",
                 pi * a * d0 * a * d0 * a == a * d0 * a * d0 * a * pi});
  return out;
}

bool verify_lemma4(HalfInt s, int m, int n) {
  const auto checks = lemma4_identities(s, m, n);
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

}  // namespace sl2ybe
