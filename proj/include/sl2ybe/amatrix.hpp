#pragma once

// The level-n recoupling matrices A^(s,n), the sign diagonal D0, the rank-one
// projectors pi^(m,n) and the structural identities they satisfy.
//
// Every matrix acting on a level is held in a rational gauge: the true matrix
// X is U^(1/2) C U^(1/2) for the positive rational weights u_k of the level
// and a core C over the scalar field. Products stay in the gauge,
//   core(X Y) = core(X) U core(Y),
// so no square roots ever enter the arithmetic.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sl2ybe/exact.hpp"
#include "sl2ybe/matrix.hpp"

namespace sl2ybe {

/// Index range of level n for spin s: k in [0, n] for n <= 2s and
/// [n - 2s, 4s - n] for 2s <= n <= floor(3s).
struct LevelRange {
  HalfInt s;
  int n = 0;
  int k_min = 0;
  int k_max = 0;

  /// Throws std::domain_error for n outside [0, floor(3s)].
  static LevelRange of(HalfInt s, int n);
  static int max_level(HalfInt s) { return (3 * s.twice) / 2; }

  std::size_t dim() const { return static_cast<std::size_t>(k_max - k_min + 1); }
  bool contains(int k) const { return k_min <= k && k <= k_max; }
  std::size_t position(int k) const;
  std::vector<int> indices() const;
};

using Weights = std::shared_ptr<const std::vector<Rational>>;

template <class T>
class GaugedMatrix {
 public:
  GaugedMatrix() = default;
  GaugedMatrix(LevelRange range, Weights weights, Matrix<T> core)
      : range_(range), weights_(std::move(weights)), core_(std::move(core)) {}

  static GaugedMatrix identity(LevelRange range, Weights weights) {
    std::vector<T> d(range.dim(), T(1));
    return diagonal(range, std::move(weights), d);
  }
  /// The diagonal matrix diag(d_k); its core is d_k / u_k.
  static GaugedMatrix diagonal(LevelRange range, Weights weights, const std::vector<T>& d) {
    Matrix<T> core(range.dim(), range.dim());
    for (std::size_t i = 0; i < d.size(); ++i) core(i, i) = d[i] / T((*weights)[i]);
    return GaugedMatrix(range, std::move(weights), std::move(core));
  }
  static GaugedMatrix zero(LevelRange range, Weights weights) {
    return GaugedMatrix(range, std::move(weights), Matrix<T>(range.dim(), range.dim()));
  }

  const LevelRange& range() const { return range_; }
  const Weights& weights() const { return weights_; }
  const Matrix<T>& core() const { return core_; }
  /// Core entry addressed by level labels k, k'.
  const T& core_at(int k, int kp) const { return core_(range_.position(k), range_.position(kp)); }
  bool is_zero() const { return core_.is_zero(); }

  /// Exact true entry sqrt(u_k u_k') core_kk' (rational scalars only).
  SqrtRational entry(int k, int kp) const
    requires std::same_as<T, Rational>
  {
    const std::size_t i = range_.position(k);
    const std::size_t j = range_.position(kp);
    return SqrtRational::make(core_(i, j), (*weights_)[i] * (*weights_)[j]);
  }

  GaugedMatrix transpose() const { return {range_, weights_, core_.transpose()}; }

  /// Same matrix over a larger field.
  template <class U>
  GaugedMatrix<U> embed() const {
    Matrix<U> c(core_.rows(), core_.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = U(core_(i, j));
    return GaugedMatrix<U>(range_, weights_, std::move(c));
  }

  friend GaugedMatrix operator*(const GaugedMatrix& x, const GaugedMatrix& y) {
    check_gauge(x, y);
    std::vector<T> u;
    u.reserve(x.weights_->size());
    for (const auto& w : *x.weights_) u.emplace_back(w);
    return {x.range_, x.weights_, x.core_.scale_columns(u) * y.core_};
  }
  friend GaugedMatrix operator+(const GaugedMatrix& x, const GaugedMatrix& y) {
    check_gauge(x, y);
    return {x.range_, x.weights_, x.core_ + y.core_};
  }
  friend GaugedMatrix operator-(const GaugedMatrix& x, const GaugedMatrix& y) {
    check_gauge(x, y);
    return {x.range_, x.weights_, x.core_ - y.core_};
  }
  friend GaugedMatrix operator*(const T& c, const GaugedMatrix& x) {
    return {x.range_, x.weights_, c * x.core_};
  }
  friend bool operator==(const GaugedMatrix& x, const GaugedMatrix& y) {
    check_gauge(x, y);
    return x.core_ == y.core_;
  }

 private:
  static void check_gauge(const GaugedMatrix& x, const GaugedMatrix& y) {
    if (x.weights_ == y.weights_) return;
    if (!x.weights_ || !y.weights_ || *x.weights_ != *y.weights_)
      throw std::invalid_argument("gauge mismatch between level matrices");
  }

  LevelRange range_;
  Weights weights_;
  Matrix<T> core_;
};

/// D0^(n) = diag((-1)^k).
struct SignDiagonal {
  LevelRange range;
  std::vector<int> signs;

  static SignDiagonal of(const LevelRange& range);
  template <class T>
  GaugedMatrix<T> gauged(const Weights& w) const {
    std::vector<T> d(signs.begin(), signs.end());
    return GaugedMatrix<T>::diagonal(range, w, d);
  }
};

/// pi^(m,n) with entries delta_km delta_k'm; the zero matrix when m lies
/// outside the level range (the projector does not reach this level).
struct RankOneProjector {
  LevelRange range;
  int m = 0;

  bool vacuous() const { return !range.contains(m); }
  template <class T>
  GaugedMatrix<T> gauged(const Weights& w) const {
    std::vector<T> d(range.dim(), T(0));
    if (!vacuous()) d[range.position(m)] = T(1);
    return GaugedMatrix<T>::diagonal(range, w, d);
  }
};

/// Exact A^(s,n) from the explicit factorial sum, in its natural gauge:
/// u_k = (4s-2k+1) F_k^2 and core (-1)^(2s-n) * sum_l(...).
GaugedMatrix<Rational> a_matrix(HalfInt s, int n);

/// A^(s,n) entries via (-1)^(2s-n) sqrt((4s-2k+1)(4s-2k'+1)) {s s 2s-k; s 3s-n 2s-k'}.
std::vector<std::vector<SqrtRational>> a_matrix_from_sixj(HalfInt s, int n);

/// +1 or -1 when the two constructions agree up to that global sign, 0 otherwise.
int sixj_route_sign(HalfInt s, int n);

/// A symmetric and A^2 = E.
bool verify_a_properties(HalfInt s, int n);

/// A D0 A = (-1)^n D0 A D0.
bool verify_lemma3(HalfInt s, int n);

/// eta_{m,n} = (-1)^n A_mm^(s,n); m must lie in the level range.
Rational eta(HalfInt s, int m, int n);

/// (2s)!/(2s-m)! * (4s-2m+1)!/(4s-m+1)!
Rational eta_closed_form(HalfInt s, int m);

/// Diagonal entry A_kk^(s,n) as the rational function of 2s obtained from the
/// factorial sum, evaluated at the given s. Agrees with the matrix entry when
/// k is in range; extends it (removable zeros cancelled) when it is not.
/// Requires 0 <= k <= n. Throws std::domain_error at a genuine pole.
Rational continued_diagonal(HalfInt s, int n, int k);

struct EtaValue {
  Rational value;
  bool continued = false;  // true when m lies outside the level range
};

/// eta_{m,n} from the matrix when m is in range, else from continued_diagonal.
EtaValue eta_continued(HalfInt s, int m, int n);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

/// The operator relations of the E/P/P^0 algebra transported to level n under
/// both substitutions (D0, A D0 A, pi, A pi A) and the swapped one, with
/// xi = (-1)^m and eta = eta_{m,n}; includes the braid relation and the
/// pi-commutation identity.
/// When m lies outside the level range pi is the zero matrix and the relations
/// hold trivially in the pi terms.
std::vector<IdentityCheck> lemma4_identities(HalfInt s, int m, int n);
bool verify_lemma4(HalfInt s, int m, int n);

}  // namespace sl2ybe
