#pragma once

// Exact scalars used throughout the library: arbitrary-precision rationals,
// half-integer spin labels, square-root-carrying scalars c*sqrt(r) and the
// quadratic fields Q(sqrt d).

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace sl2ybe {

using BigInt = mpz_class;

/// Raised when a rational function or coefficient is evaluated at a pole.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v) {}         // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  static Rational from_mpq(const mpq_class& v) {
    Rational r;
    r.v_ = v;
    r.v_.canonicalize();
    return r;
  }

  /// Accepts "p", "-p" or "p/q"; rejects decimal notation.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_rational() const { return true; }
  Rational abs() const;
  Rational inverse() const;
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (-1)^k for any integer k.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Spin and level labels stored as twice their value.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  static constexpr HalfInt from_int(int v) { return HalfInt{2 * v}; }
  /// Accepts "p/2" or an integer string.
  static HalfInt parse(std::string_view text);

  bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return Rational(BigInt(twice), BigInt(2)); }
  /// Integer part, floor(value).
  int floor() const { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }
  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

/// n! with a process-wide memo table. Thread-safe.
BigInt factorial(long n);

/// Writes n = root^2 * free with free square-free; requires n > 0.
/// Trial division covers every prime p with p^2 <= n up to 10^6; a cofactor
/// left above that bound is kept whole unless it is a perfect square.
std::pair<BigInt, BigInt> split_square(const BigInt& n);

/// Value coeff * sqrt(radicand) with radicand a square-free positive integer.
/// Not closed under addition: sums require matching radicands (zero matches all).
class SqrtRational {
 public:
  SqrtRational() = default;
  SqrtRational(const Rational& c) : coeff_(c) {}  // NOLINT(google-explicit-constructor)

  /// Canonical form of c*sqrt(r); r < 0 is a domain error.
  static SqrtRational make(const Rational& c, const Rational& r);

  const Rational& coeff() const { return coeff_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return radicand_ == 1; }
  /// Throws std::domain_error unless the value is rational.
  Rational to_rational() const;
  /// coeff^2 * radicand.
  Rational squared() const;
  int sign() const { return coeff_.sign(); }
  double to_double() const;
  std::string str() const;

  friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);
  friend SqrtRational operator/(const SqrtRational& a, const SqrtRational& b);
  friend SqrtRational operator+(const SqrtRational& a, const SqrtRational& b);
  friend SqrtRational operator-(const SqrtRational& a, const SqrtRational& b);
  friend SqrtRational operator-(const SqrtRational& a);
  friend bool operator==(const SqrtRational& a, const SqrtRational& b) = default;

 private:
  Rational coeff_;
  BigInt radicand_ = 1;
};

std::ostream& operator<<(std::ostream& os, const SqrtRational& x);

/// Element a + b*sqrt(d) of Q(sqrt d), d a square-free positive integer.
/// d == 1 encodes plain Q and mixes freely with any other field; two
/// operands over different fields d != 1 are a usage error.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  QuadExt(I a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  /// a + b*sqrt(r) for a rational r >= 0, brought to canonical square-free form.
  QuadExt(const Rational& a, const Rational& b, const Rational& r);

  /// sqrt(r) as an element of Q(sqrt r).
  static QuadExt sqrt(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& d() const { return d_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  Rational to_rational() const;
  QuadExt conjugate() const;
  /// a^2 - d*b^2.
  Rational norm() const;
  QuadExt inverse() const;
  double to_double() const;
  std::string str() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x);
  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  void adopt_field(const QuadExt& o);

  Rational a_;
  Rational b_;
  BigInt d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

enum class QuadOp { add, mul, inv };

/// Field operation dispatcher; `y` is ignored for inv.
QuadExt quad_ext_arith(const QuadExt& x, const QuadExt& y, QuadOp op);

}  // namespace sl2ybe
