#include "sl2ybe/exact.hpp"

#include <cctype>
#include <cmath>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <vector>

namespace sl2ybe {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_text(s))
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  return BigInt(t);
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.v_ = -a.v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------- HalfInt

HalfInt HalfInt::parse(std::string_view text) {
  if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos)
    throw std::invalid_argument("spin labels must be written as p/2 or p, got '" +
                                std::string(text) + "'");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(static_cast<int>(parse_integer(text).get_si()));
  const BigInt den = parse_integer(text.substr(slash + 1));
  const BigInt num = parse_integer(text.substr(0, slash));
  if (den == 2) return from_twice(static_cast<int>(num.get_si()));
  if (den == 1) return from_int(static_cast<int>(num.get_si()));
  throw std::invalid_argument("spin label denominator must be 1 or 2: '" + std::string(text) + "'");
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

// ---------------------------------------------------------------- factorial

namespace {

struct FactorialCache {
  std::shared_mutex mutex;
  std::vector<BigInt> table{BigInt(1)};
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

}  // namespace

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative argument " + std::to_string(n));
  auto& cache = factorial_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (static_cast<std::size_t>(n) < cache.table.size()) return cache.table[n];
  }
  std::unique_lock lock(cache.mutex);
  while (cache.table.size() <= static_cast<std::size_t>(n)) {
    const auto k = static_cast<unsigned long>(cache.table.size());
    cache.table.push_back(cache.table.back() * k);
  }
  return cache.table[n];
}

// ---------------------------------------------------------------- square-free

std::pair<BigInt, BigInt> split_square(const BigInt& n) {
  if (n <= 0) throw std::domain_error("split_square needs a positive integer");
  BigInt rest = n;
  BigInt root = 1;
  BigInt free = 1;
  constexpr unsigned long kTrialBound = 1000000;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) free *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      root *= r;
    } else {
      free *= rest;
    }
  }
  return {root, free};
}

// ---------------------------------------------------------------- SqrtRational

SqrtRational SqrtRational::make(const Rational& c, const Rational& r) {
  if (r.sign() < 0) throw std::domain_error("negative radicand " + r.str());
  SqrtRational x;
  if (c.is_zero() || r.is_zero()) return x;
  // sqrt(p/q) = sqrt(p*q)/q
  const BigInt pq = r.num() * r.den();
  auto [root, free] = split_square(pq);
  x.coeff_ = c * Rational(root, r.den());
  x.radicand_ = free;
  return x;
}

Rational SqrtRational::to_rational() const {
  if (!is_rational()) throw std::domain_error("value " + str() + " is irrational");
  return coeff_;
}

Rational SqrtRational::squared() const { return coeff_ * coeff_ * Rational(radicand_); }

double SqrtRational::to_double() const {
  return coeff_.to_double() * std::sqrt(radicand_.get_d());
}

std::string SqrtRational::str() const {
  if (is_rational()) return coeff_.str();
  return coeff_.str() + "*sqrt(" + radicand_.get_str() + ")";
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.radicand_ == b.radicand_) {
    SqrtRational x;
    x.coeff_ = a.coeff_ * b.coeff_ * Rational(a.radicand_);
    return x;
  }
  return SqrtRational::make(a.coeff_ * b.coeff_, Rational(a.radicand_ * b.radicand_));
}

SqrtRational operator/(const SqrtRational& a, const SqrtRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  // 1/(c sqrt r) = sqrt(r)/(c r)
  SqrtRational inv;
  inv.coeff_ = (b.coeff_ * Rational(b.radicand_)).inverse();
  inv.radicand_ = b.radicand_;
  return a * inv;
}

SqrtRational operator+(const SqrtRational& a, const SqrtRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand_ != b.radicand_)
    throw std::invalid_argument("cannot add " + a.str() + " and " + b.str() +
                                ": radicands differ");
  SqrtRational x;
  x.coeff_ = a.coeff_ + b.coeff_;
  x.radicand_ = x.coeff_.is_zero() ? BigInt(1) : a.radicand_;
  return x;
}

SqrtRational operator-(const SqrtRational& a) {
  SqrtRational x = a;
  x.coeff_ = -a.coeff_;
  return x;
}

SqrtRational operator-(const SqrtRational& a, const SqrtRational& b) { return a + (-b); }

std::ostream& operator<<(std::ostream& os, const SqrtRational& x) { return os << x.str(); }

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& r) : a_(a) {
  const SqrtRational root = SqrtRational::make(b, r);
  if (root.is_rational()) {
    a_ += root.coeff();
  } else {
    b_ = root.coeff();
    d_ = root.radicand();
  }
}

QuadExt QuadExt::sqrt(const Rational& r) { return QuadExt(Rational(0), Rational(1), r); }

Rational QuadExt::to_rational() const {
  if (!is_rational()) throw std::domain_error("value " + str() + " is irrational");
  return a_;
}

QuadExt QuadExt::conjugate() const {
  QuadExt x = *this;
  x.b_ = -b_;
  return x;
}

Rational QuadExt::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt " + d_.get_str() + ")");
  QuadExt x = conjugate();
  x.a_ /= n;
  x.b_ /= n;
  return x;
}

double QuadExt::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d()); }

std::string QuadExt::str() const {
  if (is_rational()) return a_.str();
  std::string s;
  if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
  return s + b_.str() + "*sqrt(" + d_.get_str() + ")";
}

void QuadExt::adopt_field(const QuadExt& o) {
  if (o.d_ == 1 || o.d_ == d_) return;
  if (d_ != 1)
    throw std::invalid_argument("mixed quadratic fields Q(sqrt " + d_.get_str() + ") and Q(sqrt " +
                                o.d_.get_str() + ")");
  d_ = o.d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  adopt_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  adopt_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  adopt_field(o);
  const Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_rational()) {
    if (o.a_.is_zero()) throw std::domain_error("division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

QuadExt operator-(const QuadExt& x) {
  QuadExt y = x;
  y.a_ = -x.a_;
  y.b_ = -x.b_;
  return y;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.d_ == y.d_;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

QuadExt quad_ext_arith(const QuadExt& x, const QuadExt& y, QuadOp op) {
  switch (op) {
    case QuadOp::add:
      return x + y;
    case QuadOp::mul:
      return x * y;
    case QuadOp::inv:
      return x.inverse();
  }
  throw std::invalid_argument("unknown QuadExt operation");
}

}  // namespace sl2ybe
