#pragma once

// Dense univariate polynomials and rational functions over an exact field
// (Rational or QuadExt).

#include <string>
#include <utility>
#include <vector>

#include "sl2ybe/exact.hpp"

namespace sl2ybe {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) : c_{std::move(constant)} { trim(); }  // NOLINT
  explicit Polynomial(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

  /// x - root
  static Polynomial linear_root(const T& root) { return Polynomial(std::vector<T>{-root, T(1)}); }
  /// a + b*x
  static Polynomial linear(const T& a, const T& b) { return Polynomial(std::vector<T>{a, b}); }

  const std::vector<T>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Synthetic division by (x - root); the remainder must vanish.
  Polynomial divide_root(const T& root) const {
    if (c_.empty()) return {};
    std::vector<T> q(c_.size() - 1, T(0));
    T carry(0);
    for (std::size_t i = c_.size(); i-- > 1;) {
      carry = c_[i] + carry * root;
      q[i - 1] = carry;
    }
    if (!(c_[0] + carry * root).is_zero())
      throw std::domain_error("divide_root: not a root");
    return Polynomial(std::move(q));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> r = a.c_;
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      std::string term = c_[i].str();
      if (!c_[i].is_rational() || term.find('/') != std::string::npos) term = "(" + term + ")";
      if (i > 0) term += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
      if (!s.empty()) s += " + ";
      s += term;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
class RationalFunction {
 public:
  RationalFunction() : num_(T(0)), den_(T(1)) {}
  RationalFunction(T constant) : num_(std::move(constant)), den_(T(1)) {}  // NOLINT
  RationalFunction(Polynomial<T> num, Polynomial<T> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  }

  const Polynomial<T>& numerator() const { return num_; }
  const Polynomial<T>& denominator() const { return den_; }

  /// Evaluation; a vanishing denominator raises EvaluationError naming it.
  T operator()(const T& x) const {
    const T d = den_(x);
    if (d.is_zero())
      throw EvaluationError("pole: denominator " + den_.str() + " vanishes at " + x.str());
    return num_(x) / d;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }

  std::string str(const std::string& var = "x") const {
    if (den_ == Polynomial<T>(T(1))) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  Polynomial<T> num_;
  Polynomial<T> den_;
};

}  // namespace sl2ybe
