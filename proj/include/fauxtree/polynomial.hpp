#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fauxtree {

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial with exact coefficients, lowest power first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree()` of it is -1.
template <class T>
class Polynomial {
 public:
  using Scalar = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Polynomial(const T& constant) : c_{constant} { trim(); }
  template <std::integral I>
  explicit Polynomial(I constant) : c_{T(static_cast<long>(constant))} { trim(); }

  static Polynomial monomial(const T& coeff, int power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }
  /// x - r
  static Polynomial linear_root(const T& r) { return Polynomial(std::vector<T>{T(-r), T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : T(0); }
  const T& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Horner evaluation; U must be constructible from T (e.g. mpq_class from mpz_class).
  template <class U>
  U operator()(const U& point) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= point;
      acc += U(*it);
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Polynomial<mpz_class>;
using RatPoly = Polynomial<mpq_class>;

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

/// Quotient of an exact division over a field; throws InexactDivision when
/// the remainder is nonzero.
template <class T>
Polynomial<T> divexact(const Polynomial<T>& num, const Polynomial<T>& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.degree() < den.degree()) {
    if (num.is_zero()) return {};
    throw InexactDivision("polynomial division leaves a remainder");
  }
  std::vector<T> rem = num.coeffs();
  const int dd = den.degree();
  std::vector<T> quot(num.degree() - dd + 1, T(0));
  for (int k = num.degree() - dd; k >= 0; --k) {
    T q = rem[k + dd] / den.leading();
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * den.coeffs()[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw InexactDivision("polynomial division leaves a remainder");
  }
  return Polynomial<T>(std::move(quot));
}

/// Coefficients low-to-high, each as "num/den" in lowest terms.
std::vector<std::string> coefficient_strings(const RatPoly& p);
std::vector<std::string> coefficient_strings(const IntPoly& p);
/// Human-readable form such as "x^4 - x^2".
std::string to_string(const RatPoly& p);
std::string to_string(const IntPoly& p);

}  // namespace fauxtree
