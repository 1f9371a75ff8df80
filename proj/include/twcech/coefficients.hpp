#pragma once

/**
 * Exact coefficient arithmetic.
 *
 * Every coefficient group is written additively: Z (Integer), Q (Rational)
 * and the circle Q/Z (Circle).  Vector and strictly-upper-triangular matrix
 * values are built on top of any of the three scalars.  The only operation
 * required of a coefficient group besides the abelian group structure is the
 * integer multiple `a * k`, which is what every cup product needs.
 */

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "twcech/errors.hpp"

namespace twcech {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Largest integer not exceeding q.
Integer floor(const Rational& q);

/// Representative of q mod 1 in [0, 1).
Rational fractional_part(const Rational& q);

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Element of Q/Z stored as its representative in [0, 1).
class Circle {
 public:
  Circle() = default;
  explicit Circle(const Rational& q) : value_(fractional_part(q)) {}

  const Rational& value() const { return value_; }

  Circle operator+(const Circle& o) const { return Circle(value_ + o.value_); }
  Circle operator-(const Circle& o) const { return Circle(value_ - o.value_); }
  Circle operator-() const { return Circle(-value_); }
  Circle operator*(const Integer& k) const {
    return Circle(value_ * Rational(k));
  }
  Circle& operator+=(const Circle& o) { return *this = *this + o; }
  Circle& operator-=(const Circle& o) { return *this = *this - o; }

  bool operator==(const Circle& o) const { return value_ == o.value_; }

 private:
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Circle& c);

/// Canonical element of Q/Z represented by q.
inline Circle circle_reduce(const Rational& q) { return Circle(q); }

inline bool is_zero(const Integer& a) { return a == 0; }
inline bool is_zero(const Rational& a) { return a == 0; }
inline bool is_zero(const Circle& a) { return a.value() == 0; }

/// Integer multiple k·a.
inline Integer scale(const Integer& a, const Integer& k) { return a * k; }
inline Rational scale(const Rational& a, const Integer& k) {
  return a * Rational(k);
}
inline Circle scale(const Circle& a, const Integer& k) { return a * k; }

/// Scalar coefficient groups.
template <typename A>
concept Scalar = std::same_as<A, Integer> || std::same_as<A, Rational> ||
                 std::same_as<A, Circle>;

/// Fixed-length vector of coefficients, e.g. Z^n or (Q/Z)^n.
template <typename A>
class VectorValue {
 public:
  VectorValue() = default;
  explicit VectorValue(std::size_t n) : v_(n) {}
  VectorValue(std::initializer_list<A> init) : v_(init) {}
  explicit VectorValue(std::vector<A> v) : v_(std::move(v)) {}

  static VectorValue zero(std::size_t n) { return VectorValue(n); }
  static VectorValue unit(std::size_t n, std::size_t l) {
    VectorValue e(n);
    e.v_[l] = A(1);
    return e;
  }

  std::size_t size() const { return v_.size(); }
  const A& operator[](std::size_t i) const { return v_[i]; }
  A& operator[](std::size_t i) { return v_[i]; }
  const std::vector<A>& values() const { return v_; }

  VectorValue operator+(const VectorValue& o) const {
    check(o);
    VectorValue r(*this);
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = r.v_[i] + o.v_[i];
    return r;
  }
  VectorValue operator-(const VectorValue& o) const {
    check(o);
    VectorValue r(*this);
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = r.v_[i] - o.v_[i];
    return r;
  }
  VectorValue operator-() const {
    VectorValue r(*this);
    for (auto& x : r.v_) x = -x;
    return r;
  }
  VectorValue operator*(const Integer& k) const {
    VectorValue r(*this);
    for (auto& x : r.v_) x = scale(x, k);
    return r;
  }
  VectorValue& operator+=(const VectorValue& o) { return *this = *this + o; }
  VectorValue& operator-=(const VectorValue& o) { return *this = *this - o; }
  bool operator==(const VectorValue& o) const { return v_ == o.v_; }

 private:
  void check(const VectorValue& o) const {
    if (o.v_.size() != v_.size())
      throw LengthMismatch("vector values of length " +
                           std::to_string(v_.size()) + " and " +
                           std::to_string(o.v_.size()));
  }

  std::vector<A> v_;
};

/// Position of the entry (i, j), 0 <= i < j < n, in the packed storage.
constexpr std::size_t upper_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

constexpr std::size_t upper_rank(std::size_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

/**
 * Strictly upper triangular n×n matrix with entries in A, i.e. an element of
 * M_n^u(A).  Only the n(n-1)/2 entries above the diagonal are stored.
 */
template <typename A>
class UpperTriValue {
 public:
  UpperTriValue() = default;
  explicit UpperTriValue(std::size_t n) : n_(n), e_(upper_rank(n)) {}

  static UpperTriValue zero(std::size_t n) { return UpperTriValue(n); }

  std::size_t dimension() const { return n_; }
  std::size_t entry_count() const { return e_.size(); }

  const A& operator()(std::size_t i, std::size_t j) const {
    return e_[upper_index(i, j, n_)];
  }
  A& operator()(std::size_t i, std::size_t j) {
    return e_[upper_index(i, j, n_)];
  }
  const A& entry(std::size_t p) const { return e_[p]; }
  A& entry(std::size_t p) { return e_[p]; }

  UpperTriValue operator+(const UpperTriValue& o) const {
    check(o);
    UpperTriValue r(*this);
    for (std::size_t p = 0; p < e_.size(); ++p) r.e_[p] = r.e_[p] + o.e_[p];
    return r;
  }
  UpperTriValue operator-(const UpperTriValue& o) const {
    check(o);
    UpperTriValue r(*this);
    for (std::size_t p = 0; p < e_.size(); ++p) r.e_[p] = r.e_[p] - o.e_[p];
    return r;
  }
  UpperTriValue operator-() const {
    UpperTriValue r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
  }
  UpperTriValue operator*(const Integer& k) const {
    UpperTriValue r(*this);
    for (auto& x : r.e_) x = scale(x, k);
    return r;
  }
  UpperTriValue& operator+=(const UpperTriValue& o) {
    return *this = *this + o;
  }
  UpperTriValue& operator-=(const UpperTriValue& o) {
    return *this = *this - o;
  }
  bool operator==(const UpperTriValue& o) const {
    return n_ == o.n_ && e_ == o.e_;
  }

 private:
  void check(const UpperTriValue& o) const {
    if (o.n_ != n_)
      throw LengthMismatch("upper triangular values of size " +
                           std::to_string(n_) + " and " +
                           std::to_string(o.n_));
  }

  std::size_t n_ = 0;
  std::vector<A> e_;
};

template <typename A>
bool is_zero(const VectorValue<A>& v) {
  for (const auto& x : v.values())
    if (!is_zero(x)) return false;
  return true;
}

template <typename A>
bool is_zero(const UpperTriValue<A>& m) {
  for (std::size_t p = 0; p < m.entry_count(); ++p)
    if (!is_zero(m.entry(p))) return false;
  return true;
}

template <typename A>
VectorValue<A> scale(const VectorValue<A>& v, const Integer& k) {
  return v * k;
}

template <typename A>
UpperTriValue<A> scale(const UpperTriValue<A>& m, const Integer& k) {
  return m * k;
}

using IntegerVector = VectorValue<Integer>;
using RationalVector = VectorValue<Rational>;

/// Σ_l φ_l F_l, the pairing of an A^n value with an integer vector.
template <Scalar A>
A pair_vector(const VectorValue<A>& phi, const IntegerVector& f) {
  if (phi.size() != f.size())
    throw LengthMismatch("pair_vector: lengths " + std::to_string(phi.size()) +
                         " and " + std::to_string(f.size()));
  A sum{};
  for (std::size_t l = 0; l < phi.size(); ++l) sum = sum + scale(phi[l], f[l]);
  return sum;
}

/// Σ_{i<j} m_ij u_i v_j.
template <Scalar A>
A mackey_bilinear(const UpperTriValue<A>& m, const IntegerVector& u,
                  const IntegerVector& v) {
  const std::size_t n = m.dimension();
  if (u.size() != n || v.size() != n)
    throw LengthMismatch("mackey_bilinear: matrix of size " +
                         std::to_string(n) + " paired with vectors of length " +
                         std::to_string(u.size()) + " and " +
                         std::to_string(v.size()));
  A sum{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sum = sum + scale(m(i, j), u[i] * v[j]);
  return sum;
}

/// Σ_{i<j} m_ij (u_i v_j − v_i u_j).
template <Scalar A>
A mackey_antisym(const UpperTriValue<A>& m, const IntegerVector& u,
                 const IntegerVector& v) {
  return mackey_bilinear(m, u, v) - mackey_bilinear(m, v, u);
}

/// Parse "p/q", "p" or "p/q mod 1" style strings.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Circle& c);

}  // namespace twcech
