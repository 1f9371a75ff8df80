#pragma once

// Nerve of a finite cover and cochains on it.
//
// Simplices are strictly increasing vertex tuples.  A cochain stores values
// on the k-simplices of one degree; absent keys read as zero.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "twcech/coefficients.hpp"

namespace twcech {

using Simplex = std::vector<int>;

std::string to_string(const Simplex& s);

/// Remove the i-th vertex.
Simplex face(const Simplex& s, std::size_t i);

class Nerve {
 public:
  Nerve() = default;

  /// Face closure of the given facets.  Throws EmptyInput if none are given.
  static Nerve from_facets(const std::vector<std::vector<int>>& facets);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  /// Highest dimension present, -1 for the empty nerve.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// k-simplices in lexicographic order; empty outside [0, dimension()].
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }

  bool contains(const Simplex& s) const;
  /// Position of s within simplices(dim s).  Throws NotInNerve.
  std::size_t index_of(const Simplex& s) const;

  /// Connected component of a vertex, labelled 0, 1, ... by smallest vertex.
  int component(int vertex) const;
  int component_count() const { return component_count_; }

 private:
  std::vector<int> vertices_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::map<int, int> component_;
  int component_count_ = 0;
};

/// Lexicographically ordered k-simplices.
std::vector<Simplex> enumerate_simplices(const Nerve& nerve, int k);

/// Degree-k cochain with values in A.
template <typename A>
class Cochain {
 public:
  Cochain() = default;
  Cochain(int degree, A zero) : degree_(degree), zero_(std::move(zero)) {}

  int degree() const { return degree_; }
  const A& zero() const { return zero_; }

  const A& at(const Simplex& s) const {
    auto it = values_.find(s);
    return it == values_.end() ? zero_ : it->second;
  }

  void set(const Simplex& s, A value) {
    check_degree(s);
    if (is_zero(value))
      values_.erase(s);
    else
      values_[s] = std::move(value);
  }

  void add(const Simplex& s, const A& value) { set(s, at(s) + value); }

  const std::map<Simplex, A>& entries() const { return values_; }
  bool is_zero_cochain() const { return values_.empty(); }

  Cochain operator+(const Cochain& o) const {
    Cochain r(*this);
    for (const auto& [s, v] : o.values_) r.add(s, v);
    return r;
  }
  Cochain operator-() const {
    Cochain r(degree_, zero_);
    for (const auto& [s, v] : values_) r.values_[s] = -v;
    return r;
  }
  Cochain operator-(const Cochain& o) const { return *this + (-o); }
  Cochain operator*(const Integer& k) const {
    Cochain r(degree_, zero_);
    for (const auto& [s, v] : values_) r.set(s, scale(v, k));
    return r;
  }
  bool operator==(const Cochain& o) const {
    return degree_ == o.degree_ && values_ == o.values_;
  }

 private:
  void check_degree(const Simplex& s) const {
    if (static_cast<int>(s.size()) != degree_ + 1)
      throw DegreeMismatch("simplex " + to_string(s) +
                           " in a cochain of degree " +
                           std::to_string(degree_));
  }

  int degree_ = 0;
  A zero_{};
  std::map<Simplex, A> values_;
};

/// Throws NotInNerve unless every key of c is a simplex of the nerve.
template <typename A>
void check_support(const Nerve& nerve, const Cochain<A>& c) {
  for (const auto& entry : c.entries())
    if (!nerve.contains(entry.first))
      throw NotInNerve("cochain value on " + to_string(entry.first) +
                       ", which is not a simplex of the nerve");
}

/// (∂c)(t) = Σ_i (−1)^i c(t without t_i).
template <typename A>
Cochain<A> cech_differential(const Nerve& nerve, const Cochain<A>& c) {
  check_support(nerve, c);
  Cochain<A> out(c.degree() + 1, c.zero());
  for (const auto& t : nerve.simplices(c.degree() + 1)) {
    A sum = c.zero();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const A& v = c.at(face(t, i));
      sum = (i % 2 == 0) ? sum + v : sum - v;
    }
    out.set(t, std::move(sum));
  }
  return out;
}

/// Sign of the permutation sorting t, 0 if t has a repeated index.
int sorting_sign(const std::vector<int>& t);

/// Value on an arbitrary index tuple: sign(sort)·c(sorted t), or zero if t
/// repeats an index.  Throws NotInNerve if the indices do not span a simplex.
template <typename A>
A alternating_value(const Nerve& nerve, const Cochain<A>& c,
                    const std::vector<int>& t) {
  Simplex sorted(t);
  std::sort(sorted.begin(), sorted.end());
  Simplex distinct(sorted);
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (!nerve.contains(distinct))
    throw NotInNerve("indices " + to_string(t) + " do not span a simplex");
  const int sign = sorting_sign(t);
  if (sign == 0) return c.zero();
  if (static_cast<int>(t.size()) != c.degree() + 1)
    throw DegreeMismatch("tuple " + to_string(t) + " for a cochain of degree " +
                         std::to_string(c.degree()));
  return sign > 0 ? c.at(sorted) : -c.at(sorted);
}

}  // namespace twcech
