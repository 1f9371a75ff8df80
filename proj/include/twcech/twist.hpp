#pragma once

// Euler cocycle F, its Steenrod correction C(F) and the cup operations that
// enter the twisted differential.

#include <cstddef>

#include "twcech/coefficients.hpp"
#include "twcech/nerve.hpp"

namespace twcech {

/// Integer 2-cocycle with values in Z^n.
struct TwistCocycle {
  int n = 0;
  Cochain<IntegerVector> F;

  const IntegerVector& at(const Simplex& s) const { return F.at(s); }
  /// Component l as a scalar 2-cochain.
  Cochain<Integer> component(int l) const;
};

/// C(F): M_n^u(Z)-valued 3-cochain.
using SteenrodCochain = Cochain<UpperTriValue<Integer>>;

/// Checks lengths, support and closedness.  Throws NotClosed with the first
/// offending 3-simplex in lexicographic order.
TwistCocycle validate_twist(const Nerve& nerve, int n,
                            const Cochain<IntegerVector>& F);

/// F = n-vector supported on one triangle.
TwistCocycle point_twist(const Nerve& nerve, const Simplex& triangle,
                         const IntegerVector& value);

/// C(F)_{abcd,ij} = F_{abc,i} F_{acd,j} − F_{bcd,i} F_{abd,j}, for any 4-tuple.
UpperTriValue<Integer> steenrod_value(int n, const IntegerVector& f_abc,
                                      const IntegerVector& f_acd,
                                      const IntegerVector& f_bcd,
                                      const IntegerVector& f_abd);

SteenrodCochain steenrod_cochain(const Nerve& nerve, const TwistCocycle& twist);

/// Front p-face times back q-face: (a∪b)(t) = a(t_0..t_p)·b(t_p..t_{p+q}).
Cochain<Integer> cup_product(const Nerve& nerve, const Cochain<Integer>& a,
                             const Cochain<Integer>& b);

inline Simplex front(const Simplex& t, std::size_t len) {
  return Simplex(t.begin(), t.begin() + len);
}
inline Simplex back(const Simplex& t, std::size_t len) {
  return Simplex(t.end() - len, t.end());
}

/// φ ∪₁ F for a vector-valued (k−1)-cochain: a scalar (k+1)-cochain with
/// value ⟨φ(t_0..t_{k−1}), F(t_{k−1} t_k t_{k+1})⟩.
template <Scalar A>
Cochain<A> cup1_col1(const Nerve& nerve, const Cochain<VectorValue<A>>& phi,
                     const TwistCocycle& twist) {
  const int k = phi.degree() + 1;
  Cochain<A> out(k + 1, A{});
  if (phi.is_zero_cochain()) return out;
  for (const auto& t : nerve.simplices(k + 1)) {
    const auto& p = phi.at(front(t, k));
    if (is_zero(p)) continue;
    out.set(t, pair_vector(p, twist.at(back(t, 3))));
  }
  return out;
}

/// φ ∪₁ F for an upper-triangular (k−2)-cochain: a vector k-cochain whose
/// l-th component is Σ_{i<l} φ_il F_i − Σ_{j>l} φ_lj F_j, with
/// F = F(t_{k−2} t_{k−1} t_k).
template <Scalar A>
Cochain<VectorValue<A>> cup1_col2(const Nerve& nerve,
                                  const Cochain<UpperTriValue<A>>& phi,
                                  const TwistCocycle& twist) {
  const int k = phi.degree() + 2;
  const std::size_t n = twist.n;
  Cochain<VectorValue<A>> out(k, VectorValue<A>::zero(n));
  if (phi.is_zero_cochain()) return out;
  for (const auto& t : nerve.simplices(k)) {
    const auto& p = phi.at(front(t, k - 1));
    if (is_zero(p)) continue;
    const auto& f = twist.at(back(t, 3));
    VectorValue<A> v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        v[j] = v[j] + scale(p(i, j), f[i]);
        v[i] = v[i] - scale(p(i, j), f[j]);
      }
    out.set(t, std::move(v));
  }
  return out;
}

/// φ ∪₂ C: scalar (k+1)-cochain Σ_{i<j} φ(t_0..t_{k−2})_ij C(t_{k−2}..t_{k+1})_ij.
template <Scalar A>
Cochain<A> cup2(const Nerve& nerve, const Cochain<UpperTriValue<A>>& phi,
                const SteenrodCochain& C) {
  const int k = phi.degree() + 2;
  Cochain<A> out(k + 1, A{});
  if (phi.is_zero_cochain() || C.is_zero_cochain()) return out;
  for (const auto& t : nerve.simplices(k + 1)) {
    const auto& p = phi.at(front(t, k - 1));
    const auto& c = C.at(back(t, 4));
    if (is_zero(p) || is_zero(c)) continue;
    A sum{};
    for (std::size_t e = 0; e < p.entry_count(); ++e)
      sum = sum + scale(p.entry(e), c.entry(e));
    out.set(t, std::move(sum));
  }
  return out;
}

}  // namespace twcech
