#include "twcech/twist.hpp"

namespace twcech {

Cochain<Integer> TwistCocycle::component(int l) const {
  Cochain<Integer> c(2, Integer(0));
  for (const auto& [s, v] : F.entries()) c.set(s, v[l]);
  return c;
}

TwistCocycle validate_twist(const Nerve& nerve, int n,
                            const Cochain<IntegerVector>& F) {
  if (n < 0) throw SchemaError("negative torus rank");
  if (F.degree() != 2)
    throw DegreeMismatch("twist must have degree 2, got " +
                         std::to_string(F.degree()));
  check_support(nerve, F);
  Cochain<IntegerVector> f(2, IntegerVector::zero(n));
  for (const auto& [s, v] : F.entries()) {
    if (static_cast<int>(v.size()) != n)
      throw LengthMismatch("twist value on " + to_string(s) + " has length " +
                           std::to_string(v.size()) + ", expected " +
                           std::to_string(n));
    f.set(s, v);
  }
  const auto dF = cech_differential(nerve, f);
  for (const auto& [s, v] : dF.entries())
    for (int l = 0; l < n; ++l)
      if (v[l] != 0) throw NotClosed(s, l, v[l].str());
  return TwistCocycle{n, std::move(f)};
}

TwistCocycle point_twist(const Nerve& nerve, const Simplex& triangle,
                         const IntegerVector& value) {
  Cochain<IntegerVector> F(2, IntegerVector::zero(value.size()));
  F.set(triangle, value);
  return validate_twist(nerve, static_cast<int>(value.size()), F);
}

UpperTriValue<Integer> steenrod_value(int n, const IntegerVector& f_abc,
                                      const IntegerVector& f_acd,
                                      const IntegerVector& f_bcd,
                                      const IntegerVector& f_abd) {
  UpperTriValue<Integer> c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      c(i, j) = f_abc[i] * f_acd[j] - f_bcd[i] * f_abd[j];
  return c;
}

SteenrodCochain steenrod_cochain(const Nerve& nerve, const TwistCocycle& twist) {
  SteenrodCochain C(3, UpperTriValue<Integer>::zero(twist.n));
  if (twist.n < 2) return C;
  for (const auto& t : nerve.simplices(3)) {
    const int a = t[0], b = t[1], c = t[2], d = t[3];
    C.set(t, steenrod_value(twist.n, twist.at({a, b, c}), twist.at({a, c, d}),
                            twist.at({b, c, d}), twist.at({a, b, d})));
  }
  return C;
}

Cochain<Integer> cup_product(const Nerve& nerve, const Cochain<Integer>& a,
                             const Cochain<Integer>& b) {
  const int p = a.degree(), q = b.degree();
  Cochain<Integer> out(p + q, Integer(0));
  for (const auto& t : nerve.simplices(p + q)) {
    const auto& x = a.at(front(t, p + 1));
    if (x == 0) continue;
    out.set(t, x * b.at(back(t, q + 1)));
  }
  return out;
}

}  // namespace twcech
