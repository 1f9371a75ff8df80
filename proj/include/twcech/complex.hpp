#pragma once

// The three-column complex C^k_F = C^k(Z) ⊕ C^{k−1}(Z^n) ⊕ C^{k−2}(M_n^u)
// with the twisted differential D_F, and its two-column truncation.

#include <optional>
#include <string>
#include <vector>

#include "twcech/matrix.hpp"
#include "twcech/nerve.hpp"
#include "twcech/twist.hpp"

namespace twcech {

enum class ScalarKind { Z, Q, QZ };

std::string to_string(ScalarKind s);
ScalarKind parse_scalar(const std::string& text);

/// Everything D_F needs: nerve, twist and C(F).
struct TwistContext {
  Nerve nerve;
  TwistCocycle twist;
  SteenrodCochain steenrod;

  TwistContext(Nerve nerve, TwistCocycle twist);
  int n() const { return twist.n; }
};

template <typename A>
struct DimRedCochain {
  int degree = 0;
  Cochain<A> col0;
  std::optional<Cochain<VectorValue<A>>> col1;
  std::optional<Cochain<UpperTriValue<A>>> col2;

  static DimRedCochain zero(int degree, int n, int columns = 3) {
    DimRedCochain c;
    c.degree = degree;
    c.col0 = Cochain<A>(degree, A{});
    if (degree >= 1)
      c.col1 = Cochain<VectorValue<A>>(degree - 1, VectorValue<A>::zero(n));
    if (degree >= 2 && columns >= 3)
      c.col2 = Cochain<UpperTriValue<A>>(degree - 2, UpperTriValue<A>::zero(n));
    return c;
  }

  bool operator==(const DimRedCochain& o) const {
    return degree == o.degree && col0 == o.col0 && col1 == o.col1 &&
           col2 == o.col2;
  }
};

/// D_F on a triple.  `columns` = 2 drops the third column (two-column
/// complex).  Throws DegreeMismatch on inconsistent column degrees.
template <Scalar A>
DimRedCochain<A> d_f(const TwistContext& ctx, const DimRedCochain<A>& c,
                     int columns = 3) {
  const int k = c.degree;
  const int n = ctx.n();
  auto expect = [&](bool present, int have, int want, const char* name) {
    if (present && have != want)
      throw DegreeMismatch(std::string(name) + " has degree " +
                           std::to_string(have) + " in a degree " +
                           std::to_string(k) + " triple");
  };
  expect(true, c.col0.degree(), k, "column 0");
  expect(c.col1.has_value(), c.col1 ? c.col1->degree() : 0, k - 1, "column 1");
  expect(c.col2.has_value(), c.col2 ? c.col2->degree() : 0, k - 2, "column 2");
  if (c.col1.has_value() != (k >= 1) ||
      c.col2.has_value() != (k >= 2 && columns >= 3))
    throw DegreeMismatch("triple of degree " + std::to_string(k) +
                         " has the wrong set of columns");

  const Integer odd_sign = (k % 2 == 0) ? Integer(-1) : Integer(1);  // (−1)^{k+1}
  DimRedCochain<A> out = DimRedCochain<A>::zero(k + 1, n, columns);
  out.col0 = cech_differential(ctx.nerve, c.col0);
  if (c.col1) {
    out.col0 = out.col0 + cup1_col1(ctx.nerve, *c.col1, ctx.twist) * odd_sign;
    out.col1 = cech_differential(ctx.nerve, *c.col1);
  }
  if (c.col2) {
    out.col0 = out.col0 + cup2(ctx.nerve, *c.col2, ctx.steenrod) * odd_sign;
    out.col1 = *out.col1 + cup1_col2(ctx.nerve, *c.col2, ctx.twist) * (-odd_sign);
    out.col2 = cech_differential(ctx.nerve, *c.col2);
  }
  return out;
}

/// One basis vector of C^k_F: column, simplex and component (vector entry
/// for column 1, packed upper-triangular position for column 2).
struct BasisElement {
  int column = 0;
  Simplex simplex;
  int component = 0;

  bool operator==(const BasisElement&) const = default;
};

std::vector<BasisElement> cochain_basis(const Nerve& nerve, int n, int k,
                                        int columns = 3);

/// A finite cochain complex of free abelian groups: d[k] maps C^k → C^{k+1}.
struct CochainComplex {
  std::vector<std::size_t> dims;
  std::vector<IntegerMatrix> d;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  /// d_k, or the zero map for k < 0.  Throws DegreeOutOfRange past the top.
  IntegerMatrix differential(int k) const;
  std::size_t dim(int k) const;
};

/// Assembled D_F in lexicographic bases for degrees 0..kmax.
struct DimRedComplex {
  TwistContext context;
  ScalarKind scalar = ScalarKind::Z;
  int columns = 3;
  std::vector<std::vector<BasisElement>> bases;
  CochainComplex chain;

  const Nerve& nerve() const { return context.nerve; }
  int n() const { return context.n(); }
  int kmax() const { return chain.top_degree(); }

  template <typename A>
  std::vector<A> coordinates(const DimRedCochain<A>& c) const;
  template <typename A>
  DimRedCochain<A> cochain(int k, const std::vector<A>& coords) const;
};

DimRedComplex assemble_complex(const Nerve& nerve, const TwistCocycle& twist,
                               ScalarKind scalar, int kmax);
DimRedComplex assemble_two_column(const Nerve& nerve, const TwistCocycle& twist,
                                  ScalarKind scalar, int kmax);

/// Plain Čech complex with integer coefficients (degrees 0..kmax).
CochainComplex cech_complex(const Nerve& nerve, int kmax);

template <typename A>
std::vector<A> DimRedComplex::coordinates(const DimRedCochain<A>& c) const {
  if (c.degree < 0 || c.degree > kmax())
    throw DegreeOutOfRange("degree " + std::to_string(c.degree) +
                           " outside the assembled range");
  const auto& basis = bases[c.degree];
  std::vector<A> x(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    if (b.column == 0)
      x[i] = c.col0.at(b.simplex);
    else if (b.column == 1)
      x[i] = c.col1->at(b.simplex)[b.component];
    else
      x[i] = c.col2->at(b.simplex).entry(b.component);
  }
  return x;
}

template <typename A>
DimRedCochain<A> DimRedComplex::cochain(int k,
                                        const std::vector<A>& coords) const {
  if (k < 0 || k > kmax())
    throw DegreeOutOfRange("degree " + std::to_string(k) +
                           " outside the assembled range");
  const auto& basis = bases[k];
  if (coords.size() != basis.size())
    throw LengthMismatch("coordinate vector of length " +
                         std::to_string(coords.size()) + " for dimension " +
                         std::to_string(basis.size()));
  DimRedCochain<A> c = DimRedCochain<A>::zero(k, n(), columns);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    if (is_zero(coords[i])) continue;
    if (b.column == 0) {
      c.col0.set(b.simplex, coords[i]);
    } else if (b.column == 1) {
      auto v = c.col1->at(b.simplex);
      v[b.component] = coords[i];
      c.col1->set(b.simplex, v);
    } else {
      auto v = c.col2->at(b.simplex);
      v.entry(b.component) = coords[i];
      c.col2->set(b.simplex, v);
    }
  }
  return c;
}

}  // namespace twcech
