#pragma once

// Smith normal form and the integer lattice routines built on it.

#include <optional>
#include <vector>

#include "twcech/matrix.hpp"

namespace twcech {

/// U·A·V = S with U, V unimodular and S diagonal with d_1 | d_2 | ... .
/// U_inv and V_inv are carried along so no inversion is ever needed.
struct SmithDecomposition {
  DenseMatrix U, U_inv, S, V, V_inv;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1, ..., d_rank (all positive).
  std::vector<Integer> diagonal() const;
  /// Diagonal entries greater than one.
  std::vector<Integer> invariant_factors() const;
};

/// Deterministic elimination: the pivot is the entry of smallest absolute
/// value in the remaining block, ties broken by (row, column).
SmithDecomposition smith_normal_form(const DenseMatrix& A);
SmithDecomposition smith_normal_form(const IntegerMatrix& A);

/// Columns of a matrix viewed as generators of a sublattice of Z^rows.
using Lattice = DenseMatrix;

/// Z-basis of {x : A x = 0}, as columns.
Lattice kernel_basis(const DenseMatrix& A);

/// Some integer x with A x = b, if one exists.
std::optional<DenseVector> integer_solve(const DenseMatrix& A,
                                         const DenseVector& b);

/// Basis of the lattice spanned by the columns of G.
Lattice span_basis(const DenseMatrix& G);

bool lattice_contains(const Lattice& L, const DenseVector& v);
bool lattice_subset(const Lattice& A, const Lattice& B);
bool lattice_equal(const Lattice& A, const Lattice& B);

/// Basis of {x : M x ∈ span G}.
Lattice preimage(const DenseMatrix& M, const Lattice& G);

/// Basis of span(A) ∩ span(B).
Lattice intersect(const Lattice& A, const Lattice& B);

/// Side-by-side generators of span(A) + span(B).
Lattice lattice_sum(const Lattice& A, const Lattice& B);

/// Free rank and invariant factors (> 1) of span(L) / span(K), K ⊆ L.
struct QuotientGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool operator==(const QuotientGroup&) const = default;
};
QuotientGroup quotient_group(const Lattice& L, const Lattice& K);

/// Generators of span(L) / span(K) with their orders (0 = infinite order);
/// generators of order 1 are dropped.
struct QuotientGenerator {
  DenseVector vector;
  Integer order;
};
std::vector<QuotientGenerator> quotient_generators(const Lattice& L,
                                                   const Lattice& K);

/// Canonical invariant factors of ⊕ Z/d_i (entries 1 dropped, 0 counted as
/// free rank).
QuotientGroup canonical_group(const std::vector<Integer>& orders);

DenseMatrix identity_matrix(std::size_t n);

}  // namespace twcech
