#include "twcech/smith.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace twcech {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Floor division toward −∞ keeps remainders non-negative.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

struct Eliminator {
  DenseMatrix S, U, U_inv, V, V_inv;

  explicit Eliminator(const DenseMatrix& A)
      : S(A),
        U(identity_matrix(A.rows())),
        U_inv(identity_matrix(A.rows())),
        V(identity_matrix(A.cols())),
        V_inv(identity_matrix(A.cols())) {}

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    S.row(i).swap(S.row(j));
    U.row(i).swap(U.row(j));
    U_inv.col(i).swap(U_inv.col(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    S.col(i).swap(S.col(j));
    V.col(i).swap(V.col(j));
    V_inv.row(i).swap(V_inv.row(j));
  }
  // row_i += c·row_j
  void add_row(Eigen::Index i, Eigen::Index j, const Integer& c) {
    if (c == 0) return;
    S.row(i) += S.row(j) * c;
    U.row(i) += U.row(j) * c;
    U_inv.col(j) -= U_inv.col(i) * c;
  }
  // col_i += c·col_j
  void add_col(Eigen::Index i, Eigen::Index j, const Integer& c) {
    if (c == 0) return;
    S.col(i) += S.col(j) * c;
    V.col(i) += V.col(j) * c;
    V_inv.row(j) -= V_inv.row(i) * c;
  }
  void negate_row(Eigen::Index i) {
    S.row(i) = -S.row(i);
    U.row(i) = -U.row(i);
    U_inv.col(i) = -U_inv.col(i);
  }

  /// Smallest nonzero |entry| in the block from (t, t); false if all zero.
  bool find_pivot(Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) const {
    bool found = false;
    Integer best;
    for (Eigen::Index i = t; i < S.rows(); ++i)
      for (Eigen::Index j = t; j < S.cols(); ++j) {
        if (S(i, j) == 0) continue;
        const Integer a = abs_value(S(i, j));
        if (!found || a < best) {
          best = a;
          pr = i;
          pc = j;
          found = true;
        }
      }
    return found;
  }

  void run() {
    const Eigen::Index rows = S.rows(), cols = S.cols();
    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
      Eigen::Index pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        bool clean = true;
        for (Eigen::Index i = t + 1; i < rows; ++i) {
          if (S(i, t) == 0) continue;
          add_row(i, t, -floor_div(S(i, t), S(t, t)));
          if (S(i, t) != 0) clean = false;
        }
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (S(t, j) == 0) continue;
          add_col(j, t, -floor_div(S(t, j), S(t, t)));
          if (S(t, j) != 0) clean = false;
        }
        if (!clean) {
          // a smaller remainder now sits in row t or column t
          Eigen::Index br = t, bc = t;
          Integer best = abs_value(S(t, t));
          for (Eigen::Index i = t + 1; i < rows; ++i)
            if (S(i, t) != 0 && abs_value(S(i, t)) < best)
              best = abs_value(S(i, t)), br = i, bc = t;
          for (Eigen::Index j = t + 1; j < cols; ++j)
            if (S(t, j) != 0 && abs_value(S(t, j)) < best)
              best = abs_value(S(t, j)), br = t, bc = j;
          swap_rows(t, br);
          swap_cols(t, bc);
          continue;
        }
        // divisibility: fold an offending row into row t and repeat
        Eigen::Index bad_row = -1;
        for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i)
          for (Eigen::Index j = t + 1; j < cols; ++j)
            if (S(i, j) % S(t, t) != 0) {
              bad_row = i;
              break;
            }
        if (bad_row < 0) break;
        add_row(t, bad_row, Integer(1));
      }
      if (S(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

DenseMatrix identity_matrix(std::size_t n) {
  DenseMatrix I = DenseMatrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i)
    if (S(i, i) > 1) d.push_back(S(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const DenseMatrix& A) {
  Eliminator e(A);
  e.run();
  SmithDecomposition out{e.U, e.U_inv, e.S, e.V, e.V_inv, 0};
  const Eigen::Index m = std::min(A.rows(), A.cols());
  while (static_cast<Eigen::Index>(out.rank) < m && out.S(out.rank, out.rank) != 0)
    ++out.rank;
  return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& A) {
  return smith_normal_form(A.to_dense());
}

Lattice kernel_basis(const DenseMatrix& A) {
  const auto snf = smith_normal_form(A);
  const Eigen::Index r = snf.rank;
  return snf.V.rightCols(A.cols() - r);
}

std::optional<DenseVector> integer_solve(const DenseMatrix& A,
                                         const DenseVector& b) {
  if (b.size() != A.rows())
    throw LengthMismatch("right-hand side of length " +
                         std::to_string(b.size()) + " for " +
                         std::to_string(A.rows()) + " rows");
  const auto snf = smith_normal_form(A);
  const DenseVector c = snf.U * b;
  DenseVector y = DenseVector::Zero(A.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i < static_cast<Eigen::Index>(snf.rank)) {
      if (c(i) % snf.S(i, i) != 0) return std::nullopt;
      y(i) = c(i) / snf.S(i, i);
    } else if (c(i) != 0) {
      return std::nullopt;
    }
  }
  return DenseVector(snf.V * y);
}

Lattice span_basis(const DenseMatrix& G) {
  const auto snf = smith_normal_form(G);
  const Eigen::Index r = snf.rank;
  Lattice B(G.rows(), r);
  for (Eigen::Index i = 0; i < r; ++i) B.col(i) = snf.U_inv.col(i) * snf.S(i, i);
  return B;
}

bool lattice_contains(const Lattice& L, const DenseVector& v) {
  return integer_solve(L, v).has_value();
}

bool lattice_subset(const Lattice& A, const Lattice& B) {
  if (A.cols() == 0) return true;
  const auto snf = smith_normal_form(B);
  const DenseMatrix C = snf.U * A;
  for (Eigen::Index j = 0; j < C.cols(); ++j)
    for (Eigen::Index i = 0; i < C.rows(); ++i) {
      if (i < static_cast<Eigen::Index>(snf.rank)) {
        if (C(i, j) % snf.S(i, i) != 0) return false;
      } else if (C(i, j) != 0) {
        return false;
      }
    }
  return true;
}

bool lattice_equal(const Lattice& A, const Lattice& B) {
  return lattice_subset(A, B) && lattice_subset(B, A);
}

Lattice lattice_sum(const Lattice& A, const Lattice& B) {
  if (A.rows() != B.rows())
    throw LengthMismatch("lattices in different ambient ranks");
  Lattice S(A.rows(), A.cols() + B.cols());
  S.leftCols(A.cols()) = A;
  S.rightCols(B.cols()) = B;
  return S;
}

Lattice preimage(const DenseMatrix& M, const Lattice& G) {
  if (M.rows() != G.rows())
    throw LengthMismatch("preimage: target ranks differ");
  if (M.rows() == 0) return identity_matrix(M.cols());
  const DenseMatrix block = lattice_sum(M, -G);
  const Lattice K = kernel_basis(block);
  return span_basis(K.topRows(M.cols()));
}

Lattice intersect(const Lattice& A, const Lattice& B) {
  const Lattice y = preimage(A, B);
  return span_basis(A * y);
}

namespace {

/// Coordinates of K's generators in the basis Lb of span(L).
DenseMatrix coordinates_in(const Lattice& Lb, const Lattice& K) {
  DenseMatrix coords(Lb.cols(), K.cols());
  const auto snf = smith_normal_form(Lb);
  for (Eigen::Index j = 0; j < K.cols(); ++j) {
    const DenseVector c = snf.U * K.col(j);
    DenseVector y = DenseVector::Zero(Lb.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      if (i < static_cast<Eigen::Index>(snf.rank)) {
        if (c(i) % snf.S(i, i) != 0)
          throw Error("quotient_group: K is not contained in L");
        y(i) = c(i) / snf.S(i, i);
      } else if (c(i) != 0) {
        throw Error("quotient_group: K is not contained in L");
      }
    }
    coords.col(j) = snf.V * y;
  }
  return coords;
}

}  // namespace

QuotientGroup quotient_group(const Lattice& L, const Lattice& K) {
  const Lattice Lb = span_basis(L);
  const DenseMatrix coords = coordinates_in(Lb, K);
  const auto q = smith_normal_form(coords);
  return QuotientGroup{static_cast<std::size_t>(Lb.cols()) - q.rank,
                       q.invariant_factors()};
}

std::vector<QuotientGenerator> quotient_generators(const Lattice& L,
                                                   const Lattice& K) {
  const Lattice Lb = span_basis(L);
  const auto q = smith_normal_form(coordinates_in(Lb, K));
  // U C V = S: the columns of Lb U^{-1} are generators of orders S_ii
  const DenseMatrix gens = Lb * q.U_inv;
  std::vector<QuotientGenerator> out;
  for (Eigen::Index i = 0; i < gens.cols(); ++i) {
    const Integer order =
        i < static_cast<Eigen::Index>(q.rank) ? Integer(q.S(i, i)) : Integer(0);
    if (order == 1) continue;
    out.push_back({gens.col(i), order});
  }
  return out;
}

QuotientGroup canonical_group(const std::vector<Integer>& orders) {
  DenseMatrix D = DenseMatrix::Zero(orders.size(), orders.size());
  std::size_t free = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    D(i, i) = orders[i];
    if (orders[i] == 0) ++free;
  }
  const auto snf = smith_normal_form(D);
  return QuotientGroup{free, snf.invariant_factors()};
}

}  // namespace twcech
