#include "twcech/homology.hpp"

#include <numeric>
#include <sstream>

namespace twcech {

namespace {

Integer gcd_integer(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

DenseMatrix dense_differential(const CochainComplex& cx, int k) {
  if (k < 0) return DenseMatrix::Zero(cx.dim(0), 0);
  return cx.differential(k).to_dense();
}

void require_closed(const CochainComplex& cx, int k,
                    const std::vector<Integer>& z) {
  if (z.size() != cx.dim(k))
    throw LengthMismatch("cochain of length " + std::to_string(z.size()) +
                         " in degree " + std::to_string(k) + " of dimension " +
                         std::to_string(cx.dim(k)));
  for (const auto& v : cx.differential(k).apply(z))
    if (v != 0) throw NotACocycle("d z != 0 in degree " + std::to_string(k + 1));
}

std::vector<Rational> lift(const std::vector<Circle>& z) {
  std::vector<Rational> q;
  q.reserve(z.size());
  for (const auto& c : z) q.push_back(c.value());
  return q;
}

}  // namespace

std::string to_string(const CohomologyGroup& g) {
  std::ostringstream os;
  const char* free = g.coefficients == ScalarKind::Z   ? "Z"
                     : g.coefficients == ScalarKind::Q ? "Q"
                                                       : "(Q/Z)";
  bool first = true;
  if (g.rank > 0) {
    os << free;
    if (g.rank > 1) os << '^' << g.rank;
    first = false;
  }
  for (const auto& d : g.torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

CohomologyGroup cohomology_group(const CochainComplex& cx, int k,
                                 ScalarKind scalar) {
  if (k < 0 || k >= static_cast<int>(cx.d.size()))
    throw DegreeOutOfRange("H^" + std::to_string(k) +
                           " needs d_k and d_{k-1}; assembled top degree is " +
                           std::to_string(cx.top_degree()));
  const auto out = smith_normal_form(dense_differential(cx, k));
  const auto in = smith_normal_form(dense_differential(cx, k - 1));
  CohomologyGroup g;
  g.coefficients = scalar;
  g.rank = cx.dim(k) - out.rank - in.rank;
  if (scalar == ScalarKind::Z) g.torsion = in.invariant_factors();
  // Q/Z: free part (Q/Z)^rank plus the torsion of H^{k+1}(Z) = coker d_k
  if (scalar == ScalarKind::QZ) g.torsion = out.invariant_factors();
  return g;
}

CohomologyGroup cohomology_group(const DimRedComplex& cx, int k,
                                 ScalarKind scalar) {
  return cohomology_group(cx.chain, k, scalar);
}

CoboundaryResult coboundary_witness(const CochainComplex& cx, int k,
                                    const std::vector<Integer>& z) {
  require_closed(cx, k, z);
  CoboundaryResult r;
  const DenseMatrix A = dense_differential(cx, k - 1);
  const auto snf = smith_normal_form(A);
  const DenseVector c = snf.U * to_dense(z);
  DenseVector y = DenseVector::Zero(A.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i < static_cast<Eigen::Index>(snf.rank)) {
      const Integer& d = snf.S(i, i);
      Integer rem = c(i) % d;
      if (rem < 0) rem += d;
      if (rem != 0)
        r.residues.push_back({static_cast<std::size_t>(i), rem, d});
      else
        y(i) = c(i) / d;
    } else if (c(i) != 0) {
      r.residues.push_back({static_cast<std::size_t>(i), c(i), Integer(0)});
    }
  }
  r.is_coboundary = r.residues.empty();
  if (r.is_coboundary) r.witness = to_std(snf.V * y);
  return r;
}

bool is_circle_coboundary(const CochainComplex& cx, int k,
                          const std::vector<Circle>& z) {
  bockstein(cx, k, z);  // closedness check
  const DenseMatrix A = dense_differential(cx, k - 1);
  const auto snf = smith_normal_form(A);
  const auto q = lift(z);
  for (Eigen::Index i = snf.rank; i < snf.U.rows(); ++i) {
    Rational sum = 0;
    for (Eigen::Index j = 0; j < snf.U.cols(); ++j)
      if (snf.U(i, j) != 0) sum += q[j] * Rational(snf.U(i, j));
    if (!is_integral(sum)) return false;
  }
  return true;
}

std::vector<Integer> bockstein(const CochainComplex& cx, int k,
                               const std::vector<Circle>& z) {
  if (z.size() != cx.dim(k))
    throw LengthMismatch("cochain of length " + std::to_string(z.size()) +
                         " in degree " + std::to_string(k));
  const auto image = cx.differential(k).apply(lift(z));
  std::vector<Integer> out;
  out.reserve(image.size());
  for (const auto& v : image) {
    if (!is_integral(v))
      throw NotACocycle("Q/Z cochain is not closed in degree " +
                        std::to_string(k));
    out.push_back(boost::multiprecision::numerator(v));
  }
  return out;
}

Integer class_order(const CochainComplex& cx, int k,
                    const std::vector<Integer>& z) {
  require_closed(cx, k, z);
  const auto r = coboundary_witness(cx, k, z);
  if (r.is_coboundary) return Integer(1);
  Integer order = 1;
  for (const auto& res : r.residues) {
    if (res.modulus == 0) return Integer(0);
    const Integer part = res.modulus / gcd_integer(res.value, res.modulus);
    order = order / gcd_integer(order, part) * part;
  }
  return order;
}

std::vector<TorsionLift> torsion_lifts(const CochainComplex& cx, int k) {
  const auto snf = smith_normal_form(dense_differential(cx, k));
  std::vector<TorsionLift> out;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    const Integer d = snf.S(i, i);
    if (d <= 1) continue;
    TorsionLift t;
    t.order = d;
    for (Eigen::Index j = 0; j < snf.V.rows(); ++j)
      t.cocycle.push_back(circle_reduce(Rational(snf.V(j, i), d)));
    t.generator = to_std(snf.U_inv.col(i));
    out.push_back(std::move(t));
  }
  return out;
}

Lattice cocycles(const CochainComplex& cx, int k) {
  return kernel_basis(dense_differential(cx, k));
}

Lattice coboundaries(const CochainComplex& cx, int k) {
  return span_basis(dense_differential(cx, k - 1));
}

QuotientGroup mod_n_cohomology(const CochainComplex& cx, int k,
                               const Integer& N) {
  const std::size_t m = cx.dim(k);
  const DenseMatrix d = dense_differential(cx, k);
  const Lattice nZm = identity_matrix(m) * N;
  // cocycles mod N: d x ∈ N Z^{m'}
  const Lattice z = preimage(d, identity_matrix(d.rows()) * N);
  const Lattice b = lattice_sum(coboundaries(cx, k), nZm);
  return quotient_group(z, b);
}

QuotientGroup mod_n_prediction(const CochainComplex& cx, int k,
                               const Integer& N) {
  const auto here = cohomology_group(cx, k, ScalarKind::Z);
  std::vector<Integer> orders(here.rank, N);
  for (const auto& d : here.torsion) orders.push_back(gcd_integer(d, N));
  for (const auto& d :
       smith_normal_form(dense_differential(cx, k)).invariant_factors())
    orders.push_back(gcd_integer(d, N));
  return canonical_group(orders);
}

QuotientGroup circle_n_torsion(const CochainComplex& cx, int k,
                               const Integer& N) {
  const std::size_t m = cx.dim(k);
  const DenseMatrix d = dense_differential(cx, k);
  const Lattice z = preimage(d, identity_matrix(d.rows()) * N);
  // x/N is a Q/Z-coboundary iff U x ∈ Z^r ⊕ N Z^{m−r}
  const auto snf = smith_normal_form(dense_differential(cx, k - 1));
  DenseMatrix gens = snf.U_inv;
  for (std::size_t i = snf.rank; i < m; ++i) gens.col(i) *= N;
  return quotient_group(z, gens);
}

QuotientGroup circle_n_torsion_prediction(const CochainComplex& cx, int k,
                                          const Integer& N) {
  const auto here = smith_normal_form(dense_differential(cx, k - 1));
  const auto next = smith_normal_form(dense_differential(cx, k));
  const std::size_t rank = cx.dim(k) - here.rank - next.rank;
  std::vector<Integer> orders(rank, N);
  for (const auto& d : next.invariant_factors())
    orders.push_back(gcd_integer(d, N));
  return canonical_group(orders);
}

}  // namespace twcech
