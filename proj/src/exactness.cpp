#include "twcech/exactness.hpp"

#include <algorithm>
#include <sstream>

namespace twcech {

namespace {

int common_top(const ShortExactSequence& s) {
  return std::min({s.A.top_degree(), s.B.top_degree(), s.C.top_degree()});
}

DenseMatrix dense_d(const CochainComplex& cx, int k) {
  if (k < 0) return DenseMatrix::Zero(cx.dim(0), 0);
  return cx.differential(k).to_dense();
}

DenseVector solve_or_throw(const DenseMatrix& M, const DenseVector& b,
                           const char* what) {
  auto x = integer_solve(M, b);
  if (!x) throw NotSES(std::string("no integral solution while ") + what);
  return *x;
}

/// δ on a basis of Z_C^k, with values in C_A^{k+1}.
DenseMatrix connecting_map(const ShortExactSequence& s, int k) {
  const Lattice zc = cocycles(s.C, k);
  const DenseMatrix dB = dense_d(s.B, k);
  DenseMatrix out(s.A.dim(k + 1), zc.cols());
  for (Eigen::Index j = 0; j < zc.cols(); ++j) {
    const DenseVector b = solve_or_throw(s.p[k], zc.col(j), "lifting through p");
    const DenseVector e = dB * b;
    out.col(j) = solve_or_throw(s.i[k + 1], e, "pulling back through i");
  }
  return out;
}

LESNode node(std::string group, int degree, const Lattice& kernel,
             const Lattice& image, const Lattice& boundaries) {
  LESNode n;
  n.group = std::move(group);
  n.degree = degree;
  n.exact = lattice_equal(kernel, image);
  n.kernel = quotient_group(lattice_sum(kernel, boundaries), boundaries);
  n.image = quotient_group(lattice_sum(image, boundaries), boundaries);
  return n;
}

std::vector<Eigen::Index> select(const std::vector<BasisElement>& basis,
                                 bool low, int split) {
  std::vector<Eigen::Index> idx;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if ((basis[i].column < split) == low) idx.push_back(i);
  return idx;
}

DenseMatrix sub(const DenseMatrix& M, const std::vector<Eigen::Index>& rows,
                const std::vector<Eigen::Index>& cols) {
  DenseMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = M(rows[r], cols[c]);
  return out;
}

}  // namespace

bool LESReport::all_exact() const {
  return std::all_of(nodes.begin(), nodes.end(),
                     [](const LESNode& n) { return n.exact; });
}

void check_short_exact(const ShortExactSequence& s) {
  const int top = common_top(s);
  if (static_cast<int>(s.i.size()) <= top || static_cast<int>(s.p.size()) <= top)
    throw NotSES("maps missing for some degree");
  for (int k = 0; k <= top; ++k) {
    const auto tag = " in degree " + std::to_string(k);
    const DenseMatrix& i = s.i[k];
    const DenseMatrix& p = s.p[k];
    if (i.rows() != static_cast<Eigen::Index>(s.B.dim(k)) ||
        i.cols() != static_cast<Eigen::Index>(s.A.dim(k)) ||
        p.rows() != static_cast<Eigen::Index>(s.C.dim(k)) ||
        p.cols() != static_cast<Eigen::Index>(s.B.dim(k)))
      throw NotSES("map shapes do not match the complexes" + tag);
    if (smith_normal_form(i).rank != static_cast<std::size_t>(i.cols()))
      throw NotSES("i is not injective" + tag);
    const auto sp = smith_normal_form(p);
    if (sp.rank != static_cast<std::size_t>(p.rows()) ||
        !sp.invariant_factors().empty())
      throw NotSES("p is not surjective over Z" + tag);
    if (!lattice_equal(kernel_basis(p), i))
      throw NotSES("ker p differs from im i" + tag);
    if (k < top) {
      if (dense_d(s.B, k) * i != s.i[k + 1] * dense_d(s.A, k))
        throw NotSES("i is not a chain map" + tag);
      if (dense_d(s.C, k) * p != s.p[k + 1] * dense_d(s.B, k))
        throw NotSES("p is not a chain map" + tag);
    }
  }
}

LESReport verify_exactness(const ShortExactSequence& s) {
  check_short_exact(s);
  LESReport report;
  report.name = s.name;
  const int top = common_top(s);
  for (int k = 0; k < top; ++k) report.connecting.push_back(connecting_map(s, k));
  for (int k = 0; k < top; ++k) {
    const Lattice zA = cocycles(s.A, k), bA = coboundaries(s.A, k);
    const Lattice zB = cocycles(s.B, k), bB = coboundaries(s.B, k);
    const Lattice zC = cocycles(s.C, k), bC = coboundaries(s.C, k);

    // at H^k(A): ker i* against δ(H^{k−1}(C))
    {
      const Lattice ker = zA * preimage(s.i[k] * zA, bB);
      Lattice im = bA;
      if (k >= 1) im = lattice_sum(report.connecting[k - 1], bA);
      report.nodes.push_back(node("H^k(A)", k, span_basis(ker), im, bA));
    }
    // at H^k(B): ker p* against i*(H^k(A))
    {
      const Lattice ker = zB * preimage(s.p[k] * zB, bC);
      const Lattice im = lattice_sum(s.i[k] * zA, bB);
      report.nodes.push_back(node("H^k(B)", k, span_basis(ker), im, bB));
    }
    // at H^k(C): ker δ against p*(H^k(B))
    {
      const Lattice bA1 = coboundaries(s.A, k + 1);
      const Lattice ker = zC * preimage(report.connecting[k], bA1);
      const Lattice im = lattice_sum(s.p[k] * zB, bC);
      report.nodes.push_back(node("H^k(C)", k, span_basis(ker), im, bC));
    }
  }
  return report;
}

ShortExactSequence column_filtration(const DimRedComplex& cx, int split) {
  if (split < 1 || split > 2)
    throw Error("column filtration split must be 1 or 2");
  ShortExactSequence s;
  s.name = split == 1 ? "column 0 -> C_F -> columns 1,2"
                      : "columns 0,1 -> C_F -> column 2";
  const int top = cx.kmax();
  std::vector<std::vector<Eigen::Index>> lo, hi;
  for (int k = 0; k <= top; ++k) {
    lo.push_back(select(cx.bases[k], true, split));
    hi.push_back(select(cx.bases[k], false, split));
  }
  for (int k = 0; k <= top; ++k) {
    const std::size_t dim = cx.bases[k].size();
    s.A.dims.push_back(lo[k].size());
    s.B.dims.push_back(dim);
    s.C.dims.push_back(hi[k].size());
    DenseMatrix i = DenseMatrix::Zero(dim, lo[k].size());
    for (std::size_t c = 0; c < lo[k].size(); ++c) i(lo[k][c], c) = 1;
    DenseMatrix p = DenseMatrix::Zero(hi[k].size(), dim);
    for (std::size_t r = 0; r < hi[k].size(); ++r) p(r, hi[k][r]) = 1;
    s.i.push_back(std::move(i));
    s.p.push_back(std::move(p));
  }
  for (int k = 0; k < top; ++k) {
    const DenseMatrix d = cx.chain.d[k].to_dense();
    s.B.d.push_back(cx.chain.d[k]);
    s.A.d.push_back(IntegerMatrix::from_dense(sub(d, lo[k + 1], lo[k])));
    s.C.d.push_back(IntegerMatrix::from_dense(sub(d, hi[k + 1], hi[k])));
  }
  return s;
}

LESReport verify_mod_n_les(const CochainComplex& cx, const Integer& N) {
  LESReport report;
  report.name = "0 -> Z -> Z -> Z/" + N.str() + " -> 0";
  const int top = cx.top_degree();
  auto mod_n_cocycles = [&](int k) {
    const DenseMatrix d = dense_d(cx, k);
    return preimage(d, identity_matrix(d.rows()) * N);
  };
  for (int k = 0; k < top; ++k) {
    const std::size_t m = cx.dim(k);
    const Lattice z = cocycles(cx, k), b = coboundaries(cx, k);
    const Lattice nZm = identity_matrix(m) * N;

    // δ: H^{k−1}(Z/N) → H^k(Z), x ↦ d x / N
    Lattice delta_image = b;
    if (k >= 1) {
      const Lattice zn = mod_n_cocycles(k - 1);
      const DenseMatrix dx = dense_d(cx, k - 1) * zn;
      DenseMatrix q(dx.rows(), dx.cols());
      for (Eigen::Index i = 0; i < dx.rows(); ++i)
        for (Eigen::Index j = 0; j < dx.cols(); ++j) q(i, j) = dx(i, j) / N;
      delta_image = lattice_sum(q, b);
    }
    // at the first H^k(Z): ker(·N) = {z : N z ∈ B}
    {
      const Lattice ker = z * preimage(z * N, b);
      report.nodes.push_back(node("H^k(Z) [x" + N.str() + "]", k,
                                  span_basis(ker), delta_image, b));
    }
    // at the second H^k(Z): ker(mod N) = Z ∩ (B + N Z^m)
    {
      const Lattice ker = intersect(z, lattice_sum(b, nZm));
      const Lattice im = lattice_sum(z * N, b);
      report.nodes.push_back(node("H^k(Z) [mod " + N.str() + "]", k, ker, im, b));
    }
    // at H^k(Z/N): ker δ = {x ∈ Z_N : d x / N ∈ B^{k+1}}
    {
      const Lattice zn = mod_n_cocycles(k);
      const DenseMatrix dx = dense_d(cx, k) * zn;
      DenseMatrix q(dx.rows(), dx.cols());
      for (Eigen::Index i = 0; i < dx.rows(); ++i)
        for (Eigen::Index j = 0; j < dx.cols(); ++j) q(i, j) = dx(i, j) / N;
      const Lattice ker = zn * preimage(q, coboundaries(cx, k + 1));
      const Lattice bn = lattice_sum(b, nZm);
      const Lattice im = lattice_sum(z, bn);
      report.nodes.push_back(
          node("H^k(Z/" + N.str() + ")", k, span_basis(ker), im, bn));
    }
  }
  return report;
}

std::vector<CircleCheck> verify_circle_sequence(const CochainComplex& cx,
                                                const std::vector<Integer>& Ns) {
  std::vector<CircleCheck> out;
  auto show = [](const QuotientGroup& g) {
    std::ostringstream os;
    os << "rank " << g.rank << " torsion [";
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
      os << (i ? "," : "") << g.torsion[i];
    os << ']';
    return os.str();
  };
  const int top = cx.top_degree();
  for (int k = 0; k < top; ++k) {
    const auto z = cohomology_group(cx, k, ScalarKind::Z);
    const auto q = cohomology_group(cx, k, ScalarKind::Q);
    out.push_back({"rank over Q equals free rank over Z", k, z.rank == q.rank,
                   std::to_string(q.rank) + " vs " + std::to_string(z.rank)});
    for (const auto& N : Ns) {
      const auto chain = mod_n_cohomology(cx, k, N);
      const auto uct = mod_n_prediction(cx, k, N);
      out.push_back({"H^k(Z/" + N.str() + ") chain level vs universal coefficients",
                     k, chain == uct, show(chain) + " vs " + show(uct)});
      const auto circle = circle_n_torsion(cx, k, N);
      const auto predicted = circle_n_torsion_prediction(cx, k, N);
      out.push_back({"H^k(Q/Z)[" + N.str() + "] chain level vs universal coefficients",
                     k, circle == predicted, show(circle) + " vs " + show(predicted)});
    }
    if (k + 1 >= top) continue;
    for (const auto& t : torsion_lifts(cx, k)) {
      const auto image = bockstein(cx, k, t.cocycle);
      const Integer order = class_order(cx, k + 1, image);
      out.push_back({"Bockstein of a (1/" + t.order.str() + ")-valued cocycle", k,
                     order == t.order,
                     "class order " + order.str() + ", expected " + t.order.str()});
    }
  }
  return out;
}

}  // namespace twcech
