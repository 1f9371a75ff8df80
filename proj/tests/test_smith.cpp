#include <random>

#include <catch_amalgamated.hpp>

#include "twcech/smith.hpp"

using namespace twcech;

namespace {

DenseMatrix dense(std::initializer_list<std::initializer_list<int>> rows) {
  DenseMatrix m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

DenseMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range = 9) {
  std::uniform_int_distribution<int> d(-range, range), sparse(0, 2);
  DenseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = sparse(rng) == 0 ? d(rng) : 0;
  return m;
}

void check_decomposition(const DenseMatrix& A) {
  const auto s = smith_normal_form(A);
  REQUIRE((s.U * A * s.V) == s.S);
  CHECK((s.U * s.U_inv) == identity_matrix(A.rows()));
  CHECK((s.V * s.V_inv) == identity_matrix(A.cols()));
  for (Eigen::Index i = 0; i < s.S.rows(); ++i)
    for (Eigen::Index j = 0; j < s.S.cols(); ++j)
      if (i != j) CHECK(s.S(i, j) == 0);
  const auto d = s.diagonal();
  CHECK(d.size() == s.rank);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] > 0);
    if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
  }
}

}  // namespace

TEST_CASE("Smith normal form of small matrices") {
  const auto s = smith_normal_form(dense({{2, 4}, {6, 8}}));
  CHECK(s.diagonal() == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(identity_matrix(3)).S == identity_matrix(3));
  const DenseMatrix zero = DenseMatrix::Zero(2, 3);
  const auto z = smith_normal_form(zero);
  CHECK(z.S == zero);
  CHECK(z.rank == 0);
  CHECK(smith_normal_form(dense({{2, 0}, {0, 3}})).diagonal() == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(dense({{6, 4}, {10, 8}})).invariant_factors() == std::vector<Integer>{2, 4});
}

TEST_CASE("Smith normal form on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(0, 30);
  for (int trial = 0; trial < 60; ++trial) check_decomposition(random_matrix(rng, size(rng), size(rng)));
  check_decomposition(DenseMatrix(0, 4));
  check_decomposition(DenseMatrix(4, 0));
}

TEST_CASE("the pivot order is deterministic") {
  std::mt19937_64 rng(8);
  const auto A = random_matrix(rng, 12, 9);
  const auto a = smith_normal_form(A), b = smith_normal_form(A);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
  CHECK(smith_normal_form(IntegerMatrix::from_dense(A)).U == a.U);
}

TEST_CASE("kernels, solutions and lattice quotients") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto A = random_matrix(rng, 6, 9, 5);
    const auto K = kernel_basis(A);
    CHECK((A * K).isZero());
    CHECK(static_cast<std::size_t>(K.cols()) == 9 - smith_normal_form(A).rank);

    const auto x = random_matrix(rng, 9, 1, 5);
    const DenseVector b = A * x;
    const auto y = integer_solve(A, b);
    REQUIRE(y);
    CHECK((A * *y) == b);
  }
  CHECK_FALSE(integer_solve(dense({{2}}), dense({{1}})).has_value());

  const auto L = identity_matrix(2);
  const auto K = dense({{2, 0}, {0, 3}});
  CHECK(quotient_group(L, K) == QuotientGroup{0, {6}});
  CHECK(quotient_group(L, dense({{4}, {0}})) == QuotientGroup{1, {4}});
  CHECK(lattice_subset(K, L));
  CHECK_FALSE(lattice_subset(L, K));
  CHECK(lattice_equal(dense({{1, 1}, {0, 1}}), L));
  CHECK(lattice_contains(K, dense({{4}, {-3}})));
  CHECK(lattice_equal(intersect(dense({{2}, {0}}), dense({{3}, {0}})), dense({{6}, {0}})));
  CHECK(lattice_equal(preimage(dense({{2, 0}}), dense({{4}})), dense({{2, 0}, {0, 1}})));
  CHECK(lattice_equal(span_basis(lattice_sum(dense({{2}, {0}}), dense({{3}, {0}}))), dense({{1}, {0}})));

  const auto gens = quotient_generators(L, K);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].order == 6);
  CHECK(canonical_group({2, 3, 0, 1, 4}) == QuotientGroup{1, {2, 12}});
}
