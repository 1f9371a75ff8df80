#include <random>

#include <catch_amalgamated.hpp>

#include "random_instances.hpp"
#include "twcech/fixtures.hpp"

using namespace twcech;
using twcech::testing::random_exact_twist;

TEST_CASE("twist validation") {
  const auto bd = boundary_tetrahedron();
  for (int k : {0, 1, 5}) CHECK_NOTHROW(point_twist(bd, {0, 1, 2}, IntegerVector{Integer(k)}));

  const auto tet = full_simplex(3);
  try {
    point_twist(tet, {0, 1, 2}, IntegerVector{Integer(1)});
    FAIL("expected NotClosed");
  } catch (const NotClosed& e) {
    CHECK(e.simplex() == std::vector<int>{0, 1, 2, 3});
    CHECK(e.component() == 0);
    CHECK(e.value() == "-1");
  }

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial)
    CHECK_NOTHROW(random_exact_twist(twcech::testing::random_nerve(rng), 1 + trial % 3, rng));

  Cochain<IntegerVector> wrong(2, IntegerVector::zero(2));
  wrong.set({0, 1, 2}, IntegerVector{1});
  CHECK_THROWS_AS(validate_twist(bd, 2, wrong), LengthMismatch);
}

TEST_CASE("Steenrod cochain in degenerate cases") {
  const auto bd = boundary_tetrahedron();
  CHECK(steenrod_cochain(bd, point_twist(bd, {0, 1, 2}, IntegerVector{2, 3})).is_zero_cochain());
  std::mt19937_64 rng(2);
  const auto d5 = full_simplex(5);
  const auto C = steenrod_cochain(d5, random_exact_twist(d5, 1, rng));
  for (const auto& [s, v] : C.entries()) CHECK(v.entry_count() == 0);
}

TEST_CASE("Steenrod cochain matches its defining formula on the 5-simplex") {
  std::mt19937_64 rng(3);
  const auto d5 = full_simplex(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    const auto twist = random_exact_twist(d5, n, rng);
    const auto C = steenrod_cochain(d5, twist);
    for (const auto& t : d5.simplices(3)) {
      const int a = t[0], b = t[1], c = t[2], d = t[3];
      const auto &f012 = twist.at({a, b, c}), &f023 = twist.at({a, c, d}),
                 &f123 = twist.at({b, c, d}), &f013 = twist.at({a, b, d});
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          CHECK(C.at(t)(i, j) == f012[i] * f023[j] - f123[i] * f013[j]);
    }
  }
}

TEST_CASE("Steenrod identity: F_i u F_j - F_j u F_i = dC_ij") {
  std::mt19937_64 rng(4);
  const auto d5 = full_simplex(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    const auto twist = random_exact_twist(d5, n, rng);
    const auto C = steenrod_cochain(d5, twist);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const auto Fi = twist.component(i), Fj = twist.component(j);
        Cochain<Integer> cij(3, Integer(0));
        for (const auto& [s, v] : C.entries()) cij.set(s, v(i, j));
        CHECK(cup_product(d5, Fi, Fj) - cup_product(d5, Fj, Fi) == cech_differential(d5, cij));
      }
  }
}

TEST_CASE("cup product uses front and back faces") {
  const auto d4 = full_simplex(4);
  Cochain<Integer> a(2, Integer(0)), b(2, Integer(0));
  a.set({0, 1, 2}, 3);
  b.set({2, 3, 4}, 5);
  const auto ab = cup_product(d4, a, b);
  CHECK(ab.at({0, 1, 2, 3, 4}) == 15);
  CHECK(cup_product(d4, b, a).is_zero_cochain());
}

TEST_CASE("cup1 on column 1") {
  const auto bd = boundary_tetrahedron();
  const auto twist = point_twist(bd, {0, 1, 2}, IntegerVector{1});
  Cochain<IntegerVector> phi(0, IntegerVector::zero(1));
  for (int v = 0; v < 4; ++v) phi.set({v}, IntegerVector{Integer(10 + v)});
  const auto out = cup1_col1(bd, phi, twist);
  CHECK(out.degree() == 2);
  CHECK(out.at({0, 1, 2}) == 10);
  CHECK(out.entries().size() == 1);

  const auto zero_twist = point_twist(bd, {0, 1, 2}, IntegerVector{0});
  CHECK(cup1_col1(bd, phi, zero_twist).is_zero_cochain());
  CHECK(cup1_col1(bd, Cochain<IntegerVector>(0, IntegerVector::zero(1)), twist).is_zero_cochain());

  Cochain<VectorValue<Circle>> half(0, VectorValue<Circle>::zero(1));
  half.set({0}, VectorValue<Circle>{Circle(Rational(1, 2))});
  CHECK(cup1_col1(bd, half, point_twist(bd, {0, 1, 2}, IntegerVector{2})).is_zero_cochain());
}

TEST_CASE("cup1 on column 2") {
  const auto bd = boundary_tetrahedron();
  const int a = 2, b = 3, c = 7;
  const auto twist = point_twist(bd, {0, 1, 2}, IntegerVector{a, b});
  Cochain<UpperTriValue<Integer>> phi(0, UpperTriValue<Integer>::zero(2));
  UpperTriValue<Integer> v(2);
  v(0, 1) = c;
  phi.set({0}, v);
  const auto out = cup1_col2(bd, phi, twist);
  CHECK(out.degree() == 2);
  CHECK(out.at({0, 1, 2}) == IntegerVector{Integer(-c * b), Integer(c * a)});
  CHECK(out.entries().size() == 1);

  CHECK(cup1_col2(bd, phi, point_twist(bd, {0, 1, 2}, IntegerVector{0, 0})).is_zero_cochain());
  Cochain<UpperTriValue<Integer>> phi1(0, UpperTriValue<Integer>::zero(1));
  CHECK(cup1_col2(bd, phi1, point_twist(bd, {0, 1, 2}, IntegerVector{4})).is_zero_cochain());
}

TEST_CASE("cup2 against direct evaluation on the 5-simplex") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> d(-5, 5);
  const auto d5 = full_simplex(5);
  const int n = 3;
  const auto twist = random_exact_twist(d5, n, rng);
  const auto C = steenrod_cochain(d5, twist);
  for (int deg = 0; deg <= 2; ++deg) {
    Cochain<UpperTriValue<Integer>> phi(deg, UpperTriValue<Integer>::zero(n));
    for (const auto& s : d5.simplices(deg)) {
      UpperTriValue<Integer> v(n);
      for (std::size_t p = 0; p < v.entry_count(); ++p) v.entry(p) = d(rng);
      phi.set(s, v);
    }
    const auto out = cup2(d5, phi, C);
    for (const auto& t : d5.simplices(deg + 3)) {
      Integer expected = 0;
      const Simplex head(t.begin(), t.begin() + deg + 1), tail(t.begin() + deg, t.end());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) expected += phi.at(head)(i, j) * C.at(tail)(i, j);
      CHECK(out.at(t) == expected);
    }
  }
  const auto bd = boundary_tetrahedron();
  Cochain<UpperTriValue<Integer>> phi(0, UpperTriValue<Integer>::zero(2));
  CHECK(cup2(bd, phi, steenrod_cochain(bd, point_twist(bd, {0, 1, 2}, IntegerVector{1, 1})))
            .is_zero_cochain());
}

TEST_CASE("cup operations are additive") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(-5, 5);
  const auto d4 = full_simplex(4);
  const auto F1 = random_exact_twist(d4, 2, rng), F2 = random_exact_twist(d4, 2, rng);
  const auto F12 = validate_twist(d4, 2, F1.F + F2.F);
  Cochain<IntegerVector> p(1, IntegerVector::zero(2)), q(1, IntegerVector::zero(2));
  for (const auto& s : d4.simplices(1)) {
    p.set(s, IntegerVector{d(rng), d(rng)});
    q.set(s, IntegerVector{d(rng), d(rng)});
  }
  CHECK(cup1_col1(d4, p + q, F1) == cup1_col1(d4, p, F1) + cup1_col1(d4, q, F1));
  CHECK(cup1_col1(d4, p, F12) == cup1_col1(d4, p, F1) + cup1_col1(d4, p, F2));
  Cochain<UpperTriValue<Integer>> u(0, UpperTriValue<Integer>::zero(2));
  for (const auto& s : d4.simplices(0)) {
    UpperTriValue<Integer> v(2);
    v(0, 1) = d(rng);
    u.set(s, v);
  }
  CHECK(cup1_col2(d4, u, F12) == cup1_col2(d4, u, F1) + cup1_col2(d4, u, F2));
  CHECK(cup1_col2(d4, u + u, F1) == cup1_col2(d4, u, F1) + cup1_col2(d4, u, F1));
}
