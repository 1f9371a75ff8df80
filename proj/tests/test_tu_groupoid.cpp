#include <numeric>
#include <random>

#include <catch_amalgamated.hpp>

#include "twcech/tu_groupoid.hpp"

using namespace twcech;

namespace {

TransformationGroupoid cyclic_on_point(int m) {
  return transformation_groupoid({m}, {"pt"}, {{0}});
}

TransformationGroupoid swap_pair() {
  return transformation_groupoid({2}, {"a", "b"}, {{1, 0}});
}

std::vector<GroupoidCover> swap_covers(const FiniteGroupoid& G) {
  // arrows: 0 = (0,a), 1 = (0,b), 2 = (1,a), 3 = (1,b)
  return {GroupoidCover::trivial(G),
          {{{0}, {1}}, {{0, 1, 2, 3}}},
          {{{0}, {1}}, {{0, 1, 2, 3}, {0, 2}}},
          {{{0, 1}, {0}}, {{0, 1}, {2, 3}, {0, 1, 2, 3}}}};
}

std::vector<GroupoidCover> cyclic_covers(const FiniteGroupoid& G) {
  return {GroupoidCover::trivial(G),
          {{{0}}, {{0, 1, 2}, {0, 2, 3}}},
          {{{0}, {0}}, {{0}, {1}, {2}, {3}}}};
}

TuCochain random_cochain(const std::vector<TuCell>& cells, int degree, int N,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, N - 1);
  TuCochain c;
  c.degree = degree;
  for (const auto& cell : cells) c.values[cell] = Circle(Rational(d(rng), N));
  return c;
}

CohomologyGroup cyclic(int order, ScalarKind s = ScalarKind::QZ) {
  if (order == 1) return {0, {}, s};
  return {0, {Integer(order)}, s};
}

}  // namespace

TEST_CASE("transformation groupoids") {
  const auto swap = swap_pair();
  const auto& G = swap.groupoid;
  CHECK(G.object_count() == 2);
  CHECK(G.arrow_count() == 4);
  const int sb = swap.arrow_id({1}, 1);
  CHECK(G.target(sb) == 1);
  CHECK(G.source(sb) == 0);
  CHECK(G.inverse(sb) == swap.arrow_id({1}, 0));
  CHECK(G.identity(0) == swap.arrow_id({0}, 0));
  CHECK_FALSE(G.compose(sb, sb).has_value());
  CHECK(*G.compose(swap.arrow_id({1}, 0), sb) == swap.arrow_id({0}, 1));

  CHECK_THROWS_AS(transformation_groupoid({2}, {"a", "b"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(transformation_groupoid({2}, {"a", "b", "c"}, {{1, 2, 0}}), Error);
  CHECK_THROWS_AS(
      transformation_groupoid({3, 3}, {"a", "b", "c"}, {{1, 2, 0}, {0, 2, 1}}), Error);
}

TEST_CASE("composable tuples") {
  const auto z2 = cyclic_on_point(2);
  CHECK(composable_tuples(z2.groupoid, 2).size() == 4);
  const auto objects = composable_tuples(z2.groupoid, 0);
  REQUIRE(objects.size() == 1);
  CHECK(objects[0].object == 0);
  CHECK(composable_tuples(swap_pair().groupoid, 1).size() == 4);
  CHECK(composable_tuples(swap_pair().groupoid, 2).size() == 8);
}

TEST_CASE("face maps") {
  const auto z4 = cyclic_on_point(4);
  const auto& G = z4.groupoid;
  const ComposableTuple t{{z4.arrow_id({1}, 0), z4.arrow_id({2}, 0)}};
  CHECK(face_map(G, 1, t).arrows == std::vector<int>{z4.arrow_id({3}, 0)});
  CHECK(face_map(G, 0, t).arrows == std::vector<int>{z4.arrow_id({2}, 0)});
  CHECK(face_map(G, 2, t).arrows == std::vector<int>{z4.arrow_id({1}, 0)});
  CHECK_THROWS_AS(face_map(G, 3, t), IndexOutOfRange);

  const auto swap = swap_pair();
  for (const FiniteGroupoid* g : {&swap.groupoid, &G}) {
    for (int n = 2; n <= 4; ++n)
      for (const auto& tuple : composable_tuples(*g, n))
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            CHECK(face_map(*g, i, face_map(*g, j, tuple)) ==
                  face_map(*g, j - 1, face_map(*g, i, tuple)));
  }
}

TEST_CASE("index faces") {
  PresimplicialIndex lambda{2, {10, 11, 12}, {1001, 1002, 1012}};
  CHECK(lambda.at(0, 2) == 1002);
  const auto f = index_face(1, lambda);
  CHECK(f.vertex == std::vector<int>{10, 12});
  CHECK(f.edge == std::vector<int>{1002});
  CHECK(index_face(std::vector<int>{0, 1, 2}, lambda) == lambda);
  CHECK_THROWS_AS(index_face(std::vector<int>{1, 0}, lambda), IndexOutOfRange);

  // g̃ h̃ = (h∘g)~ on all pairs of injections into [3]
  PresimplicialIndex big{3, {0, 1, 2, 3}, {}};
  for (int l = 0; l < 4; ++l)
    for (int p = l + 1; p < 4; ++p) big.edge.push_back(10 * l + p);
  auto injections = [](int k, int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
      std::vector<int> g;
      for (int j = 0; j <= n; ++j)
        if (mask >> j & 1) g.push_back(j);
      if (static_cast<int>(g.size()) == k + 1) out.push_back(g);
    }
    return out;
  };
  for (int m = 0; m <= 3; ++m)
    for (const auto& h : injections(m, 3))
      for (int k = 0; k <= m; ++k)
        for (const auto& g : injections(k, m)) {
          std::vector<int> hg;
          for (int x : g) hg.push_back(h[x]);
          CHECK(index_face(g, index_face(h, big)) == index_face(hg, big));
        }
}

TEST_CASE("cell membership") {
  const auto swap = swap_pair();
  const auto& G = swap.groupoid;
  const auto trivial = GroupoidCover::trivial(G);
  for (const auto& t : composable_tuples(G, 2))
    CHECK(cell_membership(G, trivial, {2, {0, 0, 0}, {0, 0, 0}}, t));

  const GroupoidCover cover{{{0}, {1}, {0, 1}}, {{0, 1}, {2, 3}, {0, 2}}};
  for (const auto& t : composable_tuples(G, 2))
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int e01 = 0; e01 < 3; ++e01)
            for (int e02 = 0; e02 < 3; ++e02)
              for (int e12 = 0; e12 < 3; ++e12) {
                const int g0 = t.arrows[0], g1 = t.arrows[1];
                const bool expected =
                    cover.object_in(a, G.source(g0)) && cover.object_in(b, G.target(g0)) &&
                    cover.object_in(c, G.target(g1)) && cover.arrow_in(e01, g0) &&
                    cover.arrow_in(e12, g1) && cover.arrow_in(e02, *G.compose(g0, g1));
                CHECK(cell_membership(G, cover, {2, {a, b, c}, {e01, e02, e12}}, t) == expected);
              }

  // (swap, b) has source a, so it lies in no cell whose λ_0 is {b}
  const ComposableTuple swap_b{{swap.arrow_id({1}, 1)}};
  CHECK_FALSE(cell_membership(G, cover, {1, {1, 1}, {1}}, swap_b));
  CHECK(cell_membership(G, cover, {1, {0, 1}, {1}}, swap_b));
}

TEST_CASE("Tu differential reduces to group cochains on a point") {
  const auto z4 = cyclic_on_point(4);
  const auto& G = z4.groupoid;
  const auto cover = GroupoidCover::trivial(G);
  std::mt19937_64 rng(1);
  const auto cells1 = tu_cells(G, cover, 1);
  const auto phi = random_cochain(cells1, 1, 8, rng);
  const auto dphi = tu_differential(G, cover, phi);
  auto value = [&](int arrow) {
    for (const auto& c : cells1)
      if (c.tuple.arrows[0] == arrow) return phi.at(c);
    FAIL("missing cell");
    return Circle();
  };
  for (const auto& [cell, v] : dphi.values) {
    const int g = cell.tuple.arrows[0], h = cell.tuple.arrows[1];
    CHECK(v == value(h) - value(*G.compose(g, h)) + value(g));
  }
  CHECK(dphi.values.size() == 16);

  TuCochain zero;
  zero.degree = 1;
  for (const auto& c : cells1) zero.values[c] = Circle();
  for (const auto& [cell, v] : tu_differential(G, cover, zero).values) CHECK(is_zero(v));

  TuCochain partial = phi;
  partial.values.erase(partial.values.begin());
  CHECK_THROWS_AS(tu_differential(G, cover, partial), CellUndefined);
}

TEST_CASE("Tu differential squares to zero") {
  std::mt19937_64 rng(2);
  const auto swap = swap_pair();
  const auto z4 = cyclic_on_point(4);
  std::vector<std::pair<const FiniteGroupoid*, std::vector<GroupoidCover>>> cases{
      {&swap.groupoid, swap_covers(swap.groupoid)}, {&z4.groupoid, cyclic_covers(z4.groupoid)}};
  for (const auto& [G, covers] : cases)
    for (const auto& cover : covers)
      for (int n = 0; n <= 2; ++n) {
        const auto phi = random_cochain(tu_cells(*G, cover, n), n, 12, rng);
        const auto dd = tu_differential(*G, cover, tu_differential(*G, cover, phi));
        CHECK(dd.values.size() == tu_cells(*G, cover, n + 2).size());
        for (const auto& [cell, v] : dd.values) CHECK(is_zero(v));
      }
}

TEST_CASE("low-degree cohomology of cyclic groups") {
  const auto z2 = cyclic_on_point(2);
  const auto cover2 = GroupoidCover::trivial(z2.groupoid);
  CHECK(brute_cohomology(z2.groupoid, cover2, 1, Integer(2)) == cyclic(2));
  CHECK(brute_cohomology(z2.groupoid, cover2, 2, Integer(4)) == cyclic(1));

  const auto trivial = cyclic_on_point(1);
  const auto cover1 = GroupoidCover::trivial(trivial.groupoid);
  for (int k : {1, 2}) CHECK(brute_cohomology(trivial.groupoid, cover1, k, Integer(6)) == cyclic(1));

  // H^1(Z/m; Q/Z) = Z/m and H^2(Z/m; Q/Z) = 0; literal Z/N: both Z/gcd(m,N)
  for (int m : {2, 3, 4})
    for (int N : {2, 3, 4, 6}) {
      const auto G = cyclic_on_point(m);
      const auto cover = GroupoidCover::trivial(G.groupoid);
      const int g = std::gcd(m, N);
      CHECK(brute_cohomology(G.groupoid, cover, 1, Integer(N)) == cyclic(g));
      CHECK(brute_cohomology(G.groupoid, cover, 2, Integer(N)) == cyclic(1));
      CHECK(finite_coefficient_cohomology(G.groupoid, cover, 1, Integer(N)).torsion ==
            cyclic(g).torsion);
      CHECK(finite_coefficient_cohomology(G.groupoid, cover, 2, Integer(N)).torsion ==
            cyclic(g).torsion);
    }

  CHECK_THROWS_AS(tu_cells(z2.groupoid, cover2, 6, 10), TooLarge);
}

TEST_CASE("one-cocycles do not depend on the arrow cell") {
  const auto swap = swap_pair();
  const auto z4 = cyclic_on_point(4);
  for (const auto& cover : swap_covers(swap.groupoid))
    for (const auto& phi : enumerate_onecocycles(swap.groupoid, cover, Integer(2))) {
      CHECK(onecocycle_independent(phi));
      CHECK(check_onecocycle_independence(swap.groupoid, cover, phi));
    }
  for (const auto& cover : cyclic_covers(z4.groupoid))
    for (const auto& phi : enumerate_onecocycles(z4.groupoid, cover, Integer(4)))
      CHECK(onecocycle_independent(phi));

  // two arrow sets and values that differ between them: not a cocycle
  const auto z2 = cyclic_on_point(2);
  const GroupoidCover doubled{{{0}}, {{0, 1}, {0, 1}}};
  TuCochain phi;
  phi.degree = 1;
  for (const auto& c : tu_cells(z2.groupoid, doubled, 1))
    phi.values[c] = c.index.at(0, 1) == 1 && c.tuple.arrows[0] == 1 ? Circle(Rational(1, 2)) : Circle();
  CHECK_FALSE(onecocycle_independent(phi));
  CHECK_THROWS_AS(check_onecocycle_independence(z2.groupoid, doubled, phi), NotACocycle);

  const auto trivial = GroupoidCover::trivial(z2.groupoid);
  for (const auto& psi : enumerate_onecocycles(z2.groupoid, trivial, Integer(2)))
    CHECK(onecocycle_independent(psi));
}
