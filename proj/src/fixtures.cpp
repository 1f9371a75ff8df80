#include "twcech/fixtures.hpp"

#include "twcech/homology.hpp"

namespace twcech {

namespace {

RationalVector rv(std::initializer_list<Rational> v) { return RationalVector(v); }

/// s_ab = τ_b − τ_a + η_ab on every edge.
StandardSetup setup_from(const Nerve& nerve, int n,
                         const std::map<int, RationalVector>& tau,
                         const std::map<std::pair<int, int>, RationalVector>& eta) {
  std::map<std::pair<int, int>, RationalVector> s;
  for (const auto& e : nerve.simplices(1)) {
    RationalVector v = tau.at(e[1]) - tau.at(e[0]);
    auto it = eta.find({e[0], e[1]});
    if (it != eta.end()) v = v + it->second;
    s[{e[0], e[1]}] = v;
  }
  return make_setup(nerve, n, s);
}

}  // namespace

Nerve boundary_tetrahedron() {
  return Nerve::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Nerve circle_nerve() { return Nerve::from_facets({{0, 1}, {1, 2}, {0, 2}}); }

Nerve full_simplex(int k) {
  std::vector<int> f(k + 1);
  for (int i = 0; i <= k; ++i) f[i] = i;
  return Nerve::from_facets({f});
}

Nerve torus_nerve() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  Nerve nerve = Nerve::from_facets(facets);
  const auto cx = cech_complex(nerve, 3);
  const CohomologyGroup z{1, {}, ScalarKind::Z}, z2{2, {}, ScalarKind::Z};
  if (nerve.dimension() != 2 || !(cohomology_group(cx, 0, ScalarKind::Z) == z) ||
      !(cohomology_group(cx, 1, ScalarKind::Z) == z2) ||
      !(cohomology_group(cx, 2, ScalarKind::Z) == z))
    throw Error("seven-vertex torus triangulation failed its cohomology check");
  return nerve;
}

Instance hopf_instance() {
  Instance in = lens_instance(1);
  in.name = "hopf";
  return in;
}

Instance lens_instance(int k) {
  const Nerve nerve = boundary_tetrahedron();
  return {"lens", nerve, point_twist(nerve, {0, 1, 2}, IntegerVector{Integer(k)}),
          std::nullopt};
}

Instance t3_instance() {
  const Nerve nerve = circle_nerve();
  const auto setup = setup_from(
      nerve, 2,
      {{0, rv({0, 0})}, {1, rv({Rational(1, 3), Rational(1, 2)})},
       {2, rv({Rational(2, 3), Rational(-1, 4)})}},
      {});
  return {"t3", nerve, setup.twist(), setup};
}

Instance nilmanifold_instance(int k) {
  const Nerve nerve = torus_nerve();
  return {"nilmanifold", nerve,
          point_twist(nerve, nerve.simplices(2).front(), IntegerVector{Integer(k)}),
          std::nullopt};
}

Instance s2_rank2_instance(int a, int b) {
  const Nerve nerve = boundary_tetrahedron();
  return {"s2-rank2", nerve,
          point_twist(nerve, {0, 1, 2}, IntegerVector{Integer(a), Integer(b)}),
          std::nullopt};
}

Instance torus_setup_instance() {
  const Nerve nerve = torus_nerve();
  std::map<int, RationalVector> tau;
  for (int v = 0; v < 7; ++v) tau[v] = rv({Rational(v, 7), Rational(-v * v, 3)});
  const auto setup = setup_from(nerve, 2, tau,
                                {{{0, 1}, rv({1, 2})}, {{2, 4}, rv({-1, 0})}});
  return {"torus-nerve", nerve, setup.twist(), setup};
}

Instance boundary_setup_instance() {
  const Nerve nerve = boundary_tetrahedron();
  std::map<int, RationalVector> tau;
  for (int v = 0; v < 4; ++v) tau[v] = rv({Rational(v, 4), Rational(-v, 6)});
  const auto setup = setup_from(nerve, 2, tau, {{{0, 1}, rv({2, 3})}});
  return {"boundary-setup", nerve, setup.twist(), setup};
}

std::vector<std::string> example_names() {
  return {"hopf", "lens", "t3", "nilmanifold", "s2-rank2", "torus-nerve",
          "boundary-setup"};
}

Instance make_example(const std::string& name, const ExampleParameters& p) {
  if (name == "hopf") return hopf_instance();
  if (name == "lens") return lens_instance(p.k.value_or(2));
  if (name == "t3") return t3_instance();
  if (name == "nilmanifold") return nilmanifold_instance(p.k.value_or(1));
  if (name == "s2-rank2") {
    const auto e = p.euler.value_or(std::pair{2, 0});
    return s2_rank2_instance(e.first, e.second);
  }
  if (name == "torus-nerve") return torus_setup_instance();
  if (name == "boundary-setup") return boundary_setup_instance();
  throw UnknownExample("unknown example '" + name + "'");
}

}  // namespace twcech
