#include <catch_amalgamated.hpp>

#include "twcech/fixtures.hpp"
#include "twcech/homology.hpp"

using namespace twcech;

namespace {

std::string groups(const Instance& in, int top) {
  const auto cx = assemble_complex(in.nerve, in.twist, ScalarKind::Z, top + 1);
  std::string out;
  for (int k = 0; k <= top; ++k) out += (k ? " | " : "") + to_string(cohomology_group(cx, k));
  return out;
}

}  // namespace

TEST_CASE("nerves") {
  const auto s2 = boundary_tetrahedron();
  CHECK(s2.count(0) == 4);
  CHECK(s2.count(1) == 6);
  CHECK(s2.count(2) == 4);
  CHECK(s2.dimension() == 2);
  CHECK(circle_nerve().count(1) == 3);
  CHECK(full_simplex(4).count(2) == 10);

  const auto t2 = torus_nerve();
  CHECK(t2.count(0) == 7);
  CHECK(t2.count(1) == 21);
  CHECK(t2.count(2) == 14);
  const auto cx = cech_complex(t2, 3);
  CHECK(cohomology_group(cx, 0, ScalarKind::Z).rank == 1);
  CHECK(cohomology_group(cx, 1, ScalarKind::Z).rank == 2);
  CHECK(cohomology_group(cx, 2, ScalarKind::Z).rank == 1);
  CHECK(cohomology_group(cx, 2, ScalarKind::Z).torsion.empty());
}

TEST_CASE("example instances") {
  CHECK(groups(hopf_instance(), 3) == "Z | 0 | 0 | Z");
  CHECK(groups(lens_instance(3), 3) == "Z | 0 | Z/3 | Z");
  CHECK(groups(t3_instance(), 3) == "Z | Z^3 | Z^3 | Z");
  CHECK(groups(nilmanifold_instance(1), 3) == "Z | Z^2 | Z^2 | Z");
  CHECK(groups(nilmanifold_instance(2), 3) == "Z | Z^2 | Z^2 + Z/2 | Z");
  CHECK(groups(s2_rank2_instance(2, 0), 4) == "Z | Z | Z/2 | Z + Z/2 | Z");

  CHECK(t3_instance().setup.has_value());
  CHECK(setup_problems(*torus_setup_instance().setup).empty());
  const auto b = boundary_setup_instance();
  CHECK(b.twist.at({0, 1, 2}) == IntegerVector{2, 3});
  CHECK_FALSE(hopf_instance().setup.has_value());
}

TEST_CASE("make_example") {
  CHECK(example_names().size() == 7);
  for (const auto& name : example_names()) CHECK(make_example(name).name == name);
  CHECK(make_example("lens").twist.at({0, 1, 2}) == IntegerVector{2});
  ExampleParameters p;
  p.k = 5;
  CHECK(make_example("lens", p).twist.at({0, 1, 2}) == IntegerVector{5});
  p = {};
  p.euler = std::pair{1, -4};
  CHECK(make_example("s2-rank2", p).twist.at({0, 1, 2}) == IntegerVector{1, -4});
  CHECK_THROWS_AS(make_example("klein"), UnknownExample);
}
