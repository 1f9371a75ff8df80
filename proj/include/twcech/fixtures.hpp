#pragma once

// Worked example instances.

#include <optional>
#include <string>
#include <vector>

#include "twcech/brauer.hpp"

namespace twcech {

struct Instance {
  std::string name;
  Nerve nerve;
  TwistCocycle twist;
  std::optional<StandardSetup> setup;
};

/// ∂Δ³: four vertices, the four triangles.  A cover of S².
Nerve boundary_tetrahedron();
/// Three vertices on a cycle.  A cover of S¹.
Nerve circle_nerve();
/// The full simplex on vertices 0..k.
Nerve full_simplex(int k);

/// Seven-vertex triangulation of T².  Checked to have the integer
/// cohomology of the torus before it is returned; throws Error otherwise.
Nerve torus_nerve();

Instance hopf_instance();
/// F = k on the triangle (0,1,2) of ∂Δ³.
Instance lens_instance(int k);
/// S¹ nerve, n = 2, F = 0, with a standard setup.
Instance t3_instance();
/// Torus nerve, n = 1, F = k on one triangle.
Instance nilmanifold_instance(int k);
/// ∂Δ³, n = 2, F = (a, b) on (0,1,2).
Instance s2_rank2_instance(int a, int b);
/// Torus nerve, n = 2, with a standard setup.
Instance torus_setup_instance();
/// ∂Δ³, n = 2, standard setup with integer part η_01 = (2,3).
Instance boundary_setup_instance();

struct ExampleParameters {
  std::optional<int> k;
  std::optional<std::pair<int, int>> euler;
};

/// Names: hopf, lens, t3, nilmanifold, s2-rank2, torus-nerve,
/// boundary-setup.  Throws UnknownExample.
Instance make_example(const std::string& name, const ExampleParameters& p = {});
std::vector<std::string> example_names();

}  // namespace twcech
