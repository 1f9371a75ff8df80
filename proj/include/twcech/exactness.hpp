#pragma once

// Long exact sequences of cohomology, certified node by node on lattices of
// cochain representatives.

#include <string>
#include <vector>

#include "twcech/homology.hpp"

namespace twcech {

/// 0 → A →i B →p C → 0, degreewise; i[k], p[k] act on degree k.
struct ShortExactSequence {
  std::string name;
  CochainComplex A, B, C;
  std::vector<DenseMatrix> i, p;
};

/// One node of a long exact sequence: exactness at `group` in `degree`,
/// i.e. the kernel of the outgoing map equals the image of the incoming one.
/// Both are reported as subgroups of the node's cohomology.
struct LESNode {
  std::string group;
  int degree = 0;
  bool exact = false;
  QuotientGroup kernel;
  QuotientGroup image;
};

struct LESReport {
  std::string name;
  std::vector<LESNode> nodes;
  /// Connecting maps H^k(C) → H^{k+1}(A) on a cocycle basis of C^k.
  std::vector<DenseMatrix> connecting;

  bool all_exact() const;
};

/// Throws NotSES unless i is injective, p is surjective over Z,
/// ker p = im i, and both commute with the differentials.
void check_short_exact(const ShortExactSequence& ses);

LESReport verify_exactness(const ShortExactSequence& ses);

/// 0 → (columns < split) → C_F → (columns ≥ split) → 0 with split 1 or 2.
ShortExactSequence column_filtration(const DimRedComplex& cx, int split);

/// Lattice certification of the LES of 0 → Z →N Z → Z/N → 0.
LESReport verify_mod_n_les(const CochainComplex& cx, const Integer& N);

/// Cross-checks of Q/Z groups: rank over Q, chain-level Z/N and (1/N)Z/Z
/// groups against universal coefficients, and Bockstein orders on torsion.
struct CircleCheck {
  std::string what;
  int degree = 0;
  bool ok = false;
  std::string detail;
};
std::vector<CircleCheck> verify_circle_sequence(const CochainComplex& cx,
                                                const std::vector<Integer>& Ns);

}  // namespace twcech
