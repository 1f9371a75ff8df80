#pragma once

// Cohomology groups of assembled complexes, coboundary witnesses and the
// Bockstein of the sequence 0 → Z → Q → Q/Z → 0.

#include <optional>
#include <string>
#include <vector>

#include "twcech/complex.hpp"
#include "twcech/smith.hpp"

namespace twcech {

struct CohomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  ScalarKind coefficients = ScalarKind::Z;

  bool operator==(const CohomologyGroup&) const = default;
};

/// Human-readable form such as "Z^2 + Z/2" or "(Q/Z)^1 + Z/3".
std::string to_string(const CohomologyGroup& g);

/// H^k of the complex.  Needs d_k and d_{k−1}; throws DegreeOutOfRange.
CohomologyGroup cohomology_group(const CochainComplex& cx, int k,
                                 ScalarKind scalar);
CohomologyGroup cohomology_group(const DimRedComplex& cx, int k,
                                 ScalarKind scalar);
inline CohomologyGroup cohomology_group(const DimRedComplex& cx, int k) {
  return cohomology_group(cx, k, cx.scalar);
}

/// Obstruction to z ∈ im d_{k−1}: in the SNF coordinates c = U z of d_{k−1},
/// c_i mod d_i for pivot rows and c_i itself past the rank.
struct Residue {
  std::size_t index = 0;
  Integer value;
  Integer modulus;  // 0 for rows past the rank
};

struct CoboundaryResult {
  bool is_coboundary = false;
  std::vector<Integer> witness;    // d_{k−1} witness = z when solvable
  std::vector<Residue> residues;   // nonzero obstructions otherwise
};

/// Solve d_{k−1} x = z over Z.  Throws NotACocycle if d_k z ≠ 0.
CoboundaryResult coboundary_witness(const CochainComplex& cx, int k,
                                    const std::vector<Integer>& z);

/// Is z (Q/Z-valued) a Q/Z-coboundary?  Throws NotACocycle if not closed.
bool is_circle_coboundary(const CochainComplex& cx, int k,
                          const std::vector<Circle>& z);

/// Lift z by its [0,1) representatives and apply d_k over Q; the result is
/// integral and closed.  Throws NotACocycle if z is not a Q/Z-cocycle.
std::vector<Integer> bockstein(const CochainComplex& cx, int k,
                               const std::vector<Circle>& z);

/// Order of the class of an integer cocycle in H^k(Z); 0 if infinite.
Integer class_order(const CochainComplex& cx, int k,
                    const std::vector<Integer>& z);

/// For each invariant factor d of H^{k+1}(Z): a (1/d)Z/Z-valued k-cocycle
/// whose Bockstein represents a class of order d.
struct TorsionLift {
  Integer order;
  std::vector<Circle> cocycle;
  std::vector<Integer> generator;  // integer (k+1)-cocycle
};
std::vector<TorsionLift> torsion_lifts(const CochainComplex& cx, int k);

/// H^k with literal Z/N chain coefficients.
QuotientGroup mod_n_cohomology(const CochainComplex& cx, int k,
                               const Integer& N);

/// Prediction of the universal coefficient theorem for H^k(Z/N).
QuotientGroup mod_n_prediction(const CochainComplex& cx, int k,
                               const Integer& N);

/// Subgroup of H^k(Q/Z) represented by (1/N)Z/Z-valued cocycles, computed at
/// chain level.
QuotientGroup circle_n_torsion(const CochainComplex& cx, int k,
                               const Integer& N);

/// The N-torsion of (Q/Z)^r ⊕ T_{k+1} predicted from H^k(Z), H^{k+1}(Z).
QuotientGroup circle_n_torsion_prediction(const CochainComplex& cx, int k,
                                          const Integer& N);

// Lattices of one degree, all inside Z^{dim C^k}.
Lattice cocycles(const CochainComplex& cx, int k);
Lattice coboundaries(const CochainComplex& cx, int k);

}  // namespace twcech
