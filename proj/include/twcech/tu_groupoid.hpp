#pragma once

// Finite groupoids, presimplicial covers built from covers of objects and
// arrows, and the Tu-Čech complex with (1/N)Z/Z coefficients.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twcech/homology.hpp"

namespace twcech {

/// Finite groupoid given by tables.  compose(a, b) is "a then b" and is
/// defined when target(a) = source(b).
class FiniteGroupoid {
 public:
  struct ArrowData {
    int source = 0;
    int target = 0;
    std::string label;
  };

  FiniteGroupoid(std::vector<std::string> objects, std::vector<ArrowData> arrows,
                 std::map<std::pair<int, int>, int> composition);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_name(int x) const { return objects_.at(x); }
  const ArrowData& arrow(int a) const { return arrows_.at(a); }
  int source(int a) const { return arrows_.at(a).source; }
  int target(int a) const { return arrows_.at(a).target; }
  int identity(int x) const { return identity_.at(x); }
  int inverse(int a) const { return inverse_.at(a); }

  std::optional<int> compose(int a, int b) const;

 private:
  void validate();

  std::vector<std::string> objects_;
  std::vector<ArrowData> arrows_;
  std::map<std::pair<int, int>, int> composition_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
};

/// G = Z/m_1 × ... × Z/m_r acting on a finite set; `generator_action[i]` is
/// the permutation by which the i-th unit vector acts.  Arrows are (g, x)
/// with source (−g)·x and target x.
struct TransformationGroupoid {
  std::vector<int> moduli;
  std::vector<std::string> points;
  std::vector<std::vector<int>> generator_action;

  std::vector<std::vector<int>> elements;   // all g, in lexicographic order
  std::vector<std::vector<int>> act;        // act[g][x] = g·x
  FiniteGroupoid groupoid;

  int arrow_id(const std::vector<int>& g, int x) const;
};

TransformationGroupoid transformation_groupoid(
    std::vector<int> moduli, std::vector<std::string> points,
    std::vector<std::vector<int>> generator_action);

/// Element of G^(n): n composable arrows, or a single object when n = 0.
struct ComposableTuple {
  std::vector<int> arrows;
  int object = -1;

  std::size_t length() const { return arrows.size(); }
  bool operator<(const ComposableTuple& o) const {
    return arrows != o.arrows ? arrows < o.arrows : object < o.object;
  }
  bool operator==(const ComposableTuple& o) const = default;
};

std::vector<ComposableTuple> composable_tuples(const FiniteGroupoid& G, int n);

/// ε̃_i: drop the first arrow (i = 0), drop the last (i = n), or compose
/// arrows i−1 and i.  On single arrows ε̃_0 gives the target, ε̃_1 the source.
ComposableTuple face_map(const FiniteGroupoid& G, int i,
                         const ComposableTuple& t);

/// λ ∈ Λ'_n: object-cover indices λ_0..λ_n and arrow-cover indices λ_lp.
struct PresimplicialIndex {
  int n = 0;
  std::vector<int> vertex;  // size n + 1
  std::vector<int> edge;    // packed l < p, size n(n+1)/2

  int at(int l) const { return vertex.at(l); }
  int at(int l, int p) const;
  bool operator<(const PresimplicialIndex& o) const {
    return vertex != o.vertex ? vertex < o.vertex : edge < o.edge;
  }
  bool operator==(const PresimplicialIndex& o) const = default;
};

/// g̃(λ)(f) = λ(g∘f) for a strictly increasing g: [k] → [n], given as the
/// list of its values.
PresimplicialIndex index_face(const std::vector<int>& g,
                              const PresimplicialIndex& lambda);

/// The index face along ε_i (omit i).
PresimplicialIndex index_face(int i, const PresimplicialIndex& lambda);

/// Covers 𝒰⁰ of objects and 𝒰¹ of arrows, as membership lists.
struct GroupoidCover {
  std::vector<std::vector<int>> objects;
  std::vector<std::vector<int>> arrows;

  static GroupoidCover trivial(const FiniteGroupoid& G);
  bool object_in(int set, int x) const;
  bool arrow_in(int set, int a) const;
};

bool cell_membership(const FiniteGroupoid& G, const GroupoidCover& cover,
                     const PresimplicialIndex& lambda,
                     const ComposableTuple& t);

struct TuCell {
  PresimplicialIndex index;
  ComposableTuple tuple;

  bool operator<(const TuCell& o) const {
    return index == o.index ? tuple < o.tuple : index < o.index;
  }
  bool operator==(const TuCell& o) const = default;
};

/// All cells of degree n.  Throws TooLarge past `budget` candidate checks.
std::vector<TuCell> tu_cells(const FiniteGroupoid& G, const GroupoidCover& cover,
                             int n, std::size_t budget = 2'000'000);

/// Q/Z-valued Tu cochain, defined exactly on its cells.
struct TuCochain {
  int degree = 0;
  std::map<TuCell, Circle> values;

  /// Throws CellUndefined if the cell carries no value.
  const Circle& at(const TuCell& c) const;
};

/// (∂φ)_μ(γ) = Σ_i (−1)^i φ_{ε̃_i μ}(ε̃_i γ) on every degree n+1 cell.
TuCochain tu_differential(const FiniteGroupoid& G, const GroupoidCover& cover,
                          const TuCochain& phi);

/// The Tu-Čech complex in degrees 0..top with integer matrices.
struct TuComplex {
  std::vector<std::vector<TuCell>> cells;
  CochainComplex chain;
};

TuComplex tu_complex(const FiniteGroupoid& G, const GroupoidCover& cover,
                     int top, std::size_t budget = 2'000'000);

/// Cohomology with (1/N)Z/Z ⊂ Q/Z coefficients: (1/N)-valued cocycles
/// modulo Q/Z-coboundaries.  k ≤ 2.
CohomologyGroup brute_cohomology(const FiniteGroupoid& G,
                                 const GroupoidCover& cover, int k,
                                 const Integer& N,
                                 std::size_t budget = 2'000'000);

/// Cohomology with literal Z/N coefficients.
CohomologyGroup finite_coefficient_cohomology(const FiniteGroupoid& G,
                                              const GroupoidCover& cover, int k,
                                              const Integer& N,
                                              std::size_t budget = 2'000'000);

/// Every (1/N)Z/Z-valued 1-cocycle.  Throws TooLarge past `limit`.
std::vector<TuCochain> enumerate_onecocycles(const FiniteGroupoid& G,
                                             const GroupoidCover& cover,
                                             const Integer& N,
                                             std::size_t limit = 100'000);

/// φ_{λ0 λ1 λ01}(γ) = φ_{λ0 λ1 λ01'}(γ) whenever both cells exist.
bool onecocycle_independent(const TuCochain& phi);

/// As above, but first throws NotACocycle unless ∂φ = 0.
bool check_onecocycle_independence(const FiniteGroupoid& G,
                                   const GroupoidCover& cover,
                                   const TuCochain& phi);

}  // namespace twcech
