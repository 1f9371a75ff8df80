#pragma once

// Standard-setup data, integer m-values, the surjectivity Tu-Čech 2-cocycle,
// its witnesses, and the lift-independence computation.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twcech/complex.hpp"

namespace twcech {

/// Rational s on ordered edges with s_aa = 0; F = ∂s must be integral.
struct StandardSetup {
  Nerve nerve;
  int n = 0;
  std::map<std::pair<int, int>, RationalVector> s;  // ordered pairs a != b
  std::map<int, int> base;                          // component -> vertex

  /// s_ab on any pair spanning an edge (zero when a = b).  Throws NotInNerve.
  RationalVector s_at(int a, int b) const;
  /// F_abc = s_bc − s_ac + s_ab on any triple (rational when s is corrupted).
  RationalVector F_at(int a, int b, int c) const;
  /// Integral F_abc.  Throws NonInteger.
  IntegerVector F_int(int a, int b, int c) const;
  int base_of(int vertex) const;

  /// F on the increasing triangles, validated as a twist.
  TwistCocycle twist() const;
};

/// Fills in the missing orientation of each edge by antisymmetry.
StandardSetup make_setup(Nerve nerve, int n,
                         const std::map<std::pair<int, int>, RationalVector>& s,
                         std::map<int, int> base = {});

/// Problems with antisymmetry, coverage, base vertices or integrality.
std::vector<std::string> setup_problems(const StandardSetup& setup);

/// s_ab = τ_b − τ_a + η_ab with random rational τ and integer η (a < b).
StandardSetup random_setup(const Nerve& nerve, int n, std::mt19937_64& rng);

/// Point over component z with fiber coordinate ξ ∈ [0,1)^n.
struct FiberSample {
  int component = 0;
  std::vector<Rational> xi;

  bool operator<(const FiberSample& o) const {
    return component != o.component ? component < o.component : xi < o.xi;
  }
  bool operator==(const FiberSample& o) const = default;
};

FiberSample make_sample(int component, const RationalVector& xi);

/// (−g)·x: the fiber coordinate moves by −g mod 1.
FiberSample translate(const FiberSample& x, const RationalVector& g);

/// σ_λ: ξ = [−s_{base, λ}].
FiberSample section_sample(const StandardSetup& setup, int vertex);

/// Integer offsets n_λ(x) of the lifts w̃_λ.  Explicit entries win; other
/// points get zero, or pseudo-random offsets in [−range, range] when a seed
/// is set.  With `normalized`, every offset at σ_λ is zero.
struct WLiftData {
  std::map<std::pair<int, FiberSample>, IntegerVector> explicit_offsets;
  std::optional<std::uint64_t> seed;
  int range = 2;
  bool normalized = true;

  IntegerVector offset(const StandardSetup& setup, int vertex,
                       const FiberSample& x) const;
};

/// w̃_λ(x) = [ξ + s_{base, λ}] + n_λ(x).
RationalVector w_lift(const StandardSetup& setup, const WLiftData& w,
                      int vertex, const FiberSample& x);

/// m_ab(g, x) = s_ab − w̃_b(x) + w̃_a((−g)·x) + g.  Throws NonInteger.
IntegerVector m_value(const StandardSetup& setup, const WLiftData& w, int a,
                      int b, const RationalVector& g, const FiberSample& x);

/// Σ_{i<j} f_ij m_i l_j in Q/Z.
Circle mackey_pairing(const UpperTriValue<Circle>& f, const IntegerVector& m,
                      const IntegerVector& l);

/// A degree-2 triple (φ20, φ11, φ02) evaluated on arbitrary index tuples
/// through its rational lift.  It is a sum of generator terms.
class BrauerTriple {
 public:
  struct GTerm {
    std::map<int, UpperTriValue<Rational>> g;  // per component
  };
  struct CoboundaryTerm {
    Cochain<Rational> psi10;                   // alternating-extended
    std::map<int, RationalVector> psi01;       // per vertex
  };
  struct PullbackTerm {
    Cochain<Rational> beta;                    // alternating-extended 2-cochain
  };

  BrauerTriple() = default;
  explicit BrauerTriple(StandardSetup setup) : setup_(std::move(setup)) {}

  const StandardSetup& setup() const { return setup_; }
  int n() const { return setup_.n; }

  BrauerTriple& add(GTerm t) { g_terms_.push_back(std::move(t)); return *this; }
  BrauerTriple& add(CoboundaryTerm t) { cob_terms_.push_back(std::move(t)); return *this; }
  BrauerTriple& add(PullbackTerm t) { pullbacks_.push_back(std::move(t)); return *this; }
  bool is_zero_triple() const {
    return g_terms_.empty() && cob_terms_.empty() && pullbacks_.empty();
  }

  // rational lifts
  Rational phi20(int a, int b, int c) const;
  Rational phi11(int a, int b, const IntegerVector& m) const;
  UpperTriValue<Rational> phi02(int a) const;

  // values in Q/Z
  Circle phi20_circle(int a, int b, int c) const { return Circle(phi20(a, b, c)); }
  Circle phi11_circle(int a, int b, const IntegerVector& m) const {
    return Circle(phi11(a, b, m));
  }
  UpperTriValue<Circle> phi02_circle(int a) const;

  /// Vector of φ11_ab(e_l), the column-1 value of the lift.
  RationalVector phi11_vector(int a, int b) const;

 private:
  StandardSetup setup_;
  std::vector<GTerm> g_terms_;
  std::vector<CoboundaryTerm> cob_terms_;
  std::vector<PullbackTerm> pullbacks_;
};

/// φ02 = [g], φ11_ab(m) = [Σ g_ij (m_i s_ab,j − s_ab,i m_j)],
/// φ20_abc = [Σ g_ij (s_ab,i s_bc,j − F_abc,i s_ac,j)].
BrauerTriple lift_triple_from_g(const StandardSetup& setup,
                                const std::map<int, UpperTriValue<Rational>>& g);

/// Random g, coboundary and pullback triples for property tests.
BrauerTriple::GTerm random_g_term(const StandardSetup& setup, std::mt19937_64& rng);
BrauerTriple::CoboundaryTerm random_coboundary_term(const StandardSetup& setup,
                                                    std::mt19937_64& rng);
BrauerTriple::PullbackTerm random_pullback_term(const StandardSetup& setup,
                                                std::mt19937_64& rng);

/// Index tuples of the given length whose distinct entries span a simplex.
std::vector<std::vector<int>> spanning_tuples(const Nerve& nerve, int length);

/// A failed identity with its context.
struct IdentityFailure {
  std::string identity;
  std::string context;
  std::string value;
};

/// ∂φ02 = 0, ∂φ11(m) = Q(m,F) − Q(F,m) and
/// ∂φ20 = φ11_01(F_123) + Q(F_012,F_023) − Q(F_123,F_013), on all spanning
/// tuples and unit vectors m.
std::vector<IdentityFailure> triple_invariant_failures(const BrauerTriple& t);

/// φ(a,b,c; S,T,x) = φ20_abc + φ11_ab(m_bc(T,x)) − Q(m_bc(T,x), m_ab(S,(−T)x))
///                  + Q(F_abc, m_ac(S+T,x)), Q paired against φ02_a.
Circle surjectivity_cocycle(const BrauerTriple& t, const WLiftData& w, int a,
                            int b, int c, const RationalVector& S,
                            const RationalVector& T, const FiberSample& x);

struct ClosureSample {
  std::vector<int> tuple;  // λ0 λ1 λ2 λ3
  RationalVector r, s, t;
  FiberSample x;
};

/// Seeded random samples: spanning 4-tuples, group elements with small
/// denominators and fiber points in (1/12)Z.
std::vector<ClosureSample> closure_plan(const StandardSetup& setup,
                                        std::size_t count, std::uint64_t seed);

struct ClosureReport {
  std::size_t samples = 0;
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// φ_123(s,t,x) − φ_023(r+s,t,x) + φ_013(r,s+t,x) − φ_012(r,s,(−t)x) = 0.
ClosureReport check_tu_closure(const BrauerTriple& t, const WLiftData& w,
                               const std::vector<ClosureSample>& plan);

struct WitnessReport {
  std::size_t samples = 0;
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// τ10 = 0 and τ01_a(m) = −φ20_aaa − Q_a(m, m).
Circle tau01(const BrauerTriple& t, int a, const IntegerVector& m);

/// The three identities relating the triple to the surjectivity cocycle,
/// checked at `count` seeded samples.
WitnessReport tudimred_witnesses(const BrauerTriple& t, const WLiftData& w,
                                 std::size_t count, std::uint64_t seed);

/// D over Q applied to the rational lift of the g-triple, as integer
/// cochains (Δ30, Δ21, Δ12).  Throws NonInteger if the image is not integral.
struct LiftBockstein {
  Cochain<Integer> d30;
  Cochain<IntegerVector> d21;
  Cochain<UpperTriValue<Integer>> d12;

  bool all_zero() const {
    return d30.is_zero_cochain() && d21.is_zero_cochain() &&
           d12.is_zero_cochain();
  }
};
LiftBockstein bockstein_of_g_triple(
    const StandardSetup& setup, const std::map<int, UpperTriValue<Rational>>& g);

/// The rational lift on increasing tuples, as a degree-2 triple over Q.
DimRedCochain<Rational> triple_cochain(const BrauerTriple& t);

/// Failures of integrality, coherence m_ab(s,(−t)x) + m_bc(t,x) =
/// m_ac(s+t,x) + F_abc, and the two normalizations at σ samples.
struct MDataReport {
  std::size_t samples = 0;
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};
MDataReport check_m_data(const StandardSetup& setup, const WLiftData& w,
                         std::size_t count, std::uint64_t seed);

RationalVector random_group_element(int n, std::mt19937_64& rng);
FiberSample random_fiber_sample(int component, int n, std::mt19937_64& rng);

}  // namespace twcech
