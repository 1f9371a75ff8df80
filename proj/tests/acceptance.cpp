// Acceptance driver: one line per criterion, exit status 1 if any fails.
// Expected groups are hand computations (Gysin and Kunneth sequences).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "random_instances.hpp"
#include "twcech/exactness.hpp"
#include "twcech/fixtures.hpp"
#include "twcech/tu_groupoid.hpp"

using namespace twcech;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

CohomologyGroup group(std::size_t rank, std::vector<int> torsion = {}) {
  CohomologyGroup g;
  g.rank = rank;
  for (int t : torsion) g.torsion.push_back(Integer(t));
  return g;
}

// Groups of `in` in the given degrees against the expected ones.
void expect_groups(Outcome& out, const Instance& in,
                   const std::vector<std::pair<int, CohomologyGroup>>& expected) {
  int top = 0;
  for (const auto& [k, g] : expected) top = std::max(top, k);
  const auto cx = assemble_complex(in.nerve, in.twist, ScalarKind::Z, top + 1);
  for (const auto& [k, g] : expected) {
    const auto got = cohomology_group(cx, k);
    out.require(got == g, in.name + " H^" + std::to_string(k) + " = " + to_string(got) +
                              ", expected " + to_string(g));
  }
}

bool d_squared_zero(const DimRedComplex& cx, int top) {
  for (int k = 0; k < top; ++k)
    if (!(cx.chain.differential(k + 1) * cx.chain.differential(k)).is_zero()) return false;
  return true;
}

Outcome d_squared() {
  Outcome out;
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto nerve = testing::random_nerve(rng, 6);
    const int n = 1 + trial % 3;
    const auto twist = testing::random_exact_twist(nerve, n, rng);
    const int top = nerve.dimension() + 2;
    out.require(d_squared_zero(assemble_complex(nerve, twist, ScalarKind::Z, top + 1), top),
                "D_F^2 != 0 on trial " + std::to_string(trial));
  }
  out.detail = out.passed ? "100 random instances" : out.detail;
  return out;
}

Outcome steenrod() {
  Outcome out;
  std::mt19937_64 rng(202);
  const auto nerve = full_simplex(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 2;
    const auto twist = testing::random_exact_twist(nerve, n, rng);
    const auto C = steenrod_cochain(nerve, twist);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const auto Fi = twist.component(i), Fj = twist.component(j);
        Cochain<Integer> cij(3, Integer(0));
        for (const auto& [s, v] : C.entries()) cij.set(s, v(i, j));
        const auto diff = cup_product(nerve, Fi, Fj) - cup_product(nerve, Fj, Fi) -
                          cech_differential(nerve, cij);
        out.require(diff.is_zero_cochain(), "identity fails on trial " + std::to_string(trial));
      }
  }
  out.detail = out.passed ? "50 twists on the 5-simplex" : out.detail;
  return out;
}

Outcome hopf() {
  Outcome out;
  expect_groups(out, hopf_instance(), {{2, group(0)}, {3, group(1)}});
  return out;
}

Outcome lens() {
  Outcome out;
  for (int k : {2, 3, 5}) expect_groups(out, lens_instance(k), {{2, group(0, {k})}, {3, group(1)}});
  return out;
}

Outcome rank_two() {
  Outcome out;
  expect_groups(out, s2_rank2_instance(2, 0), {{3, group(1, {2})}});
  expect_groups(out, s2_rank2_instance(2, 3), {{3, group(1)}});
  expect_groups(out, s2_rank2_instance(0, 0), {{3, group(2)}});
  return out;
}

Outcome three_torus() {
  Outcome out;
  expect_groups(out, t3_instance(), {{3, group(1)}});
  return out;
}

Outcome nilmanifold() {
  Outcome out;
  for (int k : {1, 2, 3}) {
    const auto torsion = k == 1 ? std::vector<int>{} : std::vector<int>{k};
    expect_groups(out, nilmanifold_instance(k), {{2, group(2, torsion)}, {3, group(1)}});
  }
  return out;
}

Outcome exact_sequences() {
  Outcome out;
  std::vector<Instance> fixtures{hopf_instance(), t3_instance()};
  for (int k : {2, 3, 5}) fixtures.push_back(lens_instance(k));
  for (auto [a, b] : {std::pair{2, 0}, {2, 3}, {0, 0}}) fixtures.push_back(s2_rank2_instance(a, b));
  for (int k : {1, 2, 3}) fixtures.push_back(nilmanifold_instance(k));
  std::size_t nodes = 0, cross = 0;
  for (const auto& in : fixtures) {
    const int top = in.nerve.dimension() + 2;
    const auto cx = assemble_complex(in.nerve, in.twist, ScalarKind::Z, top + 1);
    std::vector<LESReport> reports;
    for (int split : {1, 2}) reports.push_back(verify_exactness(column_filtration(cx, split)));
    for (int N : {2, 3, 4, 5, 6}) reports.push_back(verify_mod_n_les(cx.chain, Integer(N)));
    for (const auto& rep : reports)
      for (const auto& node : rep.nodes) {
        ++nodes;
        out.require(node.exact, in.name + ": " + rep.name + " not exact at " + node.group +
                                    " degree " + std::to_string(node.degree));
      }
    for (const auto& c : verify_circle_sequence(cx.chain, {Integer(2), Integer(3), Integer(4),
                                                           Integer(5), Integer(6)})) {
      ++cross;
      out.require(c.ok, in.name + ": " + c.what + " degree " + std::to_string(c.degree));
    }
  }
  if (out.passed)
    out.detail = std::to_string(fixtures.size()) + " fixtures, " + std::to_string(nodes) +
                 " nodes, " + std::to_string(cross) + " Q/Z cross-checks";
  return out;
}

Outcome tu_suite() {
  Outcome out;
  const auto swap = transformation_groupoid({2}, {"a", "b"}, {{1, 0}});
  const auto z4 = transformation_groupoid({4}, {"pt"}, {{0}});
  const auto& S = swap.groupoid;
  const auto& Z4 = z4.groupoid;
  const std::vector<GroupoidCover> swap_covers{
      GroupoidCover::trivial(S),
      {{{0}, {1}}, {{0, 1, 2, 3}}},
      {{{0}, {1}}, {{0, 1, 2, 3}, {0, 2}}},
      {{{0, 1}, {0}}, {{0, 1}, {2, 3}, {0, 1, 2, 3}}}};
  const std::vector<GroupoidCover> cyclic_covers{
      GroupoidCover::trivial(Z4),
      {{{0}}, {{0, 1, 2}, {0, 2, 3}}},
      {{{0}, {0}}, {{0}, {1}, {2}, {3}}}};
  std::size_t cocycles = 0;
  for (const auto& [G, covers, N] :
       {std::tuple{&S, &swap_covers, 2}, std::tuple{&Z4, &cyclic_covers, 4}})
    for (const auto& cover : *covers) {
      const auto tc = tu_complex(*G, cover, 4);
      for (int k = 0; k + 1 < 4; ++k)
        out.require((tc.chain.differential(k + 1) * tc.chain.differential(k)).is_zero(),
                    "Tu d^2 != 0 in degree " + std::to_string(k));
      for (const auto& phi : enumerate_onecocycles(*G, cover, Integer(N))) {
        ++cocycles;
        out.require(onecocycle_independent(phi), "a 1-cocycle depends on its arrow cell");
      }
    }
  const auto z2 = transformation_groupoid({2}, {"pt"}, {{0}});
  const auto pt = GroupoidCover::trivial(z2.groupoid);
  CohomologyGroup half = group(0, {2}), none = group(0);
  half.coefficients = none.coefficients = ScalarKind::QZ;
  out.require(brute_cohomology(z2.groupoid, pt, 1, Integer(2)) == half, "H^1 with (1/2)Z/Z");
  out.require(brute_cohomology(z2.groupoid, pt, 2, Integer(4)) == none, "H^2 with (1/4)Z/Z");
  if (out.passed) out.detail = "7 covers, " + std::to_string(cocycles) + " 1-cocycles";
  return out;
}

StandardSetup acceptance_setup(int trial, std::mt19937_64& rng) {
  switch (trial % 4) {
    case 0: return random_setup(boundary_tetrahedron(), 1 + trial % 3, rng);
    case 1: return random_setup(full_simplex(3), 1 + trial % 3, rng);
    case 2: return random_setup(torus_nerve(), 1 + trial % 3, rng);
    default: return trial % 8 == 3 ? *boundary_setup_instance().setup
                                   : *torus_setup_instance().setup;
  }
}

Outcome surjectivity() {
  Outcome out;
  constexpr std::size_t samples = 200;
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng(3000 + trial);
    const auto setup = acceptance_setup(trial, rng);
    BrauerTriple t(setup);
    t.add(random_g_term(setup, rng));
    t.add(random_pullback_term(setup, rng));
    WLiftData w;
    w.seed = 5000 + trial;
    const auto closure = check_tu_closure(t, w, closure_plan(setup, samples, trial));
    out.require(closure.passed() && closure.samples >= samples,
                "closure fails on trial " + std::to_string(trial));
    const auto witnesses = tudimred_witnesses(t, w, samples, trial);
    out.require(witnesses.passed() && witnesses.samples >= samples,
                "identities fail on trial " + std::to_string(trial));
  }
  if (out.passed) out.detail = "50 setups, 200 samples each";
  return out;
}

Outcome lift_independence() {
  Outcome out;
  std::mt19937_64 rng(404);
  for (const auto& in : {boundary_setup_instance(), torus_setup_instance()})
    for (int trial = 0; trial < 20; ++trial)
      out.require(bockstein_of_g_triple(*in.setup, random_g_term(*in.setup, rng).g).all_zero(),
                  in.name + " trial " + std::to_string(trial));
  if (out.passed) out.detail = "20 rational g on each of two setups";
  return out;
}

Outcome m_data() {
  Outcome out;
  std::size_t total = 0;
  std::uint64_t seed = 505;
  for (const auto& in : {boundary_setup_instance(), torus_setup_instance(), t3_instance()}) {
    WLiftData w;
    w.seed = seed;
    const auto report = check_m_data(*in.setup, w, 1000, seed++);
    total += report.samples;
    out.require(report.passed(), in.name + ": " + (report.failures.empty()
                                                      ? std::string()
                                                      : report.failures.front().identity));
  }
  if (out.passed) out.detail = std::to_string(total) + " samples on three setups";
  return out;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "D_F squares to zero", 10, d_squared},
      {2, "Steenrod cochain identity", 5, steenrod},
      {3, "Hopf fibration groups", 1, hopf},
      {4, "lens space groups", 3, lens},
      {5, "rank-two twists on the sphere", 6, rank_two},
      {6, "three-torus", 0, three_torus},
      {7, "Heisenberg nilmanifolds", 15, nilmanifold},
      {8, "long exact sequences", 0, exact_sequences},
      {9, "Tu-Cech groupoid suite", 30, tu_suite},
      {10, "surjectivity cocycle", 60, surjectivity},
      {11, "lift independence", 10, lift_independence},
      {12, "m-data", 5, m_data},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds <= c.limit_seconds;
    const bool ok = result.passed && in_time;
    if (!ok) ++failed;
    const std::string limit =
        c.limit_seconds == 0 ? "no limit" : "limit " + std::to_string(int(c.limit_seconds)) + " s";
    std::printf("[%s] %2d %-32s %7.3f s (%s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), seconds, limit.c_str(), result.detail.empty() ? "" : "  ",
                result.detail.c_str());
    if (result.passed && !in_time) std::printf("     over the time limit\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
