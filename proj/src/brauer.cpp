#include "twcech/brauer.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace twcech {

namespace {

RationalVector rep0(const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = fractional_part(v[i]);
  return r;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

/// Σ_{i<j} f_ij u_i v_j over Q.
Rational q_form(const UpperTriValue<Rational>& f, const RationalVector& u,
                const RationalVector& v) {
  Rational sum = 0;
  const std::size_t n = f.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += f(i, j) * u[i] * v[j];
  return sum;
}

std::string show(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string show(const IntegerVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string show(const FiberSample& x) {
  std::string s = "z" + std::to_string(x.component) + ":(";
  for (std::size_t i = 0; i < x.xi.size(); ++i)
    s += (i ? "," : "") + to_string(x.xi[i]);
  return s + ")";
}

std::string show(const std::vector<int>& t) { return to_string(Simplex(t)); }

Rational random_rational(std::mt19937_64& rng, int num, std::vector<int> dens) {
  std::uniform_int_distribution<int> nd(-num, num);
  std::uniform_int_distribution<std::size_t> dd(0, dens.size() - 1);
  return Rational(nd(rng), dens[dd(rng)]);
}

IntegerVector random_integer_vector(int n, int range, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-range, range);
  IntegerVector v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

RationalVector StandardSetup::s_at(int a, int b) const {
  if (a == b) return RationalVector::zero(n);
  auto it = s.find({a, b});
  if (it == s.end())
    throw NotInNerve("no s value on the pair (" + std::to_string(a) + "," +
                     std::to_string(b) + ")");
  return it->second;
}

RationalVector StandardSetup::F_at(int a, int b, int c) const {
  return s_at(b, c) - s_at(a, c) + s_at(a, b);
}

IntegerVector StandardSetup::F_int(int a, int b, int c) const {
  const auto f = F_at(a, b, c);
  IntegerVector out(n);
  for (int i = 0; i < n; ++i) {
    if (!is_integral(f[i]))
      throw NonInteger("F on (" + std::to_string(a) + "," + std::to_string(b) +
                       "," + std::to_string(c) + ") = " + show(f) +
                       " is not integral");
    out[i] = boost::multiprecision::numerator(f[i]);
  }
  return out;
}

int StandardSetup::base_of(int vertex) const {
  auto it = base.find(nerve.component(vertex));
  if (it == base.end())
    throw NotInNerve("no base vertex for the component of vertex " +
                     std::to_string(vertex));
  return it->second;
}

TwistCocycle StandardSetup::twist() const {
  Cochain<IntegerVector> F(2, IntegerVector::zero(n));
  for (const auto& t : nerve.simplices(2)) F.set(t, F_int(t[0], t[1], t[2]));
  return validate_twist(nerve, n, F);
}

StandardSetup make_setup(Nerve nerve, int n,
                         const std::map<std::pair<int, int>, RationalVector>& s,
                         std::map<int, int> base) {
  StandardSetup setup;
  setup.nerve = std::move(nerve);
  setup.n = n;
  setup.s = s;
  for (const auto& [ab, v] : s)
    if (!s.count({ab.second, ab.first}))
      setup.s[{ab.second, ab.first}] = -v;
  for (int v : setup.nerve.vertices()) {
    const int c = setup.nerve.component(v);
    if (!base.count(c)) base[c] = v;  // vertices come in increasing order
  }
  setup.base = std::move(base);
  return setup;
}

std::vector<std::string> setup_problems(const StandardSetup& setup) {
  std::vector<std::string> out;
  for (const auto& [ab, v] : setup.s) {
    const std::string pair =
        "(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")";
    if (static_cast<int>(v.size()) != setup.n)
      out.push_back("s on " + pair + " has the wrong length");
    if (ab.first == ab.second && !is_zero(v))
      out.push_back("s on " + pair + " is nonzero");
    if (ab.first != ab.second &&
        !setup.nerve.contains({std::min(ab.first, ab.second),
                               std::max(ab.first, ab.second)}))
      out.push_back("s on " + pair + ", which is not an edge");
    auto back = setup.s.find({ab.second, ab.first});
    if (back == setup.s.end() || !(back->second == -v))
      out.push_back("s is not antisymmetric on " + pair);
  }
  for (const auto& e : setup.nerve.simplices(1))
    if (!setup.s.count({e[0], e[1]}))
      out.push_back("no s value on the edge " + to_string(e));
  for (const auto& t : setup.nerve.simplices(2)) {
    try {
      setup.F_int(t[0], t[1], t[2]);
    } catch (const Error& e) {
      out.push_back(e.what());
    }
  }
  for (int v : setup.nerve.vertices()) {
    try {
      const int b = setup.base_of(v);
      if (b != v && !setup.nerve.contains({std::min(b, v), std::max(b, v)}))
        out.push_back("base vertex " + std::to_string(b) +
                      " does not share an edge with " + std::to_string(v));
    } catch (const Error& e) {
      out.push_back(e.what());
    }
  }
  return out;
}

StandardSetup random_setup(const Nerve& nerve, int n, std::mt19937_64& rng) {
  std::map<int, RationalVector> tau;
  for (int v : nerve.vertices()) {
    RationalVector t(n);
    for (int i = 0; i < n; ++i) t[i] = random_rational(rng, 20, {1, 2, 3, 4, 6});
    tau[v] = t;
  }
  std::map<std::pair<int, int>, RationalVector> s;
  for (const auto& e : nerve.simplices(1)) {
    const auto eta = to_rational(random_integer_vector(n, 3, rng));
    s[{e[0], e[1]}] = tau[e[1]] - tau[e[0]] + eta;
  }
  return make_setup(nerve, n, s);
}

FiberSample make_sample(int component, const RationalVector& xi) {
  FiberSample x;
  x.component = component;
  for (const auto& q : xi.values()) x.xi.push_back(fractional_part(q));
  return x;
}

FiberSample translate(const FiberSample& x, const RationalVector& g) {
  FiberSample y = x;
  for (std::size_t i = 0; i < y.xi.size(); ++i)
    y.xi[i] = fractional_part(x.xi[i] - g[i]);
  return y;
}

FiberSample section_sample(const StandardSetup& setup, int vertex) {
  return make_sample(setup.nerve.component(vertex),
                     -setup.s_at(setup.base_of(vertex), vertex));
}

IntegerVector WLiftData::offset(const StandardSetup& setup, int vertex,
                                const FiberSample& x) const {
  auto it = explicit_offsets.find({vertex, x});
  if (it != explicit_offsets.end()) return it->second;
  if (!seed || (normalized && x == section_sample(setup, vertex)))
    return IntegerVector::zero(setup.n);
  std::ostringstream key;
  key << vertex << '|' << show(x);
  std::uint64_t h = splitmix(*seed ^ fnv1a(key.str()));
  IntegerVector v(setup.n);
  for (int i = 0; i < setup.n; ++i) {
    h = splitmix(h);
    v[i] = static_cast<long>(h % (2 * range + 1)) - range;
  }
  return v;
}

RationalVector w_lift(const StandardSetup& setup, const WLiftData& w,
                      int vertex, const FiberSample& x) {
  RationalVector xi(x.xi);
  return rep0(xi + setup.s_at(setup.base_of(vertex), vertex)) +
         to_rational(w.offset(setup, vertex, x));
}

IntegerVector m_value(const StandardSetup& setup, const WLiftData& w, int a,
                      int b, const RationalVector& g, const FiberSample& x) {
  const RationalVector r = setup.s_at(a, b) - w_lift(setup, w, b, x) +
                           w_lift(setup, w, a, translate(x, g)) + g;
  IntegerVector out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!is_integral(r[i]))
      throw NonInteger("m value on (" + std::to_string(a) + "," +
                       std::to_string(b) + ") at g = " + show(g) + ", x = " +
                       show(x) + " is " + show(r));
    out[i] = boost::multiprecision::numerator(r[i]);
  }
  return out;
}

Circle mackey_pairing(const UpperTriValue<Circle>& f, const IntegerVector& m,
                      const IntegerVector& l) {
  return mackey_bilinear(f, m, l);
}

// ---- triples

namespace {

Rational alternating(const Cochain<Rational>& c, std::vector<int> t) {
  const int sign = sorting_sign(t);
  if (sign == 0) return 0;
  std::sort(t.begin(), t.end());
  return sign > 0 ? c.at(t) : Rational(-c.at(t));
}

const UpperTriValue<Rational>* g_for(const BrauerTriple::GTerm& term,
                                     const StandardSetup& setup, int vertex) {
  auto it = term.g.find(setup.nerve.component(vertex));
  return it == term.g.end() ? nullptr : &it->second;
}

}  // namespace

Rational BrauerTriple::phi20(int a, int b, int c) const {
  Rational sum = 0;
  for (const auto& term : g_terms_) {
    const auto* g = g_for(term, setup_, a);
    if (!g) continue;
    const auto sab = setup_.s_at(a, b), sbc = setup_.s_at(b, c),
               sac = setup_.s_at(a, c), F = setup_.F_at(a, b, c);
    sum += q_form(*g, sab, sbc) - q_form(*g, F, sac);
  }
  for (const auto& term : cob_terms_) {
    sum += alternating(term.psi10, {b, c}) - alternating(term.psi10, {a, c}) +
           alternating(term.psi10, {a, b});
    auto it = term.psi01.find(a);
    if (it != term.psi01.end()) sum += dot(it->second, setup_.F_at(a, b, c));
  }
  for (const auto& term : pullbacks_) sum += alternating(term.beta, {a, b, c});
  return sum;
}

Rational BrauerTriple::phi11(int a, int b, const IntegerVector& m) const {
  const RationalVector mq = to_rational(m);
  Rational sum = 0;
  for (const auto& term : g_terms_) {
    const auto* g = g_for(term, setup_, a);
    if (!g) continue;
    const auto sab = setup_.s_at(a, b);
    sum += q_form(*g, mq, sab) - q_form(*g, sab, mq);
  }
  for (const auto& term : cob_terms_) {
    auto ib = term.psi01.find(b), ia = term.psi01.find(a);
    if (ib != term.psi01.end()) sum += dot(ib->second, mq);
    if (ia != term.psi01.end()) sum -= dot(ia->second, mq);
  }
  return sum;
}

UpperTriValue<Rational> BrauerTriple::phi02(int a) const {
  UpperTriValue<Rational> f(n());
  for (const auto& term : g_terms_)
    if (const auto* g = g_for(term, setup_, a)) f = f + *g;
  return f;
}

UpperTriValue<Circle> BrauerTriple::phi02_circle(int a) const {
  const auto f = phi02(a);
  UpperTriValue<Circle> c(n());
  for (std::size_t p = 0; p < f.entry_count(); ++p) c.entry(p) = Circle(f.entry(p));
  return c;
}

RationalVector BrauerTriple::phi11_vector(int a, int b) const {
  RationalVector v(n());
  for (int l = 0; l < n(); ++l) v[l] = phi11(a, b, IntegerVector::unit(n(), l));
  return v;
}

BrauerTriple lift_triple_from_g(const StandardSetup& setup,
                                const std::map<int, UpperTriValue<Rational>>& g) {
  BrauerTriple t(setup);
  t.add(BrauerTriple::GTerm{g});
  return t;
}

BrauerTriple::GTerm random_g_term(const StandardSetup& setup,
                                  std::mt19937_64& rng) {
  BrauerTriple::GTerm term;
  for (int c = 0; c < setup.nerve.component_count(); ++c) {
    UpperTriValue<Rational> g(setup.n);
    for (std::size_t p = 0; p < g.entry_count(); ++p)
      g.entry(p) = random_rational(rng, 12, {1, 2, 3, 5, 7, 12});
    term.g[c] = g;
  }
  return term;
}

BrauerTriple::CoboundaryTerm random_coboundary_term(const StandardSetup& setup,
                                                    std::mt19937_64& rng) {
  BrauerTriple::CoboundaryTerm term{Cochain<Rational>(1, Rational(0)), {}};
  for (const auto& e : setup.nerve.simplices(1))
    term.psi10.set(e, random_rational(rng, 12, {1, 2, 3, 4, 5}));
  for (int v : setup.nerve.vertices()) {
    RationalVector p(setup.n);
    for (int i = 0; i < setup.n; ++i) p[i] = random_rational(rng, 12, {1, 2, 3, 4, 5});
    term.psi01[v] = p;
  }
  return term;
}

BrauerTriple::PullbackTerm random_pullback_term(const StandardSetup& setup,
                                                std::mt19937_64& rng) {
  // β = (p/d)·F_l + ∂ψ is closed mod 1
  BrauerTriple::PullbackTerm term{Cochain<Rational>(2, Rational(0))};
  Cochain<Rational> psi(1, Rational(0));
  for (const auto& e : setup.nerve.simplices(1))
    psi.set(e, random_rational(rng, 12, {1, 2, 3, 4, 6}));
  const auto dpsi = cech_differential(setup.nerve, psi);
  const Rational frac = random_rational(rng, 6, {2, 3, 4, 5, 7});
  std::uniform_int_distribution<int> pick(0, std::max(setup.n - 1, 0));
  const int l = pick(rng);
  for (const auto& t : setup.nerve.simplices(2)) {
    Rational v = dpsi.at(t);
    if (setup.n > 0) v += frac * Rational(setup.F_int(t[0], t[1], t[2])[l]);
    term.beta.set(t, v);
  }
  return term;
}

std::vector<std::vector<int>> spanning_tuples(const Nerve& nerve, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> t;
  std::function<void()> grow = [&]() {
    if (static_cast<int>(t.size()) == length) {
      out.push_back(t);
      return;
    }
    for (int v : nerve.vertices()) {
      t.push_back(v);
      Simplex d(t);
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      if (nerve.contains(d)) grow();
      t.pop_back();
    }
  };
  grow();
  return out;
}

std::vector<IdentityFailure> triple_invariant_failures(const BrauerTriple& t) {
  std::vector<IdentityFailure> out;
  const auto& setup = t.setup();
  const int n = t.n();
  for (const auto& p : spanning_tuples(setup.nerve, 2)) {
    const auto d = t.phi02(p[1]) - t.phi02(p[0]);
    for (std::size_t e = 0; e < d.entry_count(); ++e)
      if (!is_integral(d.entry(e)))
        out.push_back({"d phi02 = 0", show(p), to_string(d.entry(e))});
  }
  for (const auto& q : spanning_tuples(setup.nerve, 3)) {
    const int a = q[0], b = q[1], c = q[2];
    const auto f = t.phi02(a);
    const auto F = setup.F_at(a, b, c);
    for (int l = 0; l < n; ++l) {
      const auto e = IntegerVector::unit(n, l);
      const Rational lhs = t.phi11(b, c, e) - t.phi11(a, c, e) + t.phi11(a, b, e);
      const Rational rhs = q_form(f, to_rational(e), F) - q_form(f, F, to_rational(e));
      if (!is_integral(lhs - rhs))
        out.push_back({"d phi11(m) = Q(m,F) - Q(F,m)",
                       show(q) + " m = e" + std::to_string(l), to_string(lhs - rhs)});
    }
  }
  for (const auto& q : spanning_tuples(setup.nerve, 4)) {
    const int a = q[0], b = q[1], c = q[2], d = q[3];
    const auto f = t.phi02(a);
    const Rational lhs =
        t.phi20(b, c, d) - t.phi20(a, c, d) + t.phi20(a, b, d) - t.phi20(a, b, c);
    const Rational rhs = t.phi11(a, b, setup.F_int(b, c, d)) +
                         q_form(f, setup.F_at(a, b, c), setup.F_at(a, c, d)) -
                         q_form(f, setup.F_at(b, c, d), setup.F_at(a, b, d));
    if (!is_integral(lhs - rhs))
      out.push_back({"d phi20 = phi11(F) + Q(F,F) - Q(F,F)", show(q),
                     to_string(lhs - rhs)});
  }
  return out;
}

Circle surjectivity_cocycle(const BrauerTriple& t, const WLiftData& w, int a,
                            int b, int c, const RationalVector& S,
                            const RationalVector& T, const FiberSample& x) {
  const auto& setup = t.setup();
  const auto f = t.phi02(a);
  const auto m12 = m_value(setup, w, b, c, T, x);
  const auto m01 = m_value(setup, w, a, b, S, translate(x, T));
  const auto m02 = m_value(setup, w, a, c, S + T, x);
  const auto F = setup.F_int(a, b, c);
  const Rational v = t.phi20(a, b, c) + t.phi11(a, b, m12) -
                     q_form(f, to_rational(m12), to_rational(m01)) +
                     q_form(f, to_rational(F), to_rational(m02));
  return Circle(v);
}

RationalVector random_group_element(int n, std::mt19937_64& rng) {
  RationalVector g(n);
  for (int i = 0; i < n; ++i) g[i] = random_rational(rng, 24, {1, 2, 3, 4, 6, 12});
  return g;
}

FiberSample random_fiber_sample(int component, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 11);
  RationalVector xi(n);
  for (int i = 0; i < n; ++i) xi[i] = Rational(d(rng), 12);
  return make_sample(component, xi);
}

std::vector<ClosureSample> closure_plan(const StandardSetup& setup,
                                        std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto tuples = spanning_tuples(setup.nerve, 4);
  if (tuples.empty()) throw EmptyInput("nerve has no vertices");
  std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
  std::vector<ClosureSample> plan;
  for (std::size_t i = 0; i < count; ++i) {
    ClosureSample s;
    s.tuple = tuples[pick(rng)];
    s.r = random_group_element(setup.n, rng);
    s.s = random_group_element(setup.n, rng);
    s.t = random_group_element(setup.n, rng);
    s.x = random_fiber_sample(setup.nerve.component(s.tuple[0]), setup.n, rng);
    plan.push_back(std::move(s));
  }
  return plan;
}

ClosureReport check_tu_closure(const BrauerTriple& t, const WLiftData& w,
                               const std::vector<ClosureSample>& plan) {
  ClosureReport report;
  for (const auto& p : plan) {
    const int l0 = p.tuple[0], l1 = p.tuple[1], l2 = p.tuple[2], l3 = p.tuple[3];
    const Circle value =
        surjectivity_cocycle(t, w, l1, l2, l3, p.s, p.t, p.x) -
        surjectivity_cocycle(t, w, l0, l2, l3, p.r + p.s, p.t, p.x) +
        surjectivity_cocycle(t, w, l0, l1, l3, p.r, p.s + p.t, p.x) -
        surjectivity_cocycle(t, w, l0, l1, l2, p.r, p.s, translate(p.x, p.t));
    ++report.samples;
    if (!is_zero(value))
      report.failures.push_back(
          {"Tu closure", show(p.tuple) + " r=" + show(p.r) + " s=" + show(p.s) +
                             " t=" + show(p.t) + " x=" + show(p.x),
           to_string(value)});
  }
  return report;
}

Circle tau01(const BrauerTriple& t, int a, const IntegerVector& m) {
  const RationalVector mq = to_rational(m);
  return Circle(-t.phi20(a, a, a) - q_form(t.phi02(a), mq, mq));
}

WitnessReport tudimred_witnesses(const BrauerTriple& t, const WLiftData& w,
                                 std::size_t count, std::uint64_t seed) {
  WitnessReport report;
  const auto& setup = t.setup();
  const int n = t.n();
  std::mt19937_64 rng(seed);
  const auto triples = spanning_tuples(setup.nerve, 3);
  std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
  auto fail = [&](const char* id, const std::string& ctx, const Circle& diff) {
    if (!is_zero(diff)) report.failures.push_back({id, ctx, to_string(diff)});
  };
  for (std::size_t i = 0; i < count; ++i) {
    const auto& q = triples[pick(rng)];
    const int a = q[0], b = q[1], c = q[2];
    const auto m = random_integer_vector(n, 4, rng);
    const auto l = random_integer_vector(n, 4, rng);
    const RationalVector mq = to_rational(m), lq = to_rational(l);
    const std::string ctx = show(q) + " m=" + show(m) + " l=" + show(l);
    ++report.samples;

    const auto sa = section_sample(setup, a);
    const Circle q_ml(q_form(t.phi02(a), mq, lq));
    fail("identity 1", ctx,
         q_ml - (tau01(t, a, l) + tau01(t, a, m) - tau01(t, a, m + l) +
                 surjectivity_cocycle(t, w, a, a, a, mq, lq, sa)));

    const auto sb = section_sample(setup, b);
    const auto neg_sab = -setup.s_at(a, b);
    fail("identity 2", ctx,
         t.phi11_circle(a, b, m) -
             (tau01(t, b, m) - tau01(t, a, m) +
              surjectivity_cocycle(t, w, a, b, b, neg_sab, mq, sb) -
              surjectivity_cocycle(t, w, a, a, b, mq, neg_sab, sb)));

    const auto sc = section_sample(setup, c);
    const auto F = setup.F_int(a, b, c);
    const RationalVector negF = -to_rational(F);
    fail("identity 3", ctx,
         t.phi20_circle(a, b, c) -
             (-tau01(t, a, -F) +
              surjectivity_cocycle(t, w, a, b, c, neg_sab, -setup.s_at(b, c), sc) -
              surjectivity_cocycle(t, w, a, a, c, negF, -setup.s_at(a, c), sc)));
  }
  return report;
}

DimRedCochain<Rational> triple_cochain(const BrauerTriple& t) {
  const auto& nerve = t.setup().nerve;
  auto c = DimRedCochain<Rational>::zero(2, t.n());
  for (const auto& s : nerve.simplices(2)) c.col0.set(s, t.phi20(s[0], s[1], s[2]));
  for (const auto& s : nerve.simplices(1)) c.col1->set(s, t.phi11_vector(s[0], s[1]));
  for (const auto& s : nerve.simplices(0)) c.col2->set(s, t.phi02(s[0]));
  return c;
}

LiftBockstein bockstein_of_g_triple(
    const StandardSetup& setup, const std::map<int, UpperTriValue<Rational>>& g) {
  const TwistContext ctx(setup.nerve, setup.twist());
  const auto image = d_f(ctx, triple_cochain(lift_triple_from_g(setup, g)));
  auto integral = [](const Rational& q, const Simplex& s) {
    if (!is_integral(q))
      throw NonInteger("lift image " + to_string(q) + " on " + to_string(s) +
                       " is not integral");
    return Integer(boost::multiprecision::numerator(q));
  };
  const int n = setup.n;
  LiftBockstein out{Cochain<Integer>(3, Integer(0)),
                    Cochain<IntegerVector>(2, IntegerVector::zero(n)),
                    Cochain<UpperTriValue<Integer>>(1, UpperTriValue<Integer>::zero(n))};
  for (const auto& [s, v] : image.col0.entries()) out.d30.set(s, integral(v, s));
  for (const auto& [s, v] : image.col1->entries()) {
    IntegerVector w(n);
    for (int i = 0; i < n; ++i) w[i] = integral(v[i], s);
    out.d21.set(s, w);
  }
  for (const auto& [s, v] : image.col2->entries()) {
    UpperTriValue<Integer> w(n);
    for (std::size_t p = 0; p < v.entry_count(); ++p) w.entry(p) = integral(v.entry(p), s);
    out.d12.set(s, w);
  }
  return out;
}

MDataReport check_m_data(const StandardSetup& setup, const WLiftData& w,
                         std::size_t count, std::uint64_t seed) {
  MDataReport report;
  std::mt19937_64 rng(seed);
  const auto triples = spanning_tuples(setup.nerve, 3);
  std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
  const int n = setup.n;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& q = triples[pick(rng)];
    const int a = q[0], b = q[1], c = q[2];
    const auto S = random_group_element(n, rng);
    const auto T = random_group_element(n, rng);
    const auto x = random_fiber_sample(setup.nerve.component(a), n, rng);
    const auto k = random_integer_vector(n, 5, rng);
    const std::string ctx =
        show(q) + " s=" + show(S) + " t=" + show(T) + " x=" + show(x);
    ++report.samples;
    try {
      const auto lhs = m_value(setup, w, a, b, S, translate(x, T)) +
                       m_value(setup, w, b, c, T, x);
      const auto rhs = m_value(setup, w, a, c, S + T, x) + setup.F_int(a, b, c);
      if (!(lhs == rhs))
        report.failures.push_back({"coherence", ctx, show(lhs - rhs)});
      const auto first =
          m_value(setup, w, a, b, -setup.s_at(a, b), section_sample(setup, b));
      if (!is_zero(first))
        report.failures.push_back({"normalization at sigma", ctx, show(first)});
      const auto second =
          m_value(setup, w, a, a, to_rational(k), section_sample(setup, a));
      if (!(second == k))
        report.failures.push_back(
            {"integer translation", ctx + " k=" + show(k), show(second)});
    } catch (const NonInteger& e) {
      report.failures.push_back({"integrality", ctx, e.what()});
    }
  }
  return report;
}

}  // namespace twcech
