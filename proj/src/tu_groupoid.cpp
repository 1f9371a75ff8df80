#include "twcech/tu_groupoid.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace twcech {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects,
                               std::vector<ArrowData> arrows,
                               std::map<std::pair<int, int>, int> composition)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      composition_(std::move(composition)) {
  validate();
}

std::optional<int> FiniteGroupoid::compose(int a, int b) const {
  auto it = composition_.find({a, b});
  if (it == composition_.end()) return std::nullopt;
  return it->second;
}

void FiniteGroupoid::validate() {
  const int na = static_cast<int>(arrows_.size());
  const int no = static_cast<int>(objects_.size());
  for (const auto& a : arrows_)
    if (a.source < 0 || a.source >= no || a.target < 0 || a.target >= no)
      throw SchemaError("arrow '" + a.label + "' has an unknown endpoint");
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      const auto c = compose(a, b);
      if (c.has_value() != (target(a) == source(b)))
        throw SchemaError("composition of '" + arrows_[a].label + "' and '" +
                          arrows_[b].label + "' is defined incorrectly");
      if (c && (source(*c) != source(a) || target(*c) != target(b)))
        throw SchemaError("composite of '" + arrows_[a].label + "' and '" +
                          arrows_[b].label + "' has wrong endpoints");
    }
  // associativity on composable triples
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      const auto ab = compose(a, b);
      if (!ab) continue;
      for (int c = 0; c < na; ++c) {
        const auto bc = compose(b, c);
        if (!bc) continue;
        if (*compose(*ab, c) != *compose(a, *bc))
          throw SchemaError("composition is not associative");
      }
    }
  identity_.assign(no, -1);
  for (int e = 0; e < na; ++e) {
    const int x = source(e);
    if (target(e) != x || identity_[x] >= 0) continue;
    bool unit = true;
    for (int a = 0; a < na && unit; ++a) {
      if (target(a) == x && *compose(a, e) != a) unit = false;
      if (source(a) == x && *compose(e, a) != a) unit = false;
    }
    if (unit) identity_[x] = e;
  }
  for (int x = 0; x < no; ++x)
    if (identity_[x] < 0)
      throw SchemaError("object '" + objects_[x] + "' has no identity arrow");
  inverse_.assign(na, -1);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      const auto ab = compose(a, b);
      if (ab && *ab == identity_[source(a)] &&
          *compose(b, a) == identity_[target(a)]) {
        inverse_[a] = b;
        break;
      }
    }
  for (int a = 0; a < na; ++a)
    if (inverse_[a] < 0)
      throw SchemaError("arrow '" + arrows_[a].label + "' is not invertible");
}

namespace {

std::vector<std::vector<int>> group_elements(const std::vector<int>& moduli) {
  std::vector<std::vector<int>> out{{}};
  for (int m : moduli) {
    std::vector<std::vector<int>> next;
    for (const auto& g : out)
      for (int v = 0; v < m; ++v) {
        auto h = g;
        h.push_back(v);
        next.push_back(std::move(h));
      }
    out = std::move(next);
  }
  return out;
}

std::string element_label(const std::vector<int>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i)
    s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

}  // namespace

int TransformationGroupoid::arrow_id(const std::vector<int>& g, int x) const {
  auto it = std::find(elements.begin(), elements.end(), g);
  if (it == elements.end() || x < 0 || x >= static_cast<int>(points.size()))
    throw IndexOutOfRange("no arrow " + element_label(g) + " at point " +
                          std::to_string(x));
  return static_cast<int>(it - elements.begin()) *
             static_cast<int>(points.size()) +
         x;
}

TransformationGroupoid transformation_groupoid(
    std::vector<int> moduli, std::vector<std::string> points,
    std::vector<std::vector<int>> generator_action) {
  const int np = static_cast<int>(points.size());
  if (np == 0) throw EmptyInput("transformation groupoid needs a point");
  if (generator_action.size() != moduli.size())
    throw LengthMismatch("one permutation per cyclic factor is required");
  for (int m : moduli)
    if (m < 1) throw SchemaError("cyclic factor orders must be positive");
  for (const auto& perm : generator_action) {
    std::vector<int> sorted(perm);
    std::sort(sorted.begin(), sorted.end());
    for (int x = 0; x < np; ++x)
      if (static_cast<int>(sorted.size()) != np || sorted[x] != x)
        throw SchemaError("generator action is not a permutation of the set");
  }
  // generators must commute and have order dividing their modulus
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (int x = 0; x < np; ++x) {
      int y = x;
      for (int t = 0; t < moduli[i]; ++t) y = generator_action[i][y];
      if (y != x) throw SchemaError("generator order does not divide modulus");
      for (std::size_t j = 0; j < moduli.size(); ++j)
        if (generator_action[i][generator_action[j][x]] !=
            generator_action[j][generator_action[i][x]])
          throw SchemaError("generator actions do not commute");
    }
  }
  const auto elements = group_elements(moduli);
  const int ng = static_cast<int>(elements.size());
  std::vector<std::vector<int>> act(ng, std::vector<int>(np));
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < np; ++x) {
      int y = x;
      for (std::size_t i = 0; i < moduli.size(); ++i)
        for (int t = 0; t < elements[g][i]; ++t) y = generator_action[i][y];
      act[g][x] = y;
    }
  auto index_of = [&](const std::vector<int>& g) {
    return static_cast<int>(std::find(elements.begin(), elements.end(), g) -
                            elements.begin());
  };
  auto negate = [&](const std::vector<int>& g) {
    std::vector<int> h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      h[i] = (moduli[i] - g[i]) % moduli[i];
    return h;
  };
  std::vector<FiniteGroupoid::ArrowData> arrows;
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < np; ++x)
      arrows.push_back({act[index_of(negate(elements[g]))][x], x,
                        element_label(elements[g]) + "," + points[x]});
  // (g, y) then (h, x) is defined when y = (−h)·x and equals (g + h, x)
  std::map<std::pair<int, int>, int> composition;
  for (int g = 0; g < ng; ++g)
    for (int y = 0; y < np; ++y)
      for (int h = 0; h < ng; ++h)
        for (int x = 0; x < np; ++x) {
          if (act[index_of(negate(elements[h]))][x] != y) continue;
          std::vector<int> sum(moduli.size());
          for (std::size_t i = 0; i < moduli.size(); ++i)
            sum[i] = (elements[g][i] + elements[h][i]) % moduli[i];
          composition[{g * np + y, h * np + x}] = index_of(sum) * np + x;
        }
  FiniteGroupoid G(points, std::move(arrows), std::move(composition));
  return TransformationGroupoid{std::move(moduli), std::move(points),
                                std::move(generator_action), elements,
                                std::move(act), std::move(G)};
}

std::vector<ComposableTuple> composable_tuples(const FiniteGroupoid& G, int n) {
  std::vector<ComposableTuple> out;
  if (n < 0) return out;
  if (n == 0) {
    for (std::size_t x = 0; x < G.object_count(); ++x)
      out.push_back({{}, static_cast<int>(x)});
    return out;
  }
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& t) {
    if (static_cast<int>(t.size()) == n) {
      out.push_back({t, -1});
      return;
    }
    for (std::size_t a = 0; a < G.arrow_count(); ++a) {
      if (!t.empty() && G.source(a) != G.target(t.back())) continue;
      t.push_back(static_cast<int>(a));
      grow(t);
      t.pop_back();
    }
  };
  std::vector<int> t;
  grow(t);
  return out;
}

ComposableTuple face_map(const FiniteGroupoid& G, int i,
                         const ComposableTuple& t) {
  const int n = static_cast<int>(t.length());
  if (n == 0 || i < 0 || i > n)
    throw IndexOutOfRange("face " + std::to_string(i) + " of a tuple of length " +
                          std::to_string(n));
  if (n == 1)
    return {{}, i == 0 ? G.target(t.arrows[0]) : G.source(t.arrows[0])};
  ComposableTuple f;
  if (i == 0) {
    f.arrows.assign(t.arrows.begin() + 1, t.arrows.end());
  } else if (i == n) {
    f.arrows.assign(t.arrows.begin(), t.arrows.end() - 1);
  } else {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (j == i - 1)
        f.arrows.push_back(*G.compose(t.arrows[i - 1], t.arrows[i]));
      else
        f.arrows.push_back(t.arrows[j]);
    }
  }
  return f;
}

int PresimplicialIndex::at(int l, int p) const {
  if (!(0 <= l && l < p && p <= n))
    throw IndexOutOfRange("edge index (" + std::to_string(l) + "," +
                          std::to_string(p) + ") in an index of length " +
                          std::to_string(n));
  return edge.at(upper_index(l, p, n + 1));
}

PresimplicialIndex index_face(const std::vector<int>& g,
                              const PresimplicialIndex& lambda) {
  const int k = static_cast<int>(g.size()) - 1;
  for (int j = 0; j <= k; ++j)
    if (g[j] < 0 || g[j] > lambda.n || (j > 0 && g[j] <= g[j - 1]))
      throw IndexOutOfRange("face map is not strictly increasing into [n]");
  PresimplicialIndex out;
  out.n = k;
  for (int l = 0; l <= k; ++l) out.vertex.push_back(lambda.at(g[l]));
  for (int l = 0; l <= k; ++l)
    for (int p = l + 1; p <= k; ++p) out.edge.push_back(lambda.at(g[l], g[p]));
  return out;
}

PresimplicialIndex index_face(int i, const PresimplicialIndex& lambda) {
  if (i < 0 || i > lambda.n)
    throw IndexOutOfRange("face " + std::to_string(i) + " of an index of length " +
                          std::to_string(lambda.n));
  std::vector<int> g;
  for (int j = 0; j <= lambda.n; ++j)
    if (j != i) g.push_back(j);
  return index_face(g, lambda);
}

GroupoidCover GroupoidCover::trivial(const FiniteGroupoid& G) {
  GroupoidCover c;
  c.objects.emplace_back();
  for (std::size_t x = 0; x < G.object_count(); ++x)
    c.objects[0].push_back(static_cast<int>(x));
  c.arrows.emplace_back();
  for (std::size_t a = 0; a < G.arrow_count(); ++a)
    c.arrows[0].push_back(static_cast<int>(a));
  return c;
}

bool GroupoidCover::object_in(int set, int x) const {
  const auto& s = objects.at(set);
  return std::find(s.begin(), s.end(), x) != s.end();
}

bool GroupoidCover::arrow_in(int set, int a) const {
  const auto& s = arrows.at(set);
  return std::find(s.begin(), s.end(), a) != s.end();
}

namespace {

/// γ_a ... γ_{b−1} composed.
int product(const FiniteGroupoid& G, const ComposableTuple& t, int a, int b) {
  int p = t.arrows[a];
  for (int j = a + 1; j < b; ++j) p = *G.compose(p, t.arrows[j]);
  return p;
}

/// Allowed cover indices for every slot of λ, given the tuple.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
slot_choices(const FiniteGroupoid& G, const GroupoidCover& cover,
             const ComposableTuple& t) {
  const int n = static_cast<int>(t.length());
  std::vector<std::vector<int>> vertex(n + 1), edge;
  auto objects_with = [&](int x) {
    std::vector<int> sets;
    for (std::size_t i = 0; i < cover.objects.size(); ++i)
      if (cover.object_in(static_cast<int>(i), x)) sets.push_back(static_cast<int>(i));
    return sets;
  };
  if (n == 0) {
    vertex[0] = objects_with(t.object);
    return {vertex, edge};
  }
  vertex[0] = objects_with(G.source(t.arrows[0]));
  for (int j = 1; j <= n; ++j) vertex[j] = objects_with(G.target(t.arrows[j - 1]));
  for (int l = 0; l <= n; ++l)
    for (int p = l + 1; p <= n; ++p) {
      const int a = product(G, t, l, p);
      std::vector<int> sets;
      for (std::size_t i = 0; i < cover.arrows.size(); ++i)
        if (cover.arrow_in(static_cast<int>(i), a)) sets.push_back(static_cast<int>(i));
      edge.push_back(std::move(sets));
    }
  return {vertex, edge};
}

}  // namespace

bool cell_membership(const FiniteGroupoid& G, const GroupoidCover& cover,
                     const PresimplicialIndex& lambda,
                     const ComposableTuple& t) {
  const int n = static_cast<int>(t.length());
  if (lambda.n != n)
    throw LengthMismatch("index of length " + std::to_string(lambda.n) +
                         " with a tuple of length " + std::to_string(n));
  if (n == 0) return cover.object_in(lambda.at(0), t.object);
  if (!cover.object_in(lambda.at(0), G.source(t.arrows[0]))) return false;
  for (int k = 0; k < n; ++k)
    if (!cover.object_in(lambda.at(k + 1), G.target(t.arrows[k]))) return false;
  for (int k = 0; k < n; ++k)
    for (int l = k; l < n; ++l)
      if (!cover.arrow_in(lambda.at(k, l + 1), product(G, t, k, l + 1)))
        return false;
  return true;
}

std::vector<TuCell> tu_cells(const FiniteGroupoid& G, const GroupoidCover& cover,
                             int n, std::size_t budget) {
  std::vector<TuCell> cells;
  std::size_t work = 0;
  for (const auto& t : composable_tuples(G, n)) {
    const auto [vertex, edge] = slot_choices(G, cover, t);
    std::vector<const std::vector<int>*> slots;
    for (const auto& v : vertex) slots.push_back(&v);
    for (const auto& e : edge) slots.push_back(&e);
    std::vector<int> pick(slots.size());
    std::function<void(std::size_t)> choose = [&](std::size_t s) {
      if (s == slots.size()) {
        if (++work > budget)
          throw TooLarge("more than " + std::to_string(budget) +
                         " Tu cells in degree " + std::to_string(n));
        PresimplicialIndex lambda;
        lambda.n = n;
        lambda.vertex.assign(pick.begin(), pick.begin() + vertex.size());
        lambda.edge.assign(pick.begin() + vertex.size(), pick.end());
        cells.push_back({std::move(lambda), t});
        return;
      }
      for (int c : *slots[s]) {
        pick[s] = c;
        choose(s + 1);
      }
    };
    choose(0);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

const Circle& TuCochain::at(const TuCell& c) const {
  auto it = values.find(c);
  if (it == values.end())
    throw CellUndefined("cochain of degree " + std::to_string(degree) +
                        " has no value on the requested cell");
  return it->second;
}

TuCochain tu_differential(const FiniteGroupoid& G, const GroupoidCover& cover,
                          const TuCochain& phi) {
  TuCochain out;
  out.degree = phi.degree + 1;
  for (const auto& cell : tu_cells(G, cover, out.degree)) {
    Circle sum;
    for (int i = 0; i <= out.degree; ++i) {
      const TuCell f{index_face(i, cell.index), face_map(G, i, cell.tuple)};
      sum = (i % 2 == 0) ? sum + phi.at(f) : sum - phi.at(f);
    }
    out.values.emplace(cell, sum);
  }
  return out;
}

TuComplex tu_complex(const FiniteGroupoid& G, const GroupoidCover& cover,
                     int top, std::size_t budget) {
  TuComplex cx;
  for (int n = 0; n <= top; ++n) {
    cx.cells.push_back(tu_cells(G, cover, n, budget));
    cx.chain.dims.push_back(cx.cells.back().size());
  }
  for (int n = 0; n < top; ++n) {
    std::map<TuCell, std::size_t> col;
    for (std::size_t c = 0; c < cx.cells[n].size(); ++c) col[cx.cells[n][c]] = c;
    IntegerMatrix d(cx.cells[n + 1].size(), cx.cells[n].size());
    for (std::size_t r = 0; r < cx.cells[n + 1].size(); ++r) {
      const auto& cell = cx.cells[n + 1][r];
      for (int i = 0; i <= n + 1; ++i) {
        const TuCell f{index_face(i, cell.index), face_map(G, i, cell.tuple)};
        auto it = col.find(f);
        if (it == col.end())
          throw CellUndefined("face " + std::to_string(i) +
                              " of a degree " + std::to_string(n + 1) +
                              " cell is not a cell");
        d.add(r, it->second, Integer(i % 2 == 0 ? 1 : -1));
      }
    }
    cx.chain.d.push_back(std::move(d));
  }
  return cx;
}

namespace {

void check_degree(int k) {
  if (k < 0 || k > 2)
    throw DegreeOutOfRange("brute-force Tu cohomology covers degrees 0..2");
}

}  // namespace

CohomologyGroup brute_cohomology(const FiniteGroupoid& G,
                                 const GroupoidCover& cover, int k,
                                 const Integer& N, std::size_t budget) {
  check_degree(k);
  const auto cx = tu_complex(G, cover, k + 1, budget);
  const auto q = circle_n_torsion(cx.chain, k, N);
  return CohomologyGroup{q.rank, q.torsion, ScalarKind::QZ};
}

CohomologyGroup finite_coefficient_cohomology(const FiniteGroupoid& G,
                                              const GroupoidCover& cover, int k,
                                              const Integer& N,
                                              std::size_t budget) {
  check_degree(k);
  const auto cx = tu_complex(G, cover, k + 1, budget);
  const auto q = mod_n_cohomology(cx.chain, k, N);
  return CohomologyGroup{q.rank, q.torsion, ScalarKind::Z};
}

std::vector<TuCochain> enumerate_onecocycles(const FiniteGroupoid& G,
                                             const GroupoidCover& cover,
                                             const Integer& N,
                                             std::size_t limit) {
  const auto cx = tu_complex(G, cover, 2);
  const std::size_t m = cx.chain.dims[1];
  const DenseMatrix d = cx.chain.d[1].to_dense();
  const Lattice z = preimage(d, identity_matrix(d.rows()) * N);
  const auto gens = quotient_generators(z, identity_matrix(m) * N);
  Integer total = 1;
  for (const auto& g : gens) total *= g.order;
  if (total > limit)
    throw TooLarge(total.str() + " one-cocycles exceed the enumeration limit");
  std::vector<TuCochain> out;
  std::vector<Integer> coeff(gens.size(), Integer(0));
  for (;;) {
    DenseVector x = DenseVector::Zero(m);
    for (std::size_t i = 0; i < gens.size(); ++i) x += gens[i].vector * coeff[i];
    TuCochain phi;
    phi.degree = 1;
    for (std::size_t c = 0; c < m; ++c)
      phi.values.emplace(cx.cells[1][c], circle_reduce(Rational(x(c), N)));
    out.push_back(std::move(phi));
    std::size_t i = 0;
    while (i < gens.size() && ++coeff[i] == gens[i].order) coeff[i++] = 0;
    if (i == gens.size()) break;
  }
  return out;
}

bool onecocycle_independent(const TuCochain& phi) {
  // group by (λ0, λ1, γ) and compare across λ01
  std::map<std::tuple<int, int, ComposableTuple>, Circle> seen;
  for (const auto& [cell, v] : phi.values) {
    if (cell.index.n != 1) throw DegreeMismatch("expected a 1-cochain");
    const auto key =
        std::make_tuple(cell.index.at(0), cell.index.at(1), cell.tuple);
    auto [it, fresh] = seen.emplace(key, v);
    if (!fresh && !(it->second == v)) return false;
  }
  return true;
}

bool check_onecocycle_independence(const FiniteGroupoid& G,
                                   const GroupoidCover& cover,
                                   const TuCochain& phi) {
  if (phi.degree != 1) throw DegreeMismatch("expected a 1-cochain");
  const auto d = tu_differential(G, cover, phi);
  for (const auto& entry : d.values)
    if (!is_zero(entry.second))
      throw NotACocycle("Tu differential of the 1-cochain is nonzero");
  return onecocycle_independent(phi);
}

}  // namespace twcech
