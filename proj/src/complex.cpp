#include "twcech/complex.hpp"

#include <functional>
#include <map>
#include <tuple>

namespace twcech {

std::string to_string(ScalarKind s) {
  switch (s) {
    case ScalarKind::Z: return "Z";
    case ScalarKind::Q: return "Q";
    case ScalarKind::QZ: return "QZ";
  }
  return "?";
}

ScalarKind parse_scalar(const std::string& text) {
  if (text == "Z") return ScalarKind::Z;
  if (text == "Q") return ScalarKind::Q;
  if (text == "QZ") return ScalarKind::QZ;
  throw SchemaError("unknown coefficient group '" + text + "'");
}

TwistContext::TwistContext(Nerve nerve_, TwistCocycle twist_)
    : nerve(std::move(nerve_)),
      twist(std::move(twist_)),
      steenrod(steenrod_cochain(nerve, twist)) {}

std::vector<BasisElement> cochain_basis(const Nerve& nerve, int n, int k,
                                        int columns) {
  std::vector<BasisElement> basis;
  for (const auto& s : nerve.simplices(k)) basis.push_back({0, s, 0});
  if (k >= 1)
    for (const auto& s : nerve.simplices(k - 1))
      for (int l = 0; l < n; ++l) basis.push_back({1, s, l});
  if (k >= 2 && columns >= 3) {
    const int pairs = static_cast<int>(upper_rank(n));
    for (const auto& s : nerve.simplices(k - 2))
      for (int p = 0; p < pairs; ++p) basis.push_back({2, s, p});
  }
  return basis;
}

IntegerMatrix CochainComplex::differential(int k) const {
  if (k < 0) return IntegerMatrix(dims.empty() ? 0 : dims[0], 0);
  if (k >= static_cast<int>(d.size()))
    throw DegreeOutOfRange("differential d_" + std::to_string(k) +
                           " not assembled (top degree " +
                           std::to_string(top_degree()) + ")");
  return d[k];
}

std::size_t CochainComplex::dim(int k) const {
  if (k < 0) return 0;
  if (k >= static_cast<int>(dims.size()))
    throw DegreeOutOfRange("degree " + std::to_string(k) + " not assembled");
  return dims[k];
}

namespace {

/// Simplices of the nerve that start with s and have `extra` more vertices.
std::vector<Simplex> extensions(const Nerve& nerve, const Simplex& s,
                                int extra) {
  std::vector<Simplex> out;
  std::function<void(Simplex&, int)> grow = [&](Simplex& t, int left) {
    if (left == 0) {
      out.push_back(t);
      return;
    }
    for (int v : nerve.vertices()) {
      if (!t.empty() && v <= t.back()) continue;
      t.push_back(v);
      if (nerve.contains(t)) grow(t, left - 1);
      t.pop_back();
    }
  };
  Simplex t = s;
  grow(t, extra);
  return out;
}

/// (k+1)-simplices having s as a face, with the sign (−1)^i of that face.
std::vector<std::pair<Simplex, int>> cofaces(const Nerve& nerve,
                                             const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  for (int v : nerve.vertices()) {
    Simplex t;
    std::size_t pos = 0;
    bool present = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == v) present = true;
      if (s[i] < v) pos = i + 1;
    }
    if (present) continue;
    t = s;
    t.insert(t.begin() + pos, v);
    if (nerve.contains(t)) out.emplace_back(std::move(t), pos % 2 == 0 ? 1 : -1);
  }
  return out;
}

DimRedComplex assemble(const Nerve& nerve, const TwistCocycle& twist,
                       ScalarKind scalar, int kmax, int columns) {
  if (kmax < 0) throw DegreeOutOfRange("kmax must be non-negative");
  DimRedComplex cx{TwistContext(nerve, twist), scalar, columns, {}, {}};
  const int n = twist.n;
  for (int k = 0; k <= kmax; ++k) {
    cx.bases.push_back(cochain_basis(nerve, n, k, columns));
    cx.chain.dims.push_back(cx.bases.back().size());
  }
  const auto& C = cx.context.steenrod;
  for (int k = 0; k < kmax; ++k) {
    const auto& src = cx.bases[k];
    const auto& dst = cx.bases[k + 1];
    std::map<std::tuple<int, Simplex, int>, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r)
      row_of[{dst[r].column, dst[r].simplex, dst[r].component}] = r;
    auto row = [&](int col, const Simplex& t, int comp) {
      return row_of.at({col, t, comp});
    };
    const Integer odd = (k % 2 == 0) ? Integer(-1) : Integer(1);
    IntegerMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& b = src[c];
      for (const auto& [t, sign] : cofaces(nerve, b.simplex))
        m.add(row(b.column, t, b.component), c, Integer(sign));
      if (b.column == 1) {
        // (−1)^{k+1} φ ∪₁ F into column 0
        for (const auto& t : extensions(nerve, b.simplex, 2)) {
          const Integer f = twist.at(back(t, 3))[b.component];
          if (f != 0) m.add(row(0, t, 0), c, odd * f);
        }
      } else if (b.column == 2) {
        std::size_t i = 0, j = 0;
        for (std::size_t p = 0, q = 0; q < static_cast<std::size_t>(n); ++q)
          for (std::size_t r = q + 1; r < static_cast<std::size_t>(n); ++r, ++p)
            if (p == static_cast<std::size_t>(b.component)) i = q, j = r;
        // (−1)^k φ ∪₁ F into column 1
        for (const auto& t : extensions(nerve, b.simplex, 2)) {
          const auto& f = twist.at(back(t, 3));
          if (f[i] != 0) m.add(row(1, t, j), c, -odd * f[i]);
          if (f[j] != 0) m.add(row(1, t, i), c, odd * f[j]);
        }
        // (−1)^{k+1} φ ∪₂ C(F) into column 0
        for (const auto& t : extensions(nerve, b.simplex, 3)) {
          const Integer v = C.at(back(t, 4)).entry(b.component);
          if (v != 0) m.add(row(0, t, 0), c, odd * v);
        }
      }
    }
    cx.chain.d.push_back(std::move(m));
  }
  return cx;
}

}  // namespace

DimRedComplex assemble_complex(const Nerve& nerve, const TwistCocycle& twist,
                               ScalarKind scalar, int kmax) {
  return assemble(nerve, twist, scalar, kmax, 3);
}

DimRedComplex assemble_two_column(const Nerve& nerve, const TwistCocycle& twist,
                                  ScalarKind scalar, int kmax) {
  return assemble(nerve, twist, scalar, kmax, 2);
}

CochainComplex cech_complex(const Nerve& nerve, int kmax) {
  const TwistCocycle none{0, Cochain<IntegerVector>(2, IntegerVector::zero(0))};
  return assemble(nerve, none, ScalarKind::Z, kmax, 3).chain;
}

}  // namespace twcech
