#include "twcech/nerve.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace twcech {

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ')';
  return os.str();
}

Simplex face(const Simplex& s, std::size_t i) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) f.push_back(s[j]);
  return f;
}

Nerve Nerve::from_facets(const std::vector<std::vector<int>>& facets) {
  if (facets.empty()) throw EmptyInput("nerve needs at least one facet");
  Nerve nerve;
  std::set<Simplex> all;
  for (const auto& raw : facets) {
    if (raw.empty()) throw EmptyInput("empty facet");
    std::set<int> uniq(raw.begin(), raw.end());
    for (int v : uniq)
      if (v < 0) throw SchemaError("negative vertex id " + std::to_string(v));
    Simplex f(uniq.begin(), uniq.end());
    nerve.facets_.push_back(f);
    // every nonempty subset of the facet
    const std::size_t m = f.size();
    if (m > 20) throw TooLarge("facet with more than 20 vertices");
    for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
      Simplex sub;
      for (std::size_t j = 0; j < m; ++j)
        if (mask & (1ul << j)) sub.push_back(f[j]);
      all.insert(std::move(sub));
    }
  }
  for (const auto& s : all) {
    const std::size_t k = s.size() - 1;
    if (nerve.by_dim_.size() <= k) nerve.by_dim_.resize(k + 1);
    nerve.by_dim_[k].push_back(s);
  }
  nerve.index_.resize(nerve.by_dim_.size());
  for (std::size_t k = 0; k < nerve.by_dim_.size(); ++k)
    for (std::size_t i = 0; i < nerve.by_dim_[k].size(); ++i)
      nerve.index_[k].emplace(nerve.by_dim_[k][i], i);
  for (const auto& v : nerve.by_dim_[0]) nerve.vertices_.push_back(v[0]);

  // union-find over the 1-skeleton
  std::map<int, int> parent;
  for (int v : nerve.vertices_) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : nerve.simplices(1)) {
    const int a = find(e[0]), b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, int> label;
  for (int v : nerve.vertices_) {
    const int root = find(v);
    auto it = label.find(root);
    if (it == label.end())
      it = label.emplace(root, nerve.component_count_++).first;
    nerve.component_[v] = it->second;
  }
  return nerve;
}

const std::vector<Simplex>& Nerve::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[k];
}

bool Nerve::contains(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return false;
  return index_[s.size() - 1].count(s) > 0;
}

std::size_t Nerve::index_of(const Simplex& s) const {
  if (!s.empty() && s.size() <= index_.size()) {
    auto it = index_[s.size() - 1].find(s);
    if (it != index_[s.size() - 1].end()) return it->second;
  }
  throw NotInNerve(to_string(s) + " is not a simplex of the nerve");
}

int Nerve::component(int vertex) const {
  auto it = component_.find(vertex);
  if (it == component_.end())
    throw NotInNerve("vertex " + std::to_string(vertex) + " is not in the nerve");
  return it->second;
}

std::vector<Simplex> enumerate_simplices(const Nerve& nerve, int k) {
  return nerve.simplices(k);
}

int sorting_sign(const std::vector<int>& t) {
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) sign = -sign;
    }
  return sign;
}

}  // namespace twcech
