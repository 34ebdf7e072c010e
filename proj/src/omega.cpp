#include "biased/omega.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "biased/enumerate.hpp"
#include "biased/parallel.hpp"

namespace biased {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::size_t OmegaGraph::index_of(const Circuit& c) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
  if (it == vertices.end() || *it != c) throw std::invalid_argument("not a vertex of Omega");
  return static_cast<std::size_t>(it - vertices.begin());
}

bool omega_adjacent(int n, const Circuit& c1, const Circuit& c2) {
  if (c1.size() >= static_cast<std::size_t>(n) || c2.size() >= static_cast<std::size_t>(n))
    throw std::invalid_argument("omega_adjacent: spanning circuit");
  if (c1.max_vertex() > n || c2.max_vertex() > n) throw std::invalid_argument("omega_adjacent: circuit not in K_n");
  if (c1 == c2) throw std::invalid_argument("omega_adjacent: identical circuits");
  bool found = false;
  for_each_theta_containing(HostGraph::complete(n), c1, [&](const ThetaSubgraph& t) {
    if (found || !t.contains(c2)) return;
    for (const Circuit& c : t.circuits)
      if (c != c1 && c != c2 && is_four_pattern(c)) found = true;
  });
  return found;
}

OmegaGraph build_omega(int n, const OmegaOptions& options) {
  if (n < 5) throw std::invalid_argument("build_omega needs n >= 5");
  if (n > 8 && !options.allow_large) throw std::invalid_argument("build_omega for n > 8 needs an explicit override");

  OmegaGraph omega;
  omega.n = n;
  omega.vertices = enumerate_circuits(n, SpanningFilter::NonspanningOnly);
  std::unordered_map<Circuit, std::uint32_t, CircuitHash> index;
  index.reserve(omega.vertices.size());
  for (std::uint32_t i = 0; i < omega.vertices.size(); ++i) index.emplace(omega.vertices[i], i);

  std::vector<Circuit> patterns;
  for (const Circuit& c : omega.vertices)
    if (is_four_pattern(c)) patterns.push_back(c);

  const HostGraph host = HostGraph::complete(n);
  using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  auto parts = parallel_map<EdgeList>(patterns.size(), options.jobs, [&](std::size_t p) {
    EdgeList local;
    for_each_theta_containing(host, patterns[p], [&](const ThetaSubgraph& t) {
      std::array<std::uint32_t, 2> ends{};
      std::size_t m = 0;
      for (const Circuit& c : t.circuits) {
        if (c == patterns[p]) continue;
        auto it = index.find(c);
        if (it == index.end()) return;  // spanning
        ends[m++] = it->second;
      }
      local.emplace_back(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
    });
    return local;
  });
  for (auto& part : parts) omega.edges.insert(omega.edges.end(), part.begin(), part.end());
  std::sort(omega.edges.begin(), omega.edges.end());
  omega.edges.erase(std::unique(omega.edges.begin(), omega.edges.end()), omega.edges.end());

  DisjointSets sets(omega.vertices.size());
  for (auto [a, b] : omega.edges) sets.unite(a, b);
  std::unordered_map<std::uint32_t, std::uint32_t> ids;
  omega.component.resize(omega.vertices.size());
  for (std::uint32_t i = 0; i < omega.vertices.size(); ++i) {
    auto [it, inserted] = ids.emplace(sets.find(i), static_cast<std::uint32_t>(ids.size()));
    omega.component[i] = it->second;
  }
  omega.component_count = ids.size();
  return omega;
}

bool components_match_delta(const OmegaGraph& omega) {
  std::map<int, std::uint32_t> component_of_delta;
  std::map<std::uint32_t, int> delta_of_component;
  for (std::size_t i = 0; i < omega.vertices.size(); ++i) {
    const int d = delta(omega.vertices[i]);
    const std::uint32_t comp = omega.component[i];
    auto [a, fresh_delta] = component_of_delta.emplace(d, comp);
    if (!fresh_delta && a->second != comp) return false;
    auto [b, fresh_comp] = delta_of_component.emplace(comp, d);
    if (!fresh_comp && b->second != d) return false;
  }
  return true;
}

bool verify_omega_components(int n, const OmegaOptions& options) {
  return components_match_delta(build_omega(n, options));
}

}  // namespace biased
