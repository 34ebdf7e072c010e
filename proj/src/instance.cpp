#include "biased/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "biased/parallel.hpp"

namespace biased {

namespace {

void check_circuit_of(int n, const Circuit& c) {
  if (c.empty() || c.max_vertex() > n)
    throw std::invalid_argument("circuit (" + c.to_string() + ") is not a circuit of K_" + std::to_string(n));
}

struct PartialReport {
  std::vector<ThetaSubgraph> violations;
  std::uint64_t violation_count = 0;
  std::uint64_t checked = 0;
};

ValidationReport merge(std::vector<PartialReport>& parts, std::size_t max_violations) {
  ValidationReport report;
  for (auto& p : parts) {
    report.checked_count += p.checked;
    report.violation_count += p.violation_count;
    for (auto& t : p.violations) {
      if (report.violations.size() >= max_violations) break;
      report.violations.push_back(std::move(t));
    }
  }
  report.valid = report.violation_count == 0;
  return report;
}

using BalancedFn = std::function<bool(const Circuit&)>;

ValidationReport validate_full(const HostGraph& host, const BalancedFn& is_balanced, const ValidateOptions& opt) {
  const int n = host.order();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 1; x <= n; ++x)
    for (Vertex y = x + 1; y <= n; ++y) pairs.emplace_back(x, y);

  auto parts = parallel_map<PartialReport>(pairs.size(), opt.jobs, [&](std::size_t t) {
    PartialReport part;
    const BranchPaths bp(host, pairs[t].first, pairs[t].second);
    const std::size_t P = bp.size();
    // Balanced status of the circuit formed by each path pair, filled lazily.
    std::vector<std::int8_t> status(P * P, -1);
    auto bal = [&](std::size_t i, std::size_t j) -> int {
      auto& s = status[i * P + j];
      if (s < 0) s = is_balanced(bp.circuit(i, j)) ? 1 : 0;
      return s;
    };
    bp.for_each_triple([&](std::size_t i, std::size_t j, std::size_t k) {
      ++part.checked;
      if (bal(i, j) + bal(i, k) + bal(j, k) == 2) {
        ++part.violation_count;
        if (part.violations.size() < opt.max_violations) part.violations.push_back(bp.theta(i, j, k));
      }
    });
    return part;
  });
  return merge(parts, opt.max_violations);
}

ValidationReport validate_restricted(const HostGraph& host, const BalancedFn& is_balanced,
                                     std::vector<Circuit> circuits, const ValidateOptions& opt) {
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  std::unordered_map<Circuit, std::size_t, CircuitHash> rank;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t s = 0; s < circuits[i].size(); ++s)
      if (circuits[i][s] > host.order() ||
          !host.adjacent(circuits[i][s], circuits[i][(s + 1) % circuits[i].size()]))
        throw std::invalid_argument("circuit (" + circuits[i].to_string() + ") is not in the host graph");
    rank.emplace(circuits[i], i);
  }
  auto parts = parallel_map<PartialReport>(circuits.size(), opt.jobs, [&](std::size_t idx) {
    PartialReport part;
    for_each_theta_containing(host, circuits[idx], [&](const ThetaSubgraph& t) {
      // A theta holding several listed circuits is checked from the first.
      for (const Circuit& c : t.circuits)
        if (auto it = rank.find(c); it != rank.end() && it->second < idx) return;
      ++part.checked;
      int balanced = 0;
      for (const Circuit& c : t.circuits) balanced += is_balanced(c);
      if (balanced == 2) {
        ++part.violation_count;
        if (part.violations.size() < opt.max_violations) part.violations.push_back(t);
      }
    });
    return part;
  });
  return merge(parts, opt.max_violations);
}

}  // namespace

BiasedInstance::BiasedInstance(int n, CircuitSet balanced) : n_(n), balanced_(std::move(balanced)) {
  if (n < 0 || n > kMaxVertex) throw std::invalid_argument("instance order out of range");
  for (const Circuit& c : balanced_) check_circuit_of(n, c);
}

BiasedInstance::BiasedInstance(int n, std::span<const Circuit> balanced)
    : BiasedInstance(n, CircuitSet(balanced.begin(), balanced.end())) {}

std::vector<Circuit> BiasedInstance::sorted_balanced() const {
  std::vector<Circuit> out(balanced_.begin(), balanced_.end());
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate_host(const HostGraph& host, const BalancedFn& balanced, const ValidationMode& mode,
                               const ValidateOptions& options) {
  if (mode.restricted_to) return validate_restricted(host, balanced, *mode.restricted_to, options);
  return validate_full(host, balanced, options);
}

ValidationReport validate(const BiasedInstance& inst, const ValidationMode& mode, const ValidateOptions& options) {
  if (inst.n() < 3) throw std::invalid_argument("validate needs n >= 3");
  if (!mode.restricted_to && inst.n() >= 9 && !options.allow_large_full)
    throw std::invalid_argument("full validation for n >= 9 needs an explicit override");
  return validate_host(HostGraph::complete(inst.n()), [&](const Circuit& c) { return inst.is_balanced(c); }, mode,
                       options);
}

BiasedInstance restrict(const BiasedInstance& inst, std::span<const Vertex> X) {
  if (X.size() < 3) throw std::invalid_argument("restrict needs at least 3 vertices");
  std::vector<Vertex> sorted(X.begin(), X.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("restrict: repeated vertex");
  if (sorted.front() < 1 || sorted.back() > inst.n()) throw std::invalid_argument("restrict: vertex outside {1..n}");

  std::vector<Vertex> rename(static_cast<std::size_t>(inst.n()) + 1, 0);
  VertexMask keep = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    rename[static_cast<std::size_t>(sorted[i])] = static_cast<Vertex>(i + 1);
    keep |= vertex_bit(sorted[i]);
  }
  CircuitSet out;
  std::vector<Vertex> seq;
  for (const Circuit& c : inst.balanced()) {
    if ((c.vertex_mask() & ~keep) != 0) continue;
    seq.clear();
    for (std::size_t i = 0; i < c.size(); ++i) seq.push_back(rename[static_cast<std::size_t>(c[i])]);
    out.insert(Circuit::from_cycle(seq));
  }
  return BiasedInstance(static_cast<int>(sorted.size()), std::move(out));
}

bool is_consistent(const BiasedInstance& inst, std::span<const Circuit> circuits) {
  std::size_t balanced = 0;
  for (const Circuit& c : circuits) balanced += inst.is_balanced(c);
  return balanced == 0 || balanced == circuits.size();
}

namespace {

template <class Pred>
BiasedInstance family(int n, Pred pred) {
  if (n < 1) throw std::invalid_argument("family constructors need n >= 1");
  CircuitSet balanced;
  if (n >= 3)
    for_each_circuit(n, SpanningFilter::All, [&](const Circuit& c) {
      if (pred(c)) balanced.insert(c);
    });
  return BiasedInstance(n, std::move(balanced));
}

}  // namespace

BiasedInstance make_ku(int n) {
  return family(n, [](const Circuit&) { return false; });
}

BiasedInstance make_ko(int n) {
  return family(n, [](const Circuit& c) { return is_oscillating(c); });
}

BiasedInstance make_ka(int a, int n) {
  if (a < 0) throw std::invalid_argument("make_ka needs a >= 0");
  return family(n, [a](const Circuit& c) { return divides(a, delta(c)); });
}

}  // namespace biased
