#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "biased/circuit.hpp"

namespace biased {

/// Graph on the nonspanning circuits of K_n; two circuits are adjacent when
/// some Theta-subgraph holds both of them and, as its third circuit, a 1243-
/// or 1324-circuit.
struct OmegaGraph {
  int n = 0;
  std::vector<Circuit> vertices;  // enumerate_circuits(n, NonspanningOnly)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted
  /// Component id per vertex; ids are numbered by first vertex occurrence.
  std::vector<std::uint32_t> component;
  std::size_t component_count = 0;

  std::size_t index_of(const Circuit& c) const;
};

struct OmegaOptions {
  int jobs = 1;
  /// build_omega refuses n > 8 unless set.
  bool allow_large = false;
};

/// Brute force: enumerates the Theta-subgraphs containing c1.
bool omega_adjacent(int n, const Circuit& c1, const Circuit& c2);

/// Single pass over the Theta-subgraphs containing a 1243- or 1324-circuit.
OmegaGraph build_omega(int n, const OmegaOptions& options = {});

/// Components coincide with the classes of equal delta.
bool verify_omega_components(int n, const OmegaOptions& options = {});
bool components_match_delta(const OmegaGraph& omega);

}  // namespace biased
