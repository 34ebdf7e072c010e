#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biased/instance.hpp"

namespace biased {

/// A biased K_{nA,nB}. Vertex a_i is stored as i and b_j as nA + j, so the
/// clique canonical form puts the least A-vertex first.
class BipartiteInstance {
 public:
  BipartiteInstance() = default;
  /// Throws std::invalid_argument on odd, non-alternating or out-of-range circuits.
  BipartiteInstance(int nA, int nB, CircuitSet balanced);

  int nA() const { return nA_; }
  int nB() const { return nB_; }
  Vertex a(int i) const { return i; }
  Vertex b(int j) const { return nA_ + j; }
  bool on_a_side(Vertex v) const { return v <= nA_; }
  HostGraph host() const { return HostGraph::complete_bipartite(nA_, nB_); }

  bool is_balanced(const Circuit& c) const { return balanced_.contains(c); }
  const CircuitSet& balanced() const { return balanced_; }
  std::size_t balanced_count() const { return balanced_.size(); }
  std::vector<Circuit> sorted_balanced() const;

  friend bool operator==(const BipartiteInstance& x, const BipartiteInstance& y) {
    return x.nA_ == y.nA_ && x.nB_ == y.nB_ && x.balanced_ == y.balanced_;
  }

 private:
  int nA_ = 0, nB_ = 0;
  CircuitSet balanced_;
};

/// Throws std::invalid_argument unless c is a circuit of K_{nA,nB}.
void check_bipartite_circuit(int nA, int nB, const Circuit& c);

/// "a1 b2 a2 b1" in the stored vertex numbering.
std::string bipartite_to_string(int nA, const Circuit& c);

ValidationReport validate_bipartite(const BipartiteInstance& inst, const ValidationMode& mode = ValidationMode::full(),
                                    const ValidateOptions& options = {});

/// Instance of an integer labelling of K_{nA,nB} with every edge pointing
/// from A to B: labels[(i-1)*nB + (j-1)] sits on a_i b_j. A circuit is
/// balanced when its signed sum is 0 modulo `modulus` (0 means over Z).
BipartiteInstance bipartite_from_labels(int nA, int nB, std::int64_t modulus, std::span<const std::int64_t> labels);

BipartiteInstance bipartite_all(int nA, int nB);
inline BipartiteInstance bipartite_none(int nA, int nB) { return BipartiteInstance(nA, nB, {}); }

/// Circuits of the subgraph induced by the given A- and B-vertices, sorted.
std::vector<Circuit> induced_circuits(std::span<const Vertex> a_side, std::span<const Vertex> b_side);

struct Biclique {
  std::vector<Vertex> a_side;  // 1..nA
  std::vector<Vertex> b_side;  // 1..nB, side-local
};

/// Runs the class-partition / pair-colouring / maximal-unbalanced pipeline
/// for a consistent K_{t,t}. Any returned biclique has been checked with
/// is_consistent; nullopt when some stage runs out of vertices.
std::optional<Biclique> find_consistent_biclique(const BipartiteInstance& inst, int t);

/// Text format "biased-biclique v1".
void write_bipartite(std::ostream& out, const BipartiteInstance& inst);
BipartiteInstance read_bipartite(std::istream& in);

}  // namespace biased
