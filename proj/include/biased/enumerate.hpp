#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "biased/circuit.hpp"

namespace biased {

/// Simple undirected graph on vertices {1..order}, stored as neighbour masks.
class HostGraph {
 public:
  static HostGraph complete(int n);
  /// Side A is {1..a}, side B is {a+1..a+b}.
  static HostGraph complete_bipartite(int a, int b);

  int order() const { return order_; }
  VertexMask neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return (neighbours(u) & vertex_bit(v)) != 0; }
  VertexMask all() const;

 private:
  int order_ = 0;
  std::vector<VertexMask> adj_;  // index 0 unused
};

enum class SpanningFilter { All, NonspanningOnly, SpanningOnly };

/// Circuits of K_n in (length, lexicographic) order of canonical sequences.
void for_each_circuit(int n, SpanningFilter filter, const std::function<void(const Circuit&)>& fn);
std::vector<Circuit> enumerate_circuits(int n, SpanningFilter filter = SpanningFilter::All);

/// Circuits of an arbitrary host graph, sorted by (length, lexicographic).
std::vector<Circuit> enumerate_circuits(const HostGraph& host);

/// Closed forms: sum_{k=3..n} C(n,k)(k-1)!/2 and n + sum_{i=2..n} C(n,i) i!/2.
std::uint64_t circuit_count(int n);
std::uint64_t path_count(int n);
/// Number of Theta-subgraphs of K_n.
std::uint64_t theta_count(int n);

/// Streams every path of K_n once (single vertices included; longer paths
/// oriented so that the first end is the smaller) and returns the count.
std::uint64_t enumerate_paths(int n, const std::function<void(const PathSeq&)>& sink = {});

/// The circuit formed by two internally disjoint x-y paths.
Circuit circuit_of_paths(const PathSeq& p, const PathSeq& q);

/// Union of three internally disjoint x-y paths. `circuits[i]` is the circuit
/// avoiding the edges of `paths[i]`.
struct ThetaSubgraph {
  Vertex x = 0, y = 0;
  std::array<PathSeq, 3> paths;
  std::array<Circuit, 3> circuits;

  /// Sorts the paths and fills the circuits. Paths must run x -> y.
  static ThetaSubgraph from_paths(PathSeq a, PathSeq b, PathSeq c);

  bool contains(const Circuit& c) const {
    return circuits[0] == c || circuits[1] == c || circuits[2] == c;
  }
  friend bool operator==(const ThetaSubgraph&, const ThetaSubgraph&) = default;
};

/// All x-y paths of a host graph (x < y) whose internal vertices avoid
/// `forbidden`, in lexicographic order.
class BranchPaths {
 public:
  BranchPaths(const HostGraph& host, Vertex x, Vertex y, VertexMask forbidden = 0);

  Vertex x() const { return x_; }
  Vertex y() const { return y_; }
  std::size_t size() const { return paths_.size(); }
  const PathSeq& path(std::size_t i) const { return paths_[i]; }
  VertexMask internal(std::size_t i) const { return internal_[i]; }
  bool disjoint(std::size_t i, std::size_t j) const { return (internal_[i] & internal_[j]) == 0; }

  Circuit circuit(std::size_t i, std::size_t j) const { return circuit_of_paths(paths_[i], paths_[j]); }

  /// Every unordered triple i < j < k of pairwise internally disjoint paths,
  /// in lexicographic order.
  void for_each_triple(const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) const;

  ThetaSubgraph theta(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  Vertex x_, y_;
  VertexMask allowed_ = 0;
  std::vector<PathSeq> paths_;
  std::vector<VertexMask> internal_;
  std::unordered_map<VertexMask, std::vector<std::uint32_t>> by_mask_;
};

/// Every Theta-subgraph of the host once, ordered by (x, y, sorted paths).
void for_each_theta(const HostGraph& host, const std::function<void(const ThetaSubgraph&)>& fn);

/// Every Theta-subgraph that contains circuit `c` once.
void for_each_theta_containing(const HostGraph& host, const Circuit& c,
                               const std::function<void(const ThetaSubgraph&)>& fn);

/// Materialized Theta-subgraphs of K_n (n >= 4), optionally only those
/// containing `restrict_to`.
std::vector<ThetaSubgraph> enumerate_thetas(int n, const std::optional<Circuit>& restrict_to = {});

}  // namespace biased
