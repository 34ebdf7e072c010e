#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace biased {

/// Vertices are positive integers. Complete graphs use {1..n}; bipartite
/// hosts number side A first, then side B.
using Vertex = int;

/// Largest vertex label a circuit or path may carry.
inline constexpr int kMaxVertex = 32;

/// Bitmask of a vertex set, bit (v - 1) for vertex v.
using VertexMask = std::uint64_t;

constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << (v - 1); }

/// A circuit held in canonical ordering: the minimum vertex first and the
/// smaller of its two neighbours second. Two circuits compare equal iff they
/// have the same vertex cycle. Ordering is by (length, lexicographic).
class Circuit {
 public:
  /// Empty placeholder. Every Circuit produced by the library has length >= 3.
  Circuit() = default;

  /// Canonicalizes any of the 2k rotations/reflections of a cyclic sequence.
  /// Throws std::invalid_argument on length < 3, repeats, or labels outside
  /// [1, kMaxVertex].
  static Circuit from_cycle(std::span<const Vertex> cyclic_sequence);
  static Circuit from_cycle(std::initializer_list<Vertex> cyclic_sequence) {
    return from_cycle(std::span<const Vertex>(cyclic_sequence.begin(), cyclic_sequence.size()));
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  Vertex front() const { return v_[0]; }

  std::vector<Vertex> vertices() const { return {v_.begin(), v_.begin() + size_}; }
  VertexMask vertex_mask() const;
  bool contains(Vertex v) const { return (vertex_mask() & vertex_bit(v)) != 0; }
  Vertex max_vertex() const;

  /// "1 3 2 4"
  std::string to_string() const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.size_ == b.size_ && a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Circuit& a, const Circuit& b);

 private:
  std::array<std::uint8_t, kMaxVertex> v_{};
  std::uint8_t size_ = 0;

  friend struct CircuitHash;
  friend Circuit relabel_sorted(const Circuit&, std::span<const Vertex>);
};

std::ostream& operator<<(std::ostream& os, const Circuit& c);

struct CircuitHash {
  std::size_t operator()(const Circuit& c) const noexcept;
};

inline Circuit canonicalize(std::span<const Vertex> cyclic_sequence) {
  return Circuit::from_cycle(cyclic_sequence);
}

/// Parses the text form "1 3 2 4". The input need not be canonical.
Circuit parse_circuit(const std::string& text);

/// |ascents - descents| around the cycle.
int delta(const Circuit& c);

/// A path as a vertex sequence in traversal order.
struct PathSeq {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  VertexMask vertex_mask() const;
  /// Mask of all vertices except the two ends.
  VertexMask internal_mask() const;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
  friend auto operator<=>(const PathSeq&, const PathSeq&) = default;
};

/// Signed: ascents minus descents along the traversal.
int path_delta(const PathSeq& p);

/// Every vertex is a strict local minimum or maximum of its two neighbours.
bool is_oscillating(const Circuit& c);

enum class FourPattern { C1324, C1243, Other };

/// Pattern realized by the canonical ordering of a 4-circuit. Throws if
/// |c| != 4.
FourPattern classify_four_circuit(const Circuit& c);

/// True for 1324- and 1243-circuits; false for anything else, including
/// circuits of other lengths.
bool is_four_pattern(const Circuit& c);

/// Order-isomorphism of canonical orderings. Throws on length mismatch.
bool similar(const Circuit& a, const Circuit& b);

/// The circuit on the sorted vertex set `labels` that is similar to `c`;
/// `c` must use vertices {1..|c|}. Used to place a pattern on a subset.
Circuit relabel_sorted(const Circuit& pattern, std::span<const Vertex> labels);

/// The unique circuit on the 4-set `quad` realizing `pattern`.
Circuit four_circuit_on(std::span<const Vertex> quad, FourPattern pattern);

}  // namespace biased

template <>
struct std::hash<biased::Circuit> : biased::CircuitHash {};
