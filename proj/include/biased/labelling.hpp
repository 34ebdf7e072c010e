#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "biased/circuit.hpp"
#include "biased/instance.hpp"

namespace biased {

using BigInt = boost::multiprecision::cpp_int;

/// Element of the cyclic group Z_m written additively; m = 0 is the integers.
class CyclicGroupElement {
 public:
  CyclicGroupElement() = default;
  CyclicGroupElement(std::int64_t modulus, BigInt value);

  std::int64_t modulus() const { return modulus_; }
  const BigInt& value() const { return value_; }
  bool is_identity() const { return value_ == 0; }

  friend CyclicGroupElement operator+(const CyclicGroupElement& a, const CyclicGroupElement& b);
  friend CyclicGroupElement operator-(const CyclicGroupElement& a, const CyclicGroupElement& b);
  friend CyclicGroupElement operator-(const CyclicGroupElement& a);
  friend bool operator==(const CyclicGroupElement&, const CyclicGroupElement&) = default;

 private:
  std::int64_t modulus_ = 0;
  BigInt value_ = 0;
};

enum class Orientation { Up, Down };

/// An orientation of K_n with a cyclic-group label on every edge. Up points
/// an edge {i < j} at j. Edges are indexed lexicographically by (i, j).
class CyclicLabelling {
 public:
  /// All edges Up with label 0.
  CyclicLabelling(int n, std::int64_t modulus);

  int n() const { return n_; }
  std::int64_t modulus() const { return modulus_; }
  std::size_t edge_count() const { return labels_.size(); }

  static std::size_t edge_index(int n, Vertex i, Vertex j);

  Orientation orientation(Vertex i, Vertex j) const;
  CyclicGroupElement label(Vertex i, Vertex j) const;
  /// Head of the edge under its current orientation.
  Vertex head(Vertex i, Vertex j) const;

  void set(Vertex i, Vertex j, Orientation o, const BigInt& value);

  friend bool operator==(const CyclicLabelling&, const CyclicLabelling&) = default;

 private:
  std::size_t index(Vertex i, Vertex j) const;

  int n_;
  std::int64_t modulus_;
  std::vector<Orientation> orientation_;
  std::vector<BigInt> labels_;
};

/// Signed label sum along the canonical traversal of c.
CyclicGroupElement pi(const CyclicLabelling& lab, const Circuit& c);

/// Balanced circuits are those with pi(C) = 0.
BiasedInstance derive_instance(const CyclicLabelling& lab);

/// Label 2^idx(e) over the integers: distinct subset sums.
CyclicLabelling gamma_u(int n);
/// Label 2^j on edge {i < j} over the integers: equal iff same head.
CyclicLabelling gamma_o(int n);
/// Label 1 on every edge over Z_a.
CyclicLabelling gamma_a(int a, int n);

/// Flip the edge and negate its label.
CyclicLabelling reorient_edge(const CyclicLabelling& lab, Vertex i, Vertex j);
/// Add alpha to labels of edges pointing at v, subtract it from edges
/// leaving v. Throws on modulus mismatch.
CyclicLabelling scale_vertex(const CyclicLabelling& lab, Vertex v, const CyclicGroupElement& alpha);
/// Orient everything Up and zero the labels at vertex 1 using only the two
/// moves above.
CyclicLabelling normalize_first_vertex(const CyclicLabelling& lab);

/// Least a in {1..n-2} with balanced = {C : a | delta(C)}, or 0 when
/// balanced = {C : delta(C) = 0}; nullopt if neither.
std::optional<int> recognize_delta_multiples(const BiasedInstance& inst);

struct LabellabilityVerdict {
  enum class Kind { ProvedNotLabellable, IsKa, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int a = 0;  // meaningful for IsKa
  std::string to_string() const;  // "No", "IsKa:<a>", "Inconclusive"
};

/// If every 1324- and 1243-circuit is balanced, any group labelling can be
/// normalized to a constant one, so the instance is labellable iff it is
/// some K^a(n). Otherwise returns Inconclusive. Needs n >= 5.
LabellabilityVerdict check_not_group_labellable(const BiasedInstance& inst);

/// All 1324- and 1243-circuits of the instance are balanced.
bool four_patterns_balanced(const BiasedInstance& inst);

void write_labelling(std::ostream& out, const CyclicLabelling& lab);
CyclicLabelling read_labelling(std::istream& in);

}  // namespace biased
