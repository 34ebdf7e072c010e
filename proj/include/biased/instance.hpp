#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "biased/circuit.hpp"
#include "biased/enumerate.hpp"

namespace biased {

using CircuitSet = std::unordered_set<Circuit, CircuitHash>;

/// The ordered complete graph K_n together with its set of balanced circuits.
/// Whether the set satisfies the theta property is checked by validate(),
/// not at construction.
class BiasedInstance {
 public:
  BiasedInstance() = default;
  /// Throws std::invalid_argument if a circuit is not a circuit of K_n.
  BiasedInstance(int n, CircuitSet balanced);
  BiasedInstance(int n, std::span<const Circuit> balanced);

  int n() const { return n_; }
  bool is_balanced(const Circuit& c) const { return balanced_.contains(c); }
  const CircuitSet& balanced() const { return balanced_; }
  std::size_t balanced_count() const { return balanced_.size(); }
  /// Balanced circuits in (length, lexicographic) order.
  std::vector<Circuit> sorted_balanced() const;

  /// Same n and same balanced set.
  friend bool operator==(const BiasedInstance& a, const BiasedInstance& b) {
    return a.n_ == b.n_ && a.balanced_ == b.balanced_;
  }

 private:
  int n_ = 0;
  CircuitSet balanced_;
};

inline bool equals_instance(const BiasedInstance& a, const BiasedInstance& b) { return a == b; }

struct ValidationReport {
  bool valid = true;
  /// Theta-subgraphs holding exactly two balanced circuits, in enumeration
  /// order, truncated to ValidateOptions::max_violations.
  std::vector<ThetaSubgraph> violations;
  std::uint64_t violation_count = 0;
  std::uint64_t checked_count = 0;
};

/// Full checks every Theta-subgraph of K_n. Restricted checks only those
/// containing at least one of the listed circuits; this is sound when the
/// instance differs from a valid one only on those circuits.
struct ValidationMode {
  std::optional<std::vector<Circuit>> restricted_to;

  static ValidationMode full() { return {}; }
  static ValidationMode restricted(std::vector<Circuit> circuits) { return {std::move(circuits)}; }
};

struct ValidateOptions {
  int jobs = 1;
  std::size_t max_violations = 16;
  /// Full mode refuses n >= 9 unless set.
  bool allow_large_full = false;
};

ValidationReport validate(const BiasedInstance& inst, const ValidationMode& mode = ValidationMode::full(),
                          const ValidateOptions& options = {});

/// Theta-property check on an arbitrary host graph; `balanced` decides
/// membership. Shared by the clique and biclique validators.
ValidationReport validate_host(const HostGraph& host, const std::function<bool(const Circuit&)>& balanced,
                               const ValidationMode& mode, const ValidateOptions& options);

/// Induced sub-instance on X, relabelled order-preservingly onto {1..|X|}.
BiasedInstance restrict(const BiasedInstance& inst, std::span<const Vertex> X);

/// All listed circuits balanced, or none.
bool is_consistent(const BiasedInstance& inst, std::span<const Circuit> circuits);

/// No balanced circuits.
BiasedInstance make_ku(int n);
/// Exactly the oscillating circuits balanced.
BiasedInstance make_ko(int n);
/// Circuits with a | delta(C) balanced; a = 0 means delta(C) = 0.
BiasedInstance make_ka(int a, int n);

/// a | d with the convention that 0 divides only 0.
constexpr bool divides(int a, int d) { return a == 0 ? d == 0 : d % a == 0; }

/// Text format "biased-clique v1".
void write_instance(std::ostream& out, const BiasedInstance& inst);
/// Throws ParseError with a 1-based line number.
BiasedInstance read_instance(std::istream& in);

}  // namespace biased
