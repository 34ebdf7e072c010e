#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biased/instance.hpp"

namespace biased {

enum class Bias { b, u };

/// Colour of a 4-subset: alpha for its 1324-circuit, beta for its 1243-circuit.
struct QuadColor {
  Bias alpha = Bias::u;
  Bias beta = Bias::u;

  std::string to_string() const;  // "(b,u)"
  friend auto operator<=>(const QuadColor&, const QuadColor&) = default;
};

inline constexpr QuadColor kColorUU{Bias::u, Bias::u};
inline constexpr QuadColor kColorBU{Bias::b, Bias::u};
inline constexpr QuadColor kColorUB{Bias::u, Bias::b};
inline constexpr QuadColor kColorBB{Bias::b, Bias::b};

QuadColor color_quadruple(const BiasedInstance& inst, std::span<const Vertex> quad);

struct UniformSubset {
  std::vector<Vertex> vertices;
  QuadColor color;
};

/// Exhaustive search for a vertex set of size targets[q] whose 4-subsets all
/// have colour q, for some q. Returns the lexicographically least such set
/// over all colours (ties go to the smaller colour). Targets larger than n
/// cannot be met and are skipped.
std::optional<UniformSubset> find_uniform_quads(const BiasedInstance& inst, const std::map<QuadColor, int>& targets);

struct ConstantClassification {
  int a = 0;
  bool per_vertex_check = false;
  /// delta values d <= n-3 whose nonspanning circuits are all balanced.
  std::vector<int> balanced_deltas;
};

/// For an instance whose 1324- and 1243-circuits are all balanced, finds a
/// with every single-vertex deletion equal to K^a(n-1). nullopt when the
/// premise fails or the balanced delta classes are not closed under
/// differences.
std::optional<ConstantClassification> classify_constant(const BiasedInstance& inst);

struct Classification {
  enum class Kind { Ku, Ko, Ka, Other };
  Kind kind = Kind::Other;
  int a = 0;
  std::vector<Vertex> witness;
  std::string certificate;

  /// "kind=<Ku|Ko|Ka:a|Other> witness=<v1,...,vk>"
  std::string to_string() const;
};

/// Desk-scale unavoidable-structure search. Any non-Other result has been
/// re-verified: restrict(inst, witness) equals K^u(r), K^o(s) or K^a(t).
Classification search_unavoidable(const BiasedInstance& inst, int r, int s, int t);

}  // namespace biased
