#include "biased/structure_search.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "biased/labelling.hpp"

namespace biased {

std::string QuadColor::to_string() const {
  auto c = [](Bias x) { return x == Bias::b ? 'b' : 'u'; };
  return std::string("(") + c(alpha) + "," + c(beta) + ")";
}

QuadColor color_quadruple(const BiasedInstance& inst, std::span<const Vertex> quad) {
  if (quad.size() != 4) throw std::invalid_argument("color_quadruple needs 4 vertices");
  QuadColor q;
  q.alpha = inst.is_balanced(four_circuit_on(quad, FourPattern::C1324)) ? Bias::b : Bias::u;
  q.beta = inst.is_balanced(four_circuit_on(quad, FourPattern::C1243)) ? Bias::b : Bias::u;
  return q;
}

namespace {

using Subset = std::vector<Vertex>;

/// Depth-first search over `size`-subsets of {1..n} in lexicographic order.
/// `extendable(partial, v)` prunes (v exceeds everything in partial);
/// `accept(subset)` decides complete subsets. Returns the first accepted.
std::optional<Subset> first_subset(int n, int size, const std::function<bool(const Subset&, Vertex)>& extendable,
                                   const std::function<bool(const Subset&)>& accept) {
  if (size < 0 || size > n) return std::nullopt;
  Subset cur;
  std::optional<Subset> found;
  std::function<void(Vertex)> dfs = [&](Vertex from) {
    if (found) return;
    if (static_cast<int>(cur.size()) == size) {
      if (accept(cur)) found = cur;
      return;
    }
    const int missing = size - static_cast<int>(cur.size());
    for (Vertex v = from; v + missing - 1 <= n && !found; ++v) {
      if (!extendable(cur, v)) continue;
      cur.push_back(v);
      dfs(v + 1);
      cur.pop_back();
    }
  };
  dfs(1);
  return found;
}

/// Adding v keeps every 4-subset of partial + v at colour `want`.
bool quads_stay(const BiasedInstance& inst, const Subset& partial, Vertex v, QuadColor want) {
  const std::size_t m = partial.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        const Vertex quad[4] = {partial[a], partial[b], partial[c], v};
        if (color_quadruple(inst, quad) != want) return false;
      }
  return true;
}

std::optional<Subset> uniform_subset(const BiasedInstance& inst, QuadColor color, int size,
                                     const std::function<bool(const Subset&)>& accept) {
  return first_subset(
      inst.n(), size, [&](const Subset& p, Vertex v) { return quads_stay(inst, p, v, color); }, accept);
}

bool restriction_equals(const BiasedInstance& inst, const Subset& X, const BiasedInstance& target) {
  if (X.size() < 3) return target.balanced_count() == 0;
  return restrict(inst, X) == target;
}

std::string join(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

std::optional<UniformSubset> find_uniform_quads(const BiasedInstance& inst, const std::map<QuadColor, int>& targets) {
  std::optional<UniformSubset> best;
  for (const auto& [color, size] : targets) {
    auto found = uniform_subset(inst, color, size, [](const Subset&) { return true; });
    if (found && (!best || *found < best->vertices)) best = UniformSubset{*found, color};
  }
  return best;
}

std::optional<ConstantClassification> classify_constant(const BiasedInstance& inst) {
  const int n = inst.n();
  if (n < 5) throw std::invalid_argument("classify_constant needs n >= 5");
  if (!four_patterns_balanced(inst)) return std::nullopt;

  // Nonspanning circuits have delta <= n - 3.
  std::vector<char> all_balanced(static_cast<std::size_t>(n - 2), 1);
  for_each_circuit(n, SpanningFilter::NonspanningOnly, [&](const Circuit& c) {
    if (!inst.is_balanced(c)) all_balanced[static_cast<std::size_t>(delta(c))] = 0;
  });
  ConstantClassification out;
  for (int d = 0; d <= n - 3; ++d)
    if (all_balanced[static_cast<std::size_t>(d)]) out.balanced_deltas.push_back(d);

  const auto& D = out.balanced_deltas;
  auto in_d = [&](int d) { return std::binary_search(D.begin(), D.end(), d); };
  if (!in_d(0)) return std::nullopt;
  for (int d1 : D)
    for (int d2 : D)
      if (d1 > 0 && d1 < d2 && !in_d(d2 - d1)) return std::nullopt;

  out.a = D.size() > 1 ? D[1] : n - 2;
  const BiasedInstance target = make_ka(out.a, n - 1);
  out.per_vertex_check = true;
  Subset rest;
  for (Vertex v = 1; v <= n && out.per_vertex_check; ++v) {
    rest.clear();
    for (Vertex u = 1; u <= n; ++u)
      if (u != v) rest.push_back(u);
    out.per_vertex_check = restrict(inst, rest) == target;
  }
  return out;
}

std::string Classification::to_string() const {
  std::string k;
  switch (kind) {
    case Kind::Ku: k = "Ku"; break;
    case Kind::Ko: k = "Ko"; break;
    case Kind::Ka: k = "Ka:" + std::to_string(a); break;
    case Kind::Other: k = "Other"; break;
  }
  return "kind=" + k + " witness=" + join(witness);
}

Classification search_unavoidable(const BiasedInstance& inst, int r, int s, int t) {
  if (r < 1 || s < 1 || t < 4) throw std::invalid_argument("search_unavoidable needs r, s >= 1 and t >= 4");
  using Kind = Classification::Kind;

  // Colour classes and their desk-scale sizes: (u,u) -> K^u, (b,u) -> K^o,
  // (b,b) -> K^a via a (t+1)-set, (u,b) cannot be uniform on 5 vertices.
  const std::map<QuadColor, int> targets{{kColorUU, r}, {kColorBU, s}, {kColorUB, 5}, {kColorBB, t + 1}};
  const auto uniform = find_uniform_quads(inst, targets);

  std::string notes;
  if (uniform && uniform->color == kColorUB)
    notes = "; (u,b)-uniform set " + join(uniform->vertices) + " breaks the theta property";

  auto try_ku = [&]() -> std::optional<Classification> {
    const BiasedInstance target = make_ku(std::max(r, 1));
    auto X = uniform_subset(inst, kColorUU, r, [&](const Subset& X) { return restriction_equals(inst, X, target); });
    if (!X) return std::nullopt;
    return Classification{Kind::Ku, 0, *X, "no balanced circuit on the witness"};
  };
  auto try_ko = [&]() -> std::optional<Classification> {
    const BiasedInstance target = make_ko(std::max(s, 1));
    auto X = uniform_subset(inst, kColorBU, s, [&](const Subset& X) { return restriction_equals(inst, X, target); });
    if (!X) return std::nullopt;
    return Classification{Kind::Ko, 0, *X, "balanced circuits are exactly the oscillating ones"};
  };
  auto try_ka = [&]() -> std::optional<Classification> {
    std::optional<Classification> result;
    uniform_subset(inst, kColorBB, t + 1, [&](const Subset& X) {
      auto constant = classify_constant(restrict(inst, X));
      if (!constant || !constant->per_vertex_check) return false;
      Subset witness(X.begin(), X.end() - 1);
      if (!restriction_equals(inst, witness, make_ka(constant->a, t))) return false;
      result = Classification{Kind::Ka, constant->a, witness,
                              "all 1324/1243-circuits balanced on " + join(X) + "; deleted its largest vertex"};
      return true;
    });
    return result;
  };

  std::vector<std::function<std::optional<Classification>()>> order;
  auto first_color = uniform ? uniform->color : kColorUU;
  if (first_color == kColorBU)
    order = {try_ko, try_ku, try_ka};
  else if (first_color == kColorBB)
    order = {try_ka, try_ku, try_ko};
  else
    order = {try_ku, try_ko, try_ka};

  for (auto& attempt : order)
    if (auto c = attempt()) {
      c->certificate += notes;
      return *c;
    }
  return Classification{Kind::Other, 0, {}, "below threshold" + notes};
}

}  // namespace biased
