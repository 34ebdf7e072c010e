#include "biased/bipartite.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "text_io.hpp"

namespace biased {

void check_bipartite_circuit(int nA, int nB, const Circuit& c) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("circuit (" + c.to_string() + ") " + why);
  };
  if (c.size() < 4 || c.size() % 2 != 0) fail("has odd length or is shorter than 4");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1 || c[i] > nA + nB) fail("uses a vertex outside the biclique");
    const bool here = c[i] <= nA;
    const bool next = c[(i + 1) % c.size()] <= nA;
    if (here == next) fail("does not alternate sides");
  }
}

BipartiteInstance::BipartiteInstance(int nA, int nB, CircuitSet balanced)
    : nA_(nA), nB_(nB), balanced_(std::move(balanced)) {
  if (nA < 1 || nB < 1 || nA + nB > kMaxVertex) throw std::invalid_argument("biclique sides out of range");
  for (const Circuit& c : balanced_) check_bipartite_circuit(nA, nB, c);
}

std::vector<Circuit> BipartiteInstance::sorted_balanced() const {
  std::vector<Circuit> out(balanced_.begin(), balanced_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string bipartite_to_string(int nA, const Circuit& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += c[i] <= nA ? "a" + std::to_string(c[i]) : "b" + std::to_string(c[i] - nA);
  }
  return out;
}

ValidationReport validate_bipartite(const BipartiteInstance& inst, const ValidationMode& mode,
                                    const ValidateOptions& options) {
  if (inst.nA() < 2 || inst.nB() < 2) throw std::invalid_argument("validate_bipartite needs both sides >= 2");
  if (mode.restricted_to)
    for (const Circuit& c : *mode.restricted_to) check_bipartite_circuit(inst.nA(), inst.nB(), c);
  return validate_host(inst.host(), [&](const Circuit& c) { return inst.is_balanced(c); }, mode, options);
}

BipartiteInstance bipartite_from_labels(int nA, int nB, std::int64_t modulus, std::span<const std::int64_t> labels) {
  if (labels.size() != static_cast<std::size_t>(nA) * static_cast<std::size_t>(nB))
    throw std::invalid_argument("bipartite_from_labels: need nA * nB labels");
  if (modulus < 0) throw std::invalid_argument("bipartite_from_labels: negative modulus");
  auto label = [&](Vertex a, Vertex b) { return labels[static_cast<std::size_t>((a - 1) * nB + (b - nA - 1))]; };
  CircuitSet balanced;
  for (const Circuit& c : enumerate_circuits(HostGraph::complete_bipartite(nA, nB))) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex u = c[i], v = c[(i + 1) % c.size()];
      sum += u <= nA ? label(u, v) : -label(v, u);
      if (modulus > 0) sum %= modulus;
    }
    if (sum == 0) balanced.insert(c);
  }
  return BipartiteInstance(nA, nB, std::move(balanced));
}

BipartiteInstance bipartite_all(int nA, int nB) {
  const auto circuits = enumerate_circuits(HostGraph::complete_bipartite(nA, nB));
  return BipartiteInstance(nA, nB, CircuitSet(circuits.begin(), circuits.end()));
}

std::vector<Circuit> induced_circuits(std::span<const Vertex> a_side, std::span<const Vertex> b_side) {
  std::vector<Vertex> labels(a_side.begin(), a_side.end());
  std::sort(labels.begin(), labels.end());
  std::vector<Vertex> bs(b_side.begin(), b_side.end());
  std::sort(bs.begin(), bs.end());
  if (!labels.empty() && !bs.empty() && labels.back() >= bs.front())
    throw std::invalid_argument("induced_circuits: A-vertices must precede B-vertices");
  labels.insert(labels.end(), bs.begin(), bs.end());
  std::vector<Circuit> out;
  if (a_side.size() < 2 || b_side.size() < 2) return out;
  for (const Circuit& c :
       enumerate_circuits(HostGraph::complete_bipartite(static_cast<int>(a_side.size()), static_cast<int>(bs.size()))))
    out.push_back(relabel_sorted(c, labels));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Side = std::vector<Vertex>;

bool consistent_on(const BipartiteInstance& inst, const Side& A, const Side& B) {
  const auto circuits = induced_circuits(A, B);
  std::size_t balanced = 0;
  for (const Circuit& c : circuits) balanced += inst.is_balanced(c);
  return balanced == 0 || balanced == circuits.size();
}

Circuit four(Vertex x, Vertex u, Vertex y, Vertex v) { return Circuit::from_cycle({x, u, y, v}); }

// Lexicographically least t-subset of A0 on which the pair colouring is constant.
std::optional<Side> monochromatic_subset(const Side& A0, int t, const std::map<std::pair<Vertex, Vertex>, bool>& colour) {
  Side cur;
  std::optional<Side> found;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (found) return;
    if (static_cast<int>(cur.size()) == t) {
      found = cur;
      return;
    }
    for (std::size_t i = from; i < A0.size() && !found; ++i) {
      bool ok = true;
      if (cur.size() >= 2) {
        const bool want = colour.at({cur[0], cur[1]});
        for (Vertex v : cur) ok = ok && colour.at({v, A0[i]}) == want;
      }
      if (!ok) continue;
      cur.push_back(A0[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  return found;
}

}  // namespace

std::optional<Biclique> find_consistent_biclique(const BipartiteInstance& inst, int t) {
  if (t < 1) throw std::invalid_argument("find_consistent_biclique needs t >= 1");
  const int nA = inst.nA();
  if (nA < t || inst.nB() < t) return std::nullopt;

  auto result = [&](const Side& A, const Side& B) -> std::optional<Biclique> {
    Side a(A.begin(), A.begin() + t), b(B.begin(), B.begin() + t);
    if (!consistent_on(inst, a, b)) return std::nullopt;
    Biclique out{a, {}};
    for (Vertex v : b) out.b_side.push_back(v - nA);
    return out;
  };

  // A0: the first min(nA, 4^t) A-vertices.
  long long n0 = 1;
  for (int i = 0; i < t && n0 < nA; ++i) n0 *= 4;
  Side A0;
  for (Vertex v = 1; v <= std::min<long long>(nA, n0); ++v) A0.push_back(inst.a(v));
  Side B;
  for (int j = 1; j <= inst.nB(); ++j) B.push_back(inst.b(j));
  if (t == 1) return result(A0, B);

  // For each pair X of A0, "C_{X,uv} balanced" is an equivalence on B.
  for (std::size_t i = 0; i < A0.size(); ++i)
    for (std::size_t j = i + 1; j < A0.size() && B.size() >= 2; ++j) {
      std::vector<Side> classes;
      for (Vertex b : B) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const Side& cls) { return inst.is_balanced(four(A0[i], cls[0], A0[j], b)); });
        if (it != classes.end())
          it->push_back(b);
        else
          classes.push_back({b});
      }
      const Side* largest = &classes[0];
      for (const Side& cls : classes)
        if (cls.size() > largest->size()) largest = &cls;
      if (largest->size() >= classes.size()) {
        B = *largest;
      } else {
        Side reps;
        for (const Side& cls : classes) reps.push_back(cls[0]);
        B = reps;
      }
    }
  if (static_cast<int>(B.size()) < t) return std::nullopt;

  std::map<std::pair<Vertex, Vertex>, bool> colour;
  for (std::size_t i = 0; i < A0.size(); ++i)
    for (std::size_t j = i + 1; j < A0.size(); ++j)
      colour[{A0[i], A0[j]}] = inst.is_balanced(four(A0[i], B[0], A0[j], B[1]));
  const auto A1 = monochromatic_subset(A0, t, colour);
  if (!A1) return std::nullopt;
  const bool fours_balanced = colour.at({(*A1)[0], (*A1)[1]});

  // Greedy maximal B2 with every circuit on A1 + B2 unbalanced.
  Side B2;
  for (Vertex b : B) {
    Side trial = B2;
    trial.push_back(b);
    bool clean = true;
    for (const Circuit& c : induced_circuits(*A1, trial))
      if (c.contains(b) && inst.is_balanced(c)) {
        clean = false;
        break;
      }
    if (clean) B2 = std::move(trial);
  }
  if (static_cast<int>(B2.size()) >= t) return result(*A1, B2);

  // Every b outside B2 closes a balanced circuit through B2; two such b
  // sharing the rest of that circuit span a balanced 4-circuit.
  std::map<std::vector<Vertex>, Vertex> seen;
  std::optional<Circuit> witness;
  for (Vertex b : B) {
    if (std::find(B2.begin(), B2.end(), b) != B2.end()) continue;
    Side trial = B2;
    trial.push_back(b);
    std::sort(trial.begin(), trial.end());
    for (const Circuit& c : induced_circuits(*A1, trial)) {
      if (!c.contains(b) || !inst.is_balanced(c)) continue;
      auto seq = c.vertices();
      std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), b), seq.end());
      std::vector<Vertex> path(seq.begin() + 1, seq.end());
      if (path.front() > path.back()) std::reverse(path.begin(), path.end());
      auto [it, fresh] = seen.emplace(path, b);
      if (!fresh) witness = four(it->second, path.front(), b, path.back());
      break;
    }
    if (witness) break;
  }
  if (witness && !inst.is_balanced(*witness)) return std::nullopt;
  if (!fours_balanced) return std::nullopt;
  return result(*A1, B);
}

void write_bipartite(std::ostream& out, const BipartiteInstance& inst) {
  const auto circuits = inst.sorted_balanced();
  out << "biased-biclique v1\n";
  out << "nA " << inst.nA() << '\n';
  out << "nB " << inst.nB() << '\n';
  out << "balanced " << circuits.size() << '\n';
  for (const Circuit& c : circuits) out << bipartite_to_string(inst.nA(), c) << '\n';
  out << "end\n";
}

BipartiteInstance read_bipartite(std::istream& in) {
  using namespace detail;
  LineReader r(in);
  if (r.next("header") != "biased-biclique v1") throw ParseError(r.line(), "expected header 'biased-biclique v1'");
  const int nA = keyed_int(r, "nA");
  const int nB = keyed_int(r, "nB");
  if (nA < 1 || nB < 1 || nA + nB > kMaxVertex) throw ParseError(r.line(), "sides out of range");
  const int count = keyed_int(r, "balanced");
  if (count < 0) throw ParseError(r.line(), "negative circuit count");
  CircuitSet balanced;
  Circuit prev;
  for (int i = 0; i < count; ++i) {
    const std::string line = r.next("a circuit");
    std::istringstream ls(line);
    std::vector<Vertex> seq;
    std::string tok;
    while (ls >> tok) {
      if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b')) throw ParseError(r.line(), "bad vertex '" + tok + "'");
      const int idx = parse_int(tok.substr(1), r.line());
      const int limit = tok[0] == 'a' ? nA : nB;
      if (idx < 1 || idx > limit) throw ParseError(r.line(), "vertex '" + tok + "' out of range");
      seq.push_back(tok[0] == 'a' ? idx : nA + idx);
    }
    Circuit c;
    try {
      c = Circuit::from_cycle(seq);
      check_bipartite_circuit(nA, nB, c);
    } catch (const std::invalid_argument& e) {
      throw ParseError(r.line(), e.what());
    }
    if (c.vertices() != seq) throw ParseError(r.line(), "circuit not in canonical ordering: '" + line + "'");
    if (!prev.empty() && !(prev < c)) throw ParseError(r.line(), "circuits not sorted");
    balanced.insert(c);
    prev = c;
  }
  if (r.next("'end'") != "end") throw ParseError(r.line(), "expected 'end'");
  return BipartiteInstance(nA, nB, std::move(balanced));
}

}  // namespace biased
