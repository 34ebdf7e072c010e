#include "biased/labelling.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "biased/parse_error.hpp"

namespace biased {

namespace {

BigInt reduce(std::int64_t modulus, BigInt v) {
  if (modulus == 0) return v;
  const BigInt m = modulus;
  v %= m;
  if (v < 0) v += m;
  return v;
}

void require_same_group(const CyclicGroupElement& a, const CyclicGroupElement& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("cyclic group elements with different moduli");
}

}  // namespace

CyclicGroupElement::CyclicGroupElement(std::int64_t modulus, BigInt value) : modulus_(modulus) {
  if (modulus < 0) throw std::invalid_argument("modulus must be >= 0");
  value_ = reduce(modulus, std::move(value));
}

CyclicGroupElement operator+(const CyclicGroupElement& a, const CyclicGroupElement& b) {
  require_same_group(a, b);
  return {a.modulus_, a.value_ + b.value_};
}

CyclicGroupElement operator-(const CyclicGroupElement& a, const CyclicGroupElement& b) {
  require_same_group(a, b);
  return {a.modulus_, a.value_ - b.value_};
}

CyclicGroupElement operator-(const CyclicGroupElement& a) { return {a.modulus_, -a.value_}; }

CyclicLabelling::CyclicLabelling(int n, std::int64_t modulus) : n_(n), modulus_(modulus) {
  if (n < 1 || n > kMaxVertex) throw std::invalid_argument("labelling order out of range");
  if (modulus < 0) throw std::invalid_argument("modulus must be >= 0");
  const std::size_t m = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  orientation_.assign(m, Orientation::Up);
  labels_.assign(m, BigInt(0));
}

std::size_t CyclicLabelling::edge_index(int n, Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  const auto a = static_cast<std::size_t>(i - 1);
  // Edges before row i: sum_{r < i} (n - r).
  return a * static_cast<std::size_t>(2 * n - i) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::size_t CyclicLabelling::index(Vertex i, Vertex j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("not an edge of K_n");
  return edge_index(n_, i, j);
}

Orientation CyclicLabelling::orientation(Vertex i, Vertex j) const { return orientation_[index(i, j)]; }

CyclicGroupElement CyclicLabelling::label(Vertex i, Vertex j) const { return {modulus_, labels_[index(i, j)]}; }

Vertex CyclicLabelling::head(Vertex i, Vertex j) const {
  const Vertex lo = std::min(i, j), hi = std::max(i, j);
  return orientation(i, j) == Orientation::Up ? hi : lo;
}

void CyclicLabelling::set(Vertex i, Vertex j, Orientation o, const BigInt& value) {
  const std::size_t e = index(i, j);
  orientation_[e] = o;
  labels_[e] = reduce(modulus_, value);
}

CyclicGroupElement pi(const CyclicLabelling& lab, const Circuit& c) {
  BigInt sum = 0;
  const std::size_t k = c.size();
  for (std::size_t s = 0; s < k; ++s) {
    const Vertex from = c[s], to = c[(s + 1) % k];
    const CyclicGroupElement l = lab.label(from, to);
    if (lab.head(from, to) == to)
      sum += l.value();
    else
      sum -= l.value();
  }
  return {lab.modulus(), std::move(sum)};
}

BiasedInstance derive_instance(const CyclicLabelling& lab) {
  if (lab.n() < 3) throw std::invalid_argument("derive_instance needs n >= 3");
  CircuitSet balanced;
  for_each_circuit(lab.n(), SpanningFilter::All, [&](const Circuit& c) {
    if (pi(lab, c).is_identity()) balanced.insert(c);
  });
  return BiasedInstance(lab.n(), std::move(balanced));
}

CyclicLabelling gamma_u(int n) {
  CyclicLabelling lab(n, 0);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      BigInt v = 1;
      v <<= static_cast<unsigned>(CyclicLabelling::edge_index(n, i, j));
      lab.set(i, j, Orientation::Up, v);
    }
  return lab;
}

CyclicLabelling gamma_o(int n) {
  CyclicLabelling lab(n, 0);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      BigInt v = 1;
      v <<= static_cast<unsigned>(j);
      lab.set(i, j, Orientation::Up, v);
    }
  return lab;
}

CyclicLabelling gamma_a(int a, int n) {
  if (a < 0) throw std::invalid_argument("gamma_a needs a >= 0");
  CyclicLabelling lab(n, a);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) lab.set(i, j, Orientation::Up, 1);
  return lab;
}

CyclicLabelling reorient_edge(const CyclicLabelling& lab, Vertex i, Vertex j) {
  CyclicLabelling out = lab;
  const Orientation flipped = lab.orientation(i, j) == Orientation::Up ? Orientation::Down : Orientation::Up;
  out.set(i, j, flipped, (-lab.label(i, j)).value());
  return out;
}

CyclicLabelling scale_vertex(const CyclicLabelling& lab, Vertex v, const CyclicGroupElement& alpha) {
  if (alpha.modulus() != lab.modulus()) throw std::invalid_argument("scale_vertex: modulus mismatch");
  if (v < 1 || v > lab.n()) throw std::invalid_argument("scale_vertex: vertex out of range");
  CyclicLabelling out = lab;
  for (Vertex u = 1; u <= lab.n(); ++u) {
    if (u == v) continue;
    const CyclicGroupElement l = lab.label(u, v);
    const CyclicGroupElement moved = lab.head(u, v) == v ? l + alpha : l - alpha;
    out.set(u, v, lab.orientation(u, v), moved.value());
  }
  return out;
}

CyclicLabelling normalize_first_vertex(const CyclicLabelling& lab) {
  if (lab.n() < 2) throw std::invalid_argument("normalize_first_vertex needs n >= 2");
  CyclicLabelling out = lab;
  for (Vertex i = 1; i <= lab.n(); ++i)
    for (Vertex j = i + 1; j <= lab.n(); ++j)
      if (out.orientation(i, j) == Orientation::Down) out = reorient_edge(out, i, j);
  for (Vertex v = 2; v <= lab.n(); ++v) {
    const CyclicGroupElement l = out.label(1, v);
    if (!l.is_identity()) out = scale_vertex(out, v, -l);
  }
  return out;
}

std::optional<int> recognize_delta_multiples(const BiasedInstance& inst) {
  const int n = inst.n();
  if (n < 3) throw std::invalid_argument("recognize_delta_multiples needs n >= 3");
  // matches[a] for a in {0..n-2}
  std::vector<char> matches(static_cast<std::size_t>(n - 1), 1);
  for_each_circuit(n, SpanningFilter::All, [&](const Circuit& c) {
    const int d = delta(c);
    const bool b = inst.is_balanced(c);
    for (int a = 0; a <= n - 2; ++a)
      if (divides(a, d) != b) matches[static_cast<std::size_t>(a)] = 0;
  });
  if (matches[0]) return 0;
  for (int a = 1; a <= n - 2; ++a)
    if (matches[static_cast<std::size_t>(a)]) return a;
  return std::nullopt;
}

std::string LabellabilityVerdict::to_string() const {
  switch (kind) {
    case Kind::ProvedNotLabellable: return "No";
    case Kind::IsKa: return "IsKa:" + std::to_string(a);
    case Kind::Inconclusive: break;
  }
  return "Inconclusive";
}

bool four_patterns_balanced(const BiasedInstance& inst) {
  const int n = inst.n();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c)
        for (Vertex d = c + 1; d <= n; ++d) {
          if (!inst.is_balanced(Circuit::from_cycle({a, c, b, d}))) return false;  // 1324
          if (!inst.is_balanced(Circuit::from_cycle({a, b, d, c}))) return false;  // 1243
        }
  return true;
}

LabellabilityVerdict check_not_group_labellable(const BiasedInstance& inst) {
  if (inst.n() < 5) throw std::invalid_argument("check_not_group_labellable needs n >= 5");
  if (!four_patterns_balanced(inst)) return {LabellabilityVerdict::Kind::Inconclusive, 0};
  if (auto a = recognize_delta_multiples(inst)) return {LabellabilityVerdict::Kind::IsKa, *a};
  return {LabellabilityVerdict::Kind::ProvedNotLabellable, 0};
}

void write_labelling(std::ostream& out, const CyclicLabelling& lab) {
  out << "cyclic-labelling v1\n";
  out << "n " << lab.n() << '\n';
  out << "modulus " << lab.modulus() << '\n';
  for (Vertex i = 1; i <= lab.n(); ++i)
    for (Vertex j = i + 1; j <= lab.n(); ++j)
      out << i << ' ' << j << ' ' << (lab.orientation(i, j) == Orientation::Up ? "Up" : "Down") << ' '
          << lab.label(i, j).value() << '\n';
  out << "end\n";
}

namespace {

std::int64_t keyed(std::istream& in, int& lineno, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of file, expected '" + key + "'");
  ++lineno;
  std::istringstream ls(line);
  std::string k;
  std::int64_t v;
  std::string rest;
  if (!(ls >> k >> v) || k != key || (ls >> rest)) throw ParseError(lineno, "expected '" + key + " <int>'");
  return v;
}

}  // namespace

CyclicLabelling read_labelling(std::istream& in) {
  int lineno = 0;
  std::string line;
  if (!std::getline(in, line) || line != "cyclic-labelling v1")
    throw ParseError(1, "expected header 'cyclic-labelling v1'");
  lineno = 1;
  const auto n = keyed(in, lineno, "n");
  if (n < 1 || n > kMaxVertex) throw ParseError(lineno, "n out of range");
  const auto modulus = keyed(in, lineno, "modulus");
  if (modulus < 0) throw ParseError(lineno, "negative modulus");
  CyclicLabelling lab(static_cast<int>(n), modulus);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of file, expected an edge line");
      ++lineno;
      std::istringstream ls(line);
      Vertex a, b;
      std::string o, value, rest;
      if (!(ls >> a >> b >> o >> value) || (ls >> rest)) throw ParseError(lineno, "expected 'i j <Up|Down> <value>'");
      if (a != i || b != j)
        throw ParseError(lineno, "expected edge " + std::to_string(i) + " " + std::to_string(j));
      if (o != "Up" && o != "Down") throw ParseError(lineno, "orientation must be Up or Down");
      BigInt v;
      try {
        v = BigInt(value);
      } catch (const std::exception&) {
        throw ParseError(lineno, "malformed label '" + value + "'");
      }
      lab.set(i, j, o == "Up" ? Orientation::Up : Orientation::Down, v);
    }
  if (!std::getline(in, line) || line != "end") throw ParseError(lineno + 1, "expected 'end'");
  return lab;
}

}  // namespace biased
