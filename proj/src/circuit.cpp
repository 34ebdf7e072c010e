#include "biased/circuit.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace biased {

Circuit Circuit::from_cycle(std::span<const Vertex> seq) {
  const std::size_t k = seq.size();
  if (k < 3) throw std::invalid_argument("circuit needs at least 3 vertices");
  if (k > static_cast<std::size_t>(kMaxVertex)) throw std::invalid_argument("circuit too long");
  VertexMask seen = 0;
  std::size_t at_min = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = seq[i];
    if (v < 1 || v > kMaxVertex)
      throw std::invalid_argument("circuit vertex out of range: " + std::to_string(v));
    if (seen & vertex_bit(v))
      throw std::invalid_argument("repeated vertex in circuit: " + std::to_string(v));
    seen |= vertex_bit(v);
    if (v < seq[at_min]) at_min = i;
  }

  const Vertex next = seq[(at_min + 1) % k];
  const Vertex prev = seq[(at_min + k - 1) % k];
  const bool forward = next < prev;

  Circuit c;
  c.size_ = static_cast<std::uint8_t>(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = forward ? (at_min + i) % k : (at_min + k - i) % k;
    c.v_[i] = static_cast<std::uint8_t>(seq[j]);
  }
  return c;
}

VertexMask Circuit::vertex_mask() const {
  VertexMask m = 0;
  for (std::size_t i = 0; i < size_; ++i) m |= vertex_bit(v_[i]);
  return m;
}

Vertex Circuit::max_vertex() const {
  return *std::max_element(v_.begin(), v_.begin() + size_);
}

std::string Circuit::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ' ';
    s += std::to_string(v_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Circuit& a, const Circuit& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.begin() + a.size_,
                                                b.v_.begin(), b.v_.begin() + b.size_);
}

std::ostream& operator<<(std::ostream& os, const Circuit& c) { return os << c.to_string(); }

std::size_t CircuitHash::operator()(const Circuit& c) const noexcept {
  // FNV-1a over the used bytes.
  std::uint64_t h = 1469598103934665603ULL ^ c.size_;
  for (std::size_t i = 0; i < c.size_; ++i) {
    h ^= c.v_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::vector<Vertex> seq;
  Vertex v;
  while (in >> v) seq.push_back(v);
  if (!in.eof()) throw std::invalid_argument("malformed circuit: '" + text + "'");
  return Circuit::from_cycle(seq);
}

int delta(const Circuit& c) {
  const std::size_t k = c.size();
  int d = 0;
  for (std::size_t i = 0; i < k; ++i) d += c[(i + 1) % k] > c[i] ? 1 : -1;
  return d < 0 ? -d : d;
}

VertexMask PathSeq::vertex_mask() const {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= vertex_bit(v);
  return m;
}

VertexMask PathSeq::internal_mask() const {
  VertexMask m = 0;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) m |= vertex_bit(vertices[i]);
  return m;
}

int path_delta(const PathSeq& p) {
  int d = 0;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) d += p.vertices[i] > p.vertices[i - 1] ? 1 : -1;
  return d;
}

bool is_oscillating(const Circuit& c) {
  const std::size_t k = c.size();
  if (k % 2) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex prev = c[(i + k - 1) % k], cur = c[i], next = c[(i + 1) % k];
    const bool low = cur < prev && cur < next;
    const bool high = cur > prev && cur > next;
    if (!low && !high) return false;
  }
  return true;
}

FourPattern classify_four_circuit(const Circuit& c) {
  if (c.size() != 4) throw std::invalid_argument("classify_four_circuit needs a 4-circuit");
  const Vertex v1 = c[0], v2 = c[1], v3 = c[2], v4 = c[3];
  if (v1 < v3 && v3 < v2 && v2 < v4) return FourPattern::C1324;
  if (v1 < v2 && v2 < v4 && v4 < v3) return FourPattern::C1243;
  return FourPattern::Other;
}

bool is_four_pattern(const Circuit& c) {
  return c.size() == 4 && classify_four_circuit(c) != FourPattern::Other;
}

bool similar(const Circuit& a, const Circuit& b) {
  if (a.size() != b.size()) throw std::invalid_argument("similar: circuits of different length");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
  return true;
}

Circuit relabel_sorted(const Circuit& pattern, std::span<const Vertex> labels) {
  Circuit out;
  out.size_ = pattern.size_;
  for (std::size_t i = 0; i < pattern.size_; ++i) {
    const auto idx = static_cast<std::size_t>(pattern.v_[i] - 1);
    if (idx >= labels.size()) throw std::invalid_argument("relabel_sorted: pattern exceeds label set");
    out.v_[i] = static_cast<std::uint8_t>(labels[idx]);
  }
  return out;
}

Circuit four_circuit_on(std::span<const Vertex> quad, FourPattern pattern) {
  if (quad.size() != 4) throw std::invalid_argument("four_circuit_on needs 4 vertices");
  std::array<Vertex, 4> q{quad[0], quad[1], quad[2], quad[3]};
  std::sort(q.begin(), q.end());
  switch (pattern) {
    case FourPattern::C1324: return Circuit::from_cycle({q[0], q[2], q[1], q[3]});
    case FourPattern::C1243: return Circuit::from_cycle({q[0], q[1], q[3], q[2]});
    case FourPattern::Other: break;
  }
  return Circuit::from_cycle({q[0], q[1], q[2], q[3]});
}

}  // namespace biased
