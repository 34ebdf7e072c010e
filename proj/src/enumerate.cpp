#include "biased/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace biased {

HostGraph HostGraph::complete(int n) {
  if (n < 0 || n > kMaxVertex) throw std::invalid_argument("complete graph order out of range");
  HostGraph g;
  g.order_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) g.adj_[v] = g.all() & ~vertex_bit(v);
  return g;
}

HostGraph HostGraph::complete_bipartite(int a, int b) {
  if (a < 0 || b < 0 || a + b > kMaxVertex) throw std::invalid_argument("bipartite order out of range");
  HostGraph g;
  g.order_ = a + b;
  g.adj_.assign(static_cast<std::size_t>(a + b) + 1, 0);
  VertexMask side_a = 0, side_b = 0;
  for (Vertex v = 1; v <= a; ++v) side_a |= vertex_bit(v);
  for (Vertex v = a + 1; v <= a + b; ++v) side_b |= vertex_bit(v);
  for (Vertex v = 1; v <= a + b; ++v) g.adj_[v] = v <= a ? side_b : side_a;
  return g;
}

VertexMask HostGraph::all() const {
  return order_ == 64 ? ~VertexMask{0} : (VertexMask{1} << order_) - 1;
}

namespace {

// Sequences v1 < (rest) with rest drawn from (v1, n], second < last; visited
// in lexicographic order.
void circuits_of_length(int n, int k, const std::function<void(const Circuit&)>& fn) {
  std::vector<Vertex> seq(static_cast<std::size_t>(k));
  std::function<void(int, VertexMask)> extend = [&](int pos, VertexMask used) {
    if (pos == k) {
      if (seq[1] < seq[static_cast<std::size_t>(k) - 1]) fn(Circuit::from_cycle(seq));
      return;
    }
    for (Vertex v = seq[0] + 1; v <= n; ++v) {
      if (used & vertex_bit(v)) continue;
      // The last vertex must exceed the second.
      if (pos == k - 1 && v < seq[1]) continue;
      seq[static_cast<std::size_t>(pos)] = v;
      extend(pos + 1, used | vertex_bit(v));
    }
  };
  for (Vertex first = 1; first + k - 1 <= n; ++first) {
    seq[0] = first;
    extend(1, vertex_bit(first));
  }
}

}  // namespace

void for_each_circuit(int n, SpanningFilter filter, const std::function<void(const Circuit&)>& fn) {
  if (n < 3) throw std::invalid_argument("enumerate_circuits needs n >= 3");
  if (n > kMaxVertex) throw std::invalid_argument("enumerate_circuits: n too large");
  for (int k = 3; k <= n; ++k) {
    if (filter == SpanningFilter::NonspanningOnly && k == n) continue;
    if (filter == SpanningFilter::SpanningOnly && k != n) continue;
    circuits_of_length(n, k, fn);
  }
}

std::vector<Circuit> enumerate_circuits(int n, SpanningFilter filter) {
  std::vector<Circuit> out;
  for_each_circuit(n, filter, [&](const Circuit& c) { out.push_back(c); });
  return out;
}

std::vector<Circuit> enumerate_circuits(const HostGraph& host) {
  std::vector<Circuit> out;
  std::vector<Vertex> seq;
  std::function<void(VertexMask)> extend = [&](VertexMask used) {
    const Vertex start = seq.front();
    const Vertex last = seq.back();
    VertexMask next = host.neighbours(last);
    if (seq.size() >= 3 && (next & vertex_bit(start)) && seq[1] < last) out.push_back(Circuit::from_cycle(seq));
    while (next) {
      const Vertex v = std::countr_zero(next) + 1;
      next &= next - 1;
      if (v <= start || (used & vertex_bit(v))) continue;
      seq.push_back(v);
      extend(used | vertex_bit(v));
      seq.pop_back();
    }
  };
  for (Vertex s = 1; s <= host.order(); ++s) {
    seq.assign(1, s);
    extend(vertex_bit(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::uint64_t circuit_count(int n) {
  if (n > 20) throw std::invalid_argument("circuit_count: n too large");
  std::uint64_t total = 0;
  for (int k = 3; k <= n; ++k) total += binom(n, k) * (factorial(k - 1) / 2);
  return total;
}

std::uint64_t path_count(int n) {
  if (n > 20) throw std::invalid_argument("path_count: n too large");
  std::uint64_t total = n > 0 ? static_cast<std::uint64_t>(n) : 0;
  for (int i = 2; i <= n; ++i) total += binom(n, i) * (factorial(i) / 2);
  return total;
}

std::uint64_t theta_count(int n) {
  if (n > 14) throw std::invalid_argument("theta_count: n too large");
  // On m vertices: a branch pair, then m-2 labelled internal vertices laid
  // out as three unordered sequences, at most one of them empty.
  std::uint64_t total = 0;
  for (int m = 4; m <= n; ++m) {
    const int k = m - 2;
    total += binom(n, m) * binom(m, 2) * (factorial(k) * (binom(k + 2, 2) - 3) / 6);
  }
  return total;
}

std::uint64_t enumerate_paths(int n, const std::function<void(const PathSeq&)>& sink) {
  if (n < 0 || n > kMaxVertex) throw std::invalid_argument("enumerate_paths: n out of range");
  std::uint64_t count = 0;
  PathSeq p;
  for (Vertex v = 1; v <= n; ++v) {
    ++count;
    if (sink) {
      p.vertices.assign(1, v);
      sink(p);
    }
  }
  for (int len = 2; len <= n; ++len) {
    p.vertices.assign(static_cast<std::size_t>(len), 0);
    std::function<void(int, VertexMask)> extend = [&](int pos, VertexMask used) {
      if (pos == len) {
        if (p.vertices.front() < p.vertices.back()) {
          ++count;
          if (sink) sink(p);
        }
        return;
      }
      for (Vertex v = 1; v <= n; ++v) {
        if (used & vertex_bit(v)) continue;
        p.vertices[static_cast<std::size_t>(pos)] = v;
        extend(pos + 1, used | vertex_bit(v));
      }
    };
    extend(0, 0);
  }
  return count;
}

Circuit circuit_of_paths(const PathSeq& p, const PathSeq& q) {
  std::array<Vertex, kMaxVertex> buf{};
  std::size_t len = 0;
  for (Vertex v : p.vertices) buf[len++] = v;
  for (std::size_t i = q.vertices.size() - 1; i-- > 1;) buf[len++] = q.vertices[i];
  return Circuit::from_cycle(std::span<const Vertex>(buf.data(), len));
}

ThetaSubgraph ThetaSubgraph::from_paths(PathSeq a, PathSeq b, PathSeq c) {
  ThetaSubgraph t;
  t.x = a.front();
  t.y = a.back();
  t.paths = {std::move(a), std::move(b), std::move(c)};
  std::sort(t.paths.begin(), t.paths.end());
  t.circuits[0] = circuit_of_paths(t.paths[1], t.paths[2]);
  t.circuits[1] = circuit_of_paths(t.paths[0], t.paths[2]);
  t.circuits[2] = circuit_of_paths(t.paths[0], t.paths[1]);
  return t;
}

BranchPaths::BranchPaths(const HostGraph& host, Vertex x, Vertex y, VertexMask forbidden) : x_(x), y_(y) {
  if (x >= y) throw std::invalid_argument("BranchPaths needs x < y");
  allowed_ = host.all() & ~forbidden & ~vertex_bit(x) & ~vertex_bit(y);
  PathSeq cur;
  cur.vertices.push_back(x);
  std::function<void(Vertex, VertexMask)> walk = [&](Vertex at, VertexMask used) {
    const VertexMask nb = host.neighbours(at);
    if (nb & vertex_bit(y)) {
      cur.vertices.push_back(y);
      paths_.push_back(cur);
      cur.vertices.pop_back();
    }
    VertexMask next = nb & allowed_ & ~used;
    while (next) {
      const Vertex v = std::countr_zero(next) + 1;
      next &= next - 1;
      cur.vertices.push_back(v);
      walk(v, used | vertex_bit(v));
      cur.vertices.pop_back();
    }
  };
  walk(x, 0);
  std::sort(paths_.begin(), paths_.end());
  internal_.reserve(paths_.size());
  for (std::uint32_t i = 0; i < paths_.size(); ++i) {
    internal_.push_back(paths_[i].internal_mask());
    by_mask_[internal_.back()].push_back(i);
  }
}

void BranchPaths::for_each_triple(const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) const {
  std::vector<std::uint32_t> ks;
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    for (std::size_t j = i + 1; j < paths_.size(); ++j) {
      const VertexMask used = internal_[i] | internal_[j];
      if ((internal_[i] & internal_[j]) != 0) continue;
      ks.clear();
      const VertexMask free = allowed_ & ~used;
      // Walk all submasks of `free`, including the empty one.
      VertexMask sub = free;
      while (true) {
        if (auto it = by_mask_.find(sub); it != by_mask_.end())
          for (std::uint32_t k : it->second)
            if (k > j) ks.push_back(k);
        if (sub == 0) break;
        sub = (sub - 1) & free;
      }
      std::sort(ks.begin(), ks.end());
      for (std::uint32_t k : ks) fn(i, j, k);
    }
  }
}

ThetaSubgraph BranchPaths::theta(std::size_t i, std::size_t j, std::size_t k) const {
  return ThetaSubgraph::from_paths(paths_[i], paths_[j], paths_[k]);
}

void for_each_theta(const HostGraph& host, const std::function<void(const ThetaSubgraph&)>& fn) {
  for (Vertex x = 1; x <= host.order(); ++x)
    for (Vertex y = x + 1; y <= host.order(); ++y) {
      BranchPaths bp(host, x, y);
      bp.for_each_triple([&](std::size_t i, std::size_t j, std::size_t k) { fn(bp.theta(i, j, k)); });
    }
}

void for_each_theta_containing(const HostGraph& host, const Circuit& c,
                               const std::function<void(const ThetaSubgraph&)>& fn) {
  const std::size_t k = c.size();
  const VertexMask on_c = c.vertex_mask();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const std::size_t lo = c[a] < c[b] ? a : b;
      const std::size_t hi = lo == a ? b : a;
      const Vertex x = c[lo], y = c[hi];
      // The two arcs of c from x to y.
      PathSeq arc1, arc2;
      for (std::size_t s = lo;; s = (s + 1) % k) {
        arc1.vertices.push_back(c[s]);
        if (s == hi) break;
      }
      for (std::size_t s = lo;; s = (s + k - 1) % k) {
        arc2.vertices.push_back(c[s]);
        if (s == hi) break;
      }
      const bool chord_on_c = arc1.size() == 2 || arc2.size() == 2;
      BranchPaths bp(host, x, y, on_c);
      for (std::size_t i = 0; i < bp.size(); ++i) {
        if (chord_on_c && bp.path(i).size() == 2) continue;
        fn(ThetaSubgraph::from_paths(arc1, arc2, bp.path(i)));
      }
    }
  }
}

std::vector<ThetaSubgraph> enumerate_thetas(int n, const std::optional<Circuit>& restrict_to) {
  if (n < 4) throw std::invalid_argument("enumerate_thetas needs n >= 4");
  const HostGraph host = HostGraph::complete(n);
  std::vector<ThetaSubgraph> out;
  auto sink = [&](const ThetaSubgraph& t) { out.push_back(t); };
  if (restrict_to) {
    if (restrict_to->max_vertex() > n) throw std::invalid_argument("enumerate_thetas: circuit not in K_n");
    for_each_theta_containing(host, *restrict_to, sink);
    std::sort(out.begin(), out.end(), [](const ThetaSubgraph& a, const ThetaSubgraph& b) {
      return std::tie(a.x, a.y, a.paths) < std::tie(b.x, b.y, b.paths);
    });
  } else {
    for_each_theta(host, sink);
  }
  return out;
}

}  // namespace biased
