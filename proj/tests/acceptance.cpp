// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>
#include <filesystem>

#include "biased/bipartite.hpp"
#include "biased/cli.hpp"
#include "biased/counterexample.hpp"
#include "biased/omega.hpp"
#include "biased/structure_search.hpp"
#include "generators.hpp"

using namespace biased;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

int hardware_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t falling(int n, int k) { return factorial(n) / factorial(n - k); }

std::uint64_t choose(int n, int k) { return falling(n, k) / factorial(k); }

Outcome labellings_match_families() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    o.require(derive_instance(gamma_u(n)) == make_ku(n), "gamma-u n=" + std::to_string(n));
    o.require(derive_instance(gamma_o(n)) == make_ko(n), "gamma-o n=" + std::to_string(n));
  }
  for (int n = 3; n <= 7; ++n)
    for (int a : {0, 1, 2, 3, 5})
      o.require(derive_instance(gamma_a(a, n)) == make_ka(a, n),
                "gamma-a a=" + std::to_string(a) + " n=" + std::to_string(n));
  return o;
}

Outcome path_and_circuit_counts() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    std::uint64_t p = static_cast<std::uint64_t>(n), c = 0;
    for (int k = 2; k <= n; ++k) p += falling(n, k) / 2;
    for (int k = 3; k <= n; ++k) c += choose(n, k) * factorial(k - 1) / 2;
    const std::uint64_t pn = enumerate_paths(n);
    const std::uint64_t cn = enumerate_circuits(n).size();
    const std::string at = " n=" + std::to_string(n);
    o.require(pn == p && path_count(n) == p, "path count" + at);
    o.require(cn == c && circuit_count(n) == c, "circuit count" + at);
    o.require(pn < 2 * factorial(n), "path bound" + at);
    o.require(cn <= 2 * factorial(n - 1), "circuit bound" + at);
  }
  o.require(circuit_count(4) == 7, "c_4 = 7");
  o.require(path_count(3) == 9, "p_3 = 9");
  return o;
}

Outcome families_validate() {
  Outcome o;
  for (int n = 3; n <= 7; ++n) {
    const std::string at = " n=" + std::to_string(n);
    o.require(validate(make_ku(n)).valid, "K^u" + at);
    o.require(validate(make_ko(n)).valid, "K^o" + at);
    for (int a = 0; a <= n - 2; ++a) o.require(validate(make_ka(a, n)).valid, "K^a a=" + std::to_string(a) + at);
  }
  for (int n : {4, 5}) {
    std::vector<ThetaSubgraph> thetas;
    for_each_theta(HostGraph::complete(n), [&](const ThetaSubgraph& t) { thetas.push_back(t); });
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 20; ++trial) {
      const ThetaSubgraph& t = thetas[rng() % thetas.size()];
      const BiasedInstance planted(n, CircuitSet{t.circuits[0], t.circuits[2]});
      ValidateOptions opt;
      opt.max_violations = 1u << 20;
      const auto r = validate(planted, ValidationMode::full(), opt);
      o.require(!r.valid && std::find(r.violations.begin(), r.violations.end(), t) != r.violations.end(),
                "planted theta at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome omega_components() {
  Outcome o;
  const int jobs = hardware_jobs();
  for (int n = 5; n <= 7; ++n)
    o.require(verify_omega_components(n, {jobs, false}), "components n=" + std::to_string(n));
  for (int n : {5, 6}) {
    const OmegaGraph g = build_omega(n, {jobs, false});
    for (auto [i, j] : g.edges)
      o.require(delta(g.vertices[i]) == delta(g.vertices[j]),
                "adjacent pair with different delta at n=" + std::to_string(n));
  }
  return o;
}

Outcome constant_classification() {
  Outcome o;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const int n = 6 + i % 2;
    const BiasedInstance inst = gen::constant_premise_instance(rng, n);
    o.require(validate(inst).valid, "generated instance invalid");
    const auto c = classify_constant(inst);
    o.require(c && c->per_vertex_check, "no constant a for instance " + std::to_string(i));
  }
  return o;
}

Outcome counterexample_n10() {
  Outcome o;
  CounterexampleOptions opt;
  opt.jobs = hardware_jobs();
  const auto r = verify_counterexample_theorem(10, opt);
  o.require(r.rows.size() == 16, "expected 16 subsets Q");
  std::size_t invalid = 0;
  for (const auto& row : r.rows) invalid += !row.valid;
  o.require(invalid == 0, std::to_string(invalid) + " of 16 B_Q fail restricted validation (every Q holding the "
                                                     "partition I={1,2,8,9}; chord {2,3} splits it into balanced "
                                                     "circuits of delta 0 and 6)");
  for (const auto& row : r.rows) {
    if (row.mask == 0)
      o.require(row.verdict.kind == LabellabilityVerdict::Kind::IsKa && row.verdict.a == 6, "Q empty is not K^6(10)");
    else if (row.mask != 15)
      o.require(row.verdict.kind == LabellabilityVerdict::Kind::ProvedNotLabellable,
                "Q=" + std::to_string(row.mask) + " not proved unlabellable");
  }
  o.require(r.proper_count == 14 && r.lower_bound == 4 && r.count_ok, "count inequality");
  o.require(r.ok() == o.pass, "report disagrees with the row checks");
  return o;
}

BiasedInstance expected_for(const Classification& c) {
  const int k = static_cast<int>(c.witness.size());
  switch (c.kind) {
    case Classification::Kind::Ku: return make_ku(k);
    case Classification::Kind::Ko: return make_ko(k);
    default: return make_ka(c.a, k);
  }
}

Outcome search_soundness() {
  Outcome o;
  std::mt19937_64 rng(77);
  int found = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + i % 4;
    const BiasedInstance inst = gen::random_valid_instance(rng, n);
    o.require(validate(inst).valid, "generated instance invalid");
    const int r = 3 + static_cast<int>(rng() % 2), s = 3 + static_cast<int>(rng() % 2);
    const auto c = search_unavoidable(inst, r, s, 4);
    if (c.kind == Classification::Kind::Other) continue;
    ++found;
    o.require(restrict(inst, c.witness) == expected_for(c), "witness fails to restrict: " + c.to_string());
  }
  o.require(found > 0, "no witnesses at all");
  for (int n = 5; n <= 7; ++n) {
    o.require(search_unavoidable(make_ku(n), n, 4, 4).kind == Classification::Kind::Ku, "K^u family");
    o.require(search_unavoidable(make_ko(n), 4, n, 4).kind == Classification::Kind::Ko, "K^o family");
    for (int a = 1; a <= n - 2; ++a) {
      const auto c = search_unavoidable(make_ka(a, n), 4, 4, n - 1);
      o.require(c.kind == Classification::Kind::Ka && restrict(make_ka(a, n), c.witness) == make_ka(c.a, n - 1),
                "K^a family a=" + std::to_string(a));
    }
  }
  return o;
}

bool biclique_consistent(const BipartiteInstance& inst, const Biclique& b) {
  std::vector<Vertex> bs;
  for (Vertex v : b.b_side) bs.push_back(inst.b(v));
  const auto cs = induced_circuits(b.a_side, bs);
  std::size_t balanced = 0;
  for (const Circuit& c : cs) balanced += inst.is_balanced(c);
  return balanced == 0 || balanced == cs.size();
}

void check_biclique_search(Outcome& o, const BipartiteInstance& inst, int max_t, const std::string& what) {
  for (int t = 1; t <= max_t; ++t)
    if (const auto b = find_consistent_biclique(inst, t))
      o.require(static_cast<int>(b->a_side.size()) == t && static_cast<int>(b->b_side.size()) == t &&
                    biclique_consistent(inst, *b),
                what + " t=" + std::to_string(t));
}

BipartiteInstance toggle_hamiltons(std::mt19937_64& rng, BipartiteInstance inst, int attempts) {
  std::vector<Circuit> hams;
  for (const Circuit& c : enumerate_circuits(inst.host()))
    if (static_cast<int>(c.size()) == 2 * std::min(inst.nA(), inst.nB())) hams.push_back(c);
  for (int i = 0; i < attempts; ++i) {
    const Circuit& h = hams[rng() % hams.size()];
    CircuitSet s = inst.balanced();
    if (!s.erase(h)) s.insert(h);
    BipartiteInstance next(inst.nA(), inst.nB(), std::move(s));
    if (validate_bipartite(next, ValidationMode::restricted({h})).valid) inst = std::move(next);
  }
  return inst;
}

std::vector<Circuit> circuits_of(int nA, int nB) { return enumerate_circuits(HostGraph::complete_bipartite(nA, nB)); }

Outcome biclique_soundness() {
  Outcome o;
  // K_{3,3}: every subset of circuits.
  const auto c33 = circuits_of(3, 3);
  for (std::uint32_t mask = 0; mask < (1u << c33.size()); ++mask) {
    CircuitSet s;
    for (std::size_t i = 0; i < c33.size(); ++i)
      if (mask >> i & 1) s.insert(c33[i]);
    const BipartiteInstance inst(3, 3, std::move(s));
    if (validate_bipartite(inst).valid) check_biclique_search(o, inst, 3, "K_{3,3}");
  }
  // K_{4,4}: every Z_2 and Z_3 labelling normalized to 0 on row a1 and column b1,
  // each with Hamilton perturbations.
  std::mt19937_64 rng(44);
  for (std::int64_t m : {2, 3}) {
    std::vector<std::int64_t> labels(16, 0);
    std::uint64_t total = 1;
    for (int i = 0; i < 9; ++i) total *= static_cast<std::uint64_t>(m);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t x = code;
      for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) {
          labels[static_cast<std::size_t>(4 * i + j)] = static_cast<std::int64_t>(x % static_cast<std::uint64_t>(m));
          x /= static_cast<std::uint64_t>(m);
        }
      const BipartiteInstance inst = bipartite_from_labels(4, 4, m, labels);
      check_biclique_search(o, inst, 4, "K_{4,4} labelled");
      if (code % 16 == 0) {
        const BipartiteInstance p = toggle_hamiltons(rng, inst, 6);
        check_biclique_search(o, p, 4, "K_{4,4} perturbed");
      }
    }
  }
  // 100 random valid K_{6,6}.
  for (int i = 0; i < 100; ++i) {
    static const std::int64_t moduli[] = {0, 2, 3, 4, 5, 6};
    const std::int64_t m = moduli[rng() % 6];
    std::vector<std::int64_t> labels(36);
    for (auto& l : labels) l = static_cast<std::int64_t>(rng() % 7) - 3;
    BipartiteInstance inst = bipartite_from_labels(6, 6, m, labels);
    if (i % 2) inst = toggle_hamiltons(rng, std::move(inst), 4);
    check_biclique_search(o, inst, 3, "K_{6,6} random " + std::to_string(i));
  }
  // Equivalence on every valid K_{2,5}.
  const auto c25 = circuits_of(2, 5);
  for (std::uint32_t mask = 0; mask < (1u << c25.size()); ++mask) {
    CircuitSet s;
    for (std::size_t i = 0; i < c25.size(); ++i)
      if (mask >> i & 1) s.insert(c25[i]);
    const BipartiteInstance inst(2, 5, std::move(s));
    if (!validate_bipartite(inst).valid) continue;
    auto bal = [&](int u, int v) { return inst.is_balanced(Circuit::from_cycle({1, inst.b(u), 2, inst.b(v)})); };
    for (int u = 1; u <= 5; ++u)
      for (int v = 1; v <= 5; ++v)
        for (int w = 1; w <= 5; ++w)
          if (u != v && v != w && u != w && bal(u, v) && bal(u, w)) o.require(bal(v, w), "K_{2,5} transitivity");
  }
  // Short-circuit closure on sides <= 4. In a valid instance with all
  // 4-circuits balanced, a shortest unbalanced circuit C would have every
  // shorter circuit balanced; each such C sits in a violating theta.
  for (auto [nA, nB] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}, std::pair{3, 4},
                        std::pair{4, 4}}) {
    const auto cs = circuits_of(nA, nB);
    for (const Circuit& c : cs) {
      if (c.size() == 4) continue;
      CircuitSet shorter;
      for (const Circuit& d : cs)
        if (d.size() < c.size()) shorter.insert(d);
      o.require(!validate_bipartite(BipartiteInstance(nA, nB, std::move(shorter)), ValidationMode::restricted({c})).valid,
                "closure fails for " + bipartite_to_string(nA, c));
    }
  }
  return o;
}

struct Run {
  int code;
  std::string out, err;
  bool operator==(const Run&) const = default;
};

Run cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("biased-acceptance-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  auto path = [&](const std::string& name) { return (dir / name).string(); };

  const std::vector<std::vector<std::string>> gens = {
      {"gen", "--family", "ku", "--n", "6", "--out", path("ku6")},
      {"gen", "--family", "ko", "--n", "7", "--out", path("ko7")},
      {"gen", "--family", "ka", "--a", "3", "--n", "7", "--out", path("ka7")},
      {"gen", "--family", "bq", "--n", "10", "--q-mask", "6", "--out", path("bq10")},
      {"gen", "--family", "gamma-a", "--a", "2", "--n", "6", "--out", path("ga6")},
      {"gen", "--family", "gamma-o", "--n", "5", "--out", path("go5")},
      {"gen", "--family", "bip-all", "--na", "3", "--nb", "4", "--out", path("ball")},
      {"--seed", "17", "gen", "--family", "bip-random", "--na", "4", "--nb", "4", "--modulus", "3", "--out",
       path("brand")},
      {"--seed", "18", "gen", "--family", "bip-random", "--na", "5", "--nb", "5", "--modulus", "0", "--out",
       path("brand5")},
  };
  for (const auto& g : gens) o.require(cli_run(g).code == 0, "fixture generation failed");

  std::vector<std::vector<std::string>> commands = {
      {"gen", "--family", "gamma-u", "--n", "6"},
      {"--seed", "3", "gen", "--family", "bip-random", "--na", "3", "--nb", "5"},
      {"omega", "--n", "6"},
      {"bipartite-search", path("brand"), "--t", "2"},
      {"bipartite-search", path("brand5"), "--t", "2"},
      {"bipartite-search", path("ball"), "--t", "3"},
      {"counterexample", "--n", "10", "--all"},
      {"counterexample", "--n", "10", "--q-mask", "9"},
  };
  for (const char* f : {"ku6", "ko7", "ka7", "ga6", "go5", "ball", "brand", "brand5"})
    commands.push_back({"validate", path(f)});
  for (const char* f : {"ku6", "ko7", "ka7", "bq10", "ga6", "go5"}) {
    commands.push_back({"classify", path(f)});
    commands.push_back({"search", path(f), "--r", "3", "--s", "3", "--t", "4"});
  }
  for (const char* which : {"basic", "paths", "omega", "constant", "theta-counts"})
    commands.push_back({"verify-lemma", which, "--n", "6"});

  for (const auto& cmd : commands) {
    std::string line;
    for (const auto& a : cmd) line += a + ' ';
    const Run first = cli_run(cmd);
    o.require(cli_run(cmd) == first, "repeat differs: " + line);
    for (const char* jobs : {"2", "5"}) {
      std::vector<std::string> with{"--jobs", jobs};
      with.insert(with.end(), cmd.begin(), cmd.end());
      o.require(cli_run(with) == first, "--jobs " + std::string(jobs) + " differs: " + line);
    }
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "labellings derive the canonical families", 30, labellings_match_families},
      {2, "path and circuit counts", 10, path_and_circuit_counts},
      {3, "theta-property validation of families and planted violations", 120, families_validate},
      {4, "Omega components are the delta classes (n=5,6,7)", 1800, omega_components},
      {5, "constant classification on 50 premise instances", 300, constant_classification},
      {6, "B_Q counterexamples at n=10", 3600, counterexample_n10},
      {7, "unavoidable-structure search soundness", 600, search_soundness},
      {8, "consistent biclique search and bipartite properties", 600, biclique_soundness},
      {9, "CLI output deterministic across runs and --jobs", 600, determinism},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "over the time limit";
    }
    all = all && o.pass;
    std::printf("criterion %d: %s  %s (%.1fs, limit %.0fs)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name.c_str(), secs,
                c.limit_seconds, o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
