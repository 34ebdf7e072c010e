#include "biased/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "biased/bipartite.hpp"
#include "biased/counterexample.hpp"
#include "biased/instance.hpp"
#include "biased/labelling.hpp"
#include "biased/omega.hpp"
#include "biased/parse_error.hpp"
#include "biased/structure_search.hpp"

namespace biased::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

/// Input problem reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::optional<BiasedInstance> clique;
  std::optional<BipartiteInstance> biclique;
};

Loaded load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::string header;
  std::getline(in, header);
  in.clear();
  in.seekg(0);
  Loaded out;
  try {
    if (header == "biased-clique v1")
      out.clique = read_instance(in);
    else if (header == "cyclic-labelling v1")
      out.clique = derive_instance(read_labelling(in));
    else if (header == "biased-biclique v1")
      out.biclique = read_bipartite(in);
    else
      throw ParseError(1, "unknown header '" + header + "'");
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  return out;
}

BiasedInstance load_clique(const std::string& path) {
  auto l = load(path);
  if (!l.clique) throw InputError(path + ": expected a clique instance or labelling");
  return *l.clique;
}

std::string join(const std::vector<Vertex>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void print_report(std::ostream& out, const ValidationReport& r, int nA = 0) {
  out << "valid=" << (r.valid ? "true" : "false") << " checked=" << r.checked_count
      << " violations=" << r.violation_count << '\n';
  for (const ThetaSubgraph& t : r.violations) {
    out << "violation";
    for (const Circuit& c : t.circuits) out << " (" << (nA ? bipartite_to_string(nA, c) : c.to_string()) << ')';
    out << '\n';
  }
}

struct Options {
  int jobs = 1;
  std::uint64_t seed = kDefaultSeed;

  // gen
  std::string family;
  int n = 0, a = 0, na = 0, nb = 0;
  std::int64_t modulus = 0;
  std::uint64_t q_mask = 0;
  std::string out_path;

  std::string file;
  bool allow_large = false;
  int r = 4, s = 4, t = 4;
  bool all = false;
  std::optional<std::uint64_t> q_mask_opt;
  std::string lemma;
};

int cmd_gen(const Options& o, std::ostream& out) {
  std::ostringstream text;
  const std::string& f = o.family;
  if (f == "ku" || f == "ko" || f == "ka" || f == "bq") {
    BiasedInstance inst = f == "ku"   ? make_ku(o.n)
                          : f == "ko" ? make_ko(o.n)
                          : f == "ka" ? make_ka(o.a, o.n)
                                      : build_bq(o.n, o.q_mask);
    write_instance(text, inst);
  } else if (f == "gamma-u" || f == "gamma-o" || f == "gamma-a") {
    write_labelling(text, f == "gamma-u" ? gamma_u(o.n) : f == "gamma-o" ? gamma_o(o.n) : gamma_a(o.a, o.n));
  } else if (f == "bip-all" || f == "bip-none") {
    write_bipartite(text, f == "bip-all" ? bipartite_all(o.na, o.nb) : bipartite_none(o.na, o.nb));
  } else if (f == "bip-random") {
    std::mt19937_64 rng(o.seed);
    std::vector<std::int64_t> labels(static_cast<std::size_t>(o.na) * static_cast<std::size_t>(o.nb));
    for (auto& l : labels)
      l = o.modulus > 0 ? static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(o.modulus))
                        : static_cast<std::int64_t>(rng() % 7) - 3;
    write_bipartite(text, bipartite_from_labels(o.na, o.nb, o.modulus, labels));
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + f + "'");
  }
  if (o.out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file || !(file << text.str())) throw InputError(o.out_path + ": cannot write");
  }
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto l = load(o.file);
  ValidateOptions vopt;
  vopt.jobs = o.jobs;
  vopt.allow_large_full = o.allow_large;
  ValidationReport r;
  if (l.biclique) {
    r = validate_bipartite(*l.biclique, ValidationMode::full(), vopt);
    print_report(out, r, l.biclique->nA());
  } else {
    r = validate(*l.clique, ValidationMode::full(), vopt);
    print_report(out, r);
  }
  return r.valid ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const BiasedInstance inst = load_clique(o.file);
  const auto rec = recognize_delta_multiples(inst);
  out << "delta-multiples=" << (rec ? std::to_string(*rec) : "none") << '\n';
  if (inst.n() < 5) {
    out << "labellable=n/a\nconstant=n/a\n";
    return 0;
  }
  out << "labellable=" << check_not_group_labellable(inst).to_string() << '\n';
  if (auto c = classify_constant(inst))
    out << "constant=" << c->a << " per-vertex=" << (c->per_vertex_check ? "true" : "false") << '\n';
  else
    out << "constant=none\n";
  return 0;
}

int cmd_search(const Options& o, std::ostream& out) {
  const Classification c = search_unavoidable(load_clique(o.file), o.r, o.s, o.t);
  out << c.to_string() << '\n' << "certificate: " << c.certificate << '\n';
  return 0;
}

int cmd_omega(const Options& o, std::ostream& out) {
  OmegaOptions oopt{o.jobs, o.allow_large};
  const OmegaGraph omega = build_omega(o.n, oopt);
  out << "vertices=" << omega.vertices.size() << " edges=" << omega.edges.size()
      << " components=" << omega.component_count << '\n';
  std::map<int, std::pair<std::size_t, std::set<std::uint32_t>>> by_delta;
  for (std::size_t i = 0; i < omega.vertices.size(); ++i) {
    auto& e = by_delta[delta(omega.vertices[i])];
    ++e.first;
    e.second.insert(omega.component[i]);
  }
  for (const auto& [d, e] : by_delta) {
    out << "delta=" << d << ": " << e.first << " circuits in component";
    for (auto id : e.second) out << ' ' << id;
    out << '\n';
  }
  const bool ok = components_match_delta(omega);
  out << "components-match-delta=" << (ok ? "true" : "false") << '\n';
  return ok ? 0 : 1;
}

int cmd_bipartite_search(const Options& o, std::ostream& out) {
  auto l = load(o.file);
  if (!l.biclique) throw InputError(o.file + ": expected a biclique instance");
  const auto found = find_consistent_biclique(*l.biclique, o.t);
  if (!found) {
    out << "biclique=none\n";
    return 0;
  }
  out << "biclique a=" << join(found->a_side) << " b=" << join(found->b_side) << '\n';
  return 0;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  if (o.all == o.q_mask_opt.has_value()) throw CLI::ValidationError("counterexample", "give exactly one of --q-mask, --all");
  CounterexampleOptions copt;
  copt.jobs = o.jobs;
  copt.allow_large = o.allow_large;
  copt.only_mask = o.q_mask_opt;
  const auto report = verify_counterexample_theorem(o.n, copt);
  for (const QReport& row : report.rows) out << row.line() << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_verify_lemma(const Options& o, std::ostream& out) {
  const int n = o.n;
  bool ok = true;
  auto line = [&](const std::string& what, bool pass) {
    out << what << ' ' << (pass ? "ok" : "FAILED") << '\n';
    ok = ok && pass;
  };
  if (o.lemma == "basic") {
    line("gamma-u n=" + std::to_string(n), derive_instance(gamma_u(n)) == make_ku(n));
    line("gamma-o n=" + std::to_string(n), derive_instance(gamma_o(n)) == make_ko(n));
    for (int a = 0; a <= std::max(0, n - 2); ++a)
      line("gamma-a a=" + std::to_string(a) + " n=" + std::to_string(n), derive_instance(gamma_a(a, n)) == make_ka(a, n));
  } else if (o.lemma == "paths") {
    const std::uint64_t p = enumerate_paths(n);
    const std::uint64_t c = enumerate_circuits(n).size();
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    line("paths n=" + std::to_string(n) + " count=" + std::to_string(p), p == path_count(n) && p < 2 * fact);
    line("circuits n=" + std::to_string(n) + " count=" + std::to_string(c),
         c == circuit_count(n) && (n < 1 || c <= 2 * (fact / static_cast<std::uint64_t>(n))));
  } else if (o.lemma == "omega") {
    line("omega-components n=" + std::to_string(n), verify_omega_components(n, {o.jobs, o.allow_large}));
  } else if (o.lemma == "constant") {
    for (int a = 0; a <= n - 2; ++a) {
      const auto c = classify_constant(make_ka(a, n));
      line("constant a=" + std::to_string(a) + " n=" + std::to_string(n),
           c && c->per_vertex_check && make_ka(c->a, n - 1) == make_ka(a, n - 1));
    }
  } else if (o.lemma == "theta-counts") {
    std::uint64_t count = 0;
    for_each_theta(HostGraph::complete(n), [&](const ThetaSubgraph&) { ++count; });
    line("thetas n=" + std::to_string(n) + " count=" + std::to_string(count), count == theta_count(n));
  } else {
    throw CLI::ValidationError("verify-lemma", "unknown lemma '" + o.lemma + "'");
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biased complete graphs: generation, validation and structure search", "biased-clique"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for randomized generators");

  auto* gen = app.add_subcommand("gen", "Write a generated instance, labelling or biclique");
  gen->add_option("--family", o.family,
                  "ku|ko|ka|bq|gamma-u|gamma-o|gamma-a|bip-all|bip-none|bip-random")
      ->required();
  gen->add_option("--n", o.n, "Order of the clique");
  gen->add_option("--a", o.a, "Parameter a");
  gen->add_option("--q-mask", o.q_mask, "Subset Q of partitions, as a bit mask");
  gen->add_option("--na", o.na, "Size of side A");
  gen->add_option("--nb", o.nb, "Size of side B");
  gen->add_option("--modulus", o.modulus, "Modulus of random labels (0 for integers)");
  gen->add_option("--out", o.out_path, "Output file (default standard output)");

  auto* val = app.add_subcommand("validate", "Check the theta property");
  val->add_option("file", o.file)->required();
  val->add_flag("--allow-large", o.allow_large, "Permit full validation for n >= 9");

  auto* cls = app.add_subcommand("classify", "Delta-multiple recognition, labellability and constant classification");
  cls->add_option("file", o.file)->required();

  auto* search = app.add_subcommand("search", "Look for K^u(r), K^o(s) or K^a(t)");
  search->add_option("file", o.file)->required();
  search->add_option("--r", o.r)->check(CLI::PositiveNumber);
  search->add_option("--s", o.s)->check(CLI::PositiveNumber);
  search->add_option("--t", o.t)->check(CLI::Range(4, kMaxVertex));

  auto* omega = app.add_subcommand("omega", "Components of the Omega graph");
  omega->add_option("--n", o.n)->required();
  omega->add_flag("--allow-large", o.allow_large);

  auto* bip = app.add_subcommand("bipartite-search", "Find a consistent K_{t,t}");
  bip->add_option("file", o.file)->required();
  bip->add_option("--t", o.t)->check(CLI::PositiveNumber);

  auto* cex = app.add_subcommand("counterexample", "Check the perturbed instances B_Q");
  cex->add_option("--n", o.n)->default_val(10);
  cex->add_option("--q-mask", o.q_mask_opt);
  cex->add_flag("--all", o.all);
  cex->add_flag("--allow-large", o.allow_large);

  auto* lemma = app.add_subcommand("verify-lemma", "Exact checks at a given order");
  lemma->add_option("which", o.lemma, "basic|paths|omega|constant|theta-counts")->required();
  lemma->add_option("--n", o.n)->required();
  lemma->add_flag("--allow-large", o.allow_large);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (val->parsed()) return cmd_validate(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (omega->parsed()) return cmd_omega(o, out);
    if (bip->parsed()) return cmd_bipartite_search(o, out);
    if (cex->parsed()) return cmd_counterexample(o, out);
    if (lemma->parsed()) return cmd_verify_lemma(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace biased::cli
