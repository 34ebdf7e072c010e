#include "biased/counterexample.hpp"

#include <stdexcept>

namespace biased {

std::vector<OrderedPartition> enumerate_partitions(int n) {
  if (n < 10) throw std::invalid_argument("enumerate_partitions needs n >= 10");
  if (n - 8 > 20) throw std::invalid_argument("enumerate_partitions: n too large");
  const int free_count = n - 8;
  std::vector<OrderedPartition> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_count); ++m) {
    OrderedPartition p{n, {}, {}};
    for (Vertex v = 1; v <= n; ++v) {
      bool in_i;
      if (v == 1 || v == 2 || v == n - 2 || v == n - 1)
        in_i = true;
      else if (v == 3 || v == 4 || v == 5 || v == n)
        in_i = false;
      else
        in_i = (m >> (v - 6)) & 1;
      (in_i ? p.I : p.J).push_back(v);
    }
    out.push_back(std::move(p));
  }
  return out;
}

Circuit circuit_cij(const OrderedPartition& p) {
  std::vector<Vertex> seq(p.I);
  seq.insert(seq.end(), p.J.begin(), p.J.end());
  return Circuit::from_cycle(seq);
}

BiasedInstance build_bq(const BiasedInstance& base, const std::vector<OrderedPartition>& partitions,
                        std::uint64_t q_mask) {
  if (partitions.size() < 64 && (q_mask >> partitions.size()) != 0)
    throw std::invalid_argument("build_bq: mask names a partition that does not exist");
  CircuitSet balanced = base.balanced();
  for (std::size_t k = 0; k < partitions.size() && k < 64; ++k)
    if ((q_mask >> k) & 1) balanced.erase(circuit_cij(partitions[k]));
  return BiasedInstance(base.n(), std::move(balanced));
}

BiasedInstance build_bq(int n, std::uint64_t q_mask) {
  return build_bq(make_ka(n - 4, n), enumerate_partitions(n), q_mask);
}

std::string QReport::line() const {
  return std::to_string(mask) + " valid=" + (valid ? "true" : "false") + " labellable=" + verdict.to_string();
}

bool CounterexampleReport::ok() const {
  if (!count_ok) return false;
  const std::uint64_t full = (std::uint64_t{1} << (std::uint64_t{1} << (n - 8))) - 1;
  for (const QReport& r : rows) {
    if (!r.valid) return false;
    if (r.mask == 0) {
      if (r.verdict.kind != LabellabilityVerdict::Kind::IsKa || r.verdict.a != n - 4) return false;
    } else if (r.mask != full && r.verdict.kind != LabellabilityVerdict::Kind::ProvedNotLabellable) {
      return false;
    }
  }
  return true;
}

CounterexampleReport verify_counterexample_theorem(int n, const CounterexampleOptions& options) {
  if (n < 10) throw std::invalid_argument("verify_counterexample_theorem needs n >= 10");
  if (n > 10 && !options.allow_large) throw std::invalid_argument("n > 10 needs an explicit override");
  if (n > 13) throw std::invalid_argument("verify_counterexample_theorem supports n <= 13");

  const auto partitions = enumerate_partitions(n);
  std::vector<Circuit> hamiltons;
  for (const auto& p : partitions) hamiltons.push_back(circuit_cij(p));
  const BiasedInstance base = make_ka(n - 4, n);

  CounterexampleReport report;
  report.n = n;
  const unsigned p_size = static_cast<unsigned>(partitions.size());
  report.proper_count = (BigInt(1) << p_size) - 2;
  report.lower_bound = BigInt(1) << (1u << (n - 9));
  report.count_ok = report.proper_count >= report.lower_bound;

  std::vector<std::uint64_t> masks;
  if (options.only_mask) {
    if (p_size < 64 && (*options.only_mask >> p_size) != 0) throw std::invalid_argument("Q mask out of range");
    masks.push_back(*options.only_mask);
  } else {
    if (p_size > 16) throw std::invalid_argument("too many subsets Q; pass a single mask");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p_size); ++m) masks.push_back(m);
  }

  // B_Q differs from the valid base only on the C_{I,J}, so checking the
  // Theta-subgraphs through those circuits suffices.
  ValidateOptions vopt;
  vopt.jobs = options.jobs;
  vopt.max_violations = 1;
  for (std::uint64_t m : masks) {
    const BiasedInstance inst = build_bq(base, partitions, m);
    QReport row;
    row.mask = m;
    row.valid = validate(inst, ValidationMode::restricted(hamiltons), vopt).valid;
    row.verdict = check_not_group_labellable(inst);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace biased
