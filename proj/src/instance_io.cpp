#include <istream>
#include <ostream>
#include <sstream>

#include "biased/instance.hpp"
#include "biased/parse_error.hpp"
#include "text_io.hpp"

namespace biased {

using namespace detail;

void write_instance(std::ostream& out, const BiasedInstance& inst) {
  const auto circuits = inst.sorted_balanced();
  out << "biased-clique v1\n";
  out << "n " << inst.n() << '\n';
  out << "balanced " << circuits.size() << '\n';
  for (const Circuit& c : circuits) out << c.to_string() << '\n';
  out << "end\n";
}

namespace {

// Strict single-space separated canonical circuit.
Circuit parse_canonical(const std::string& line, int lineno) {
  std::vector<Vertex> seq;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t sp = line.find(' ', pos);
    const std::string tok = line.substr(pos, sp == std::string::npos ? std::string::npos : sp - pos);
    seq.push_back(parse_int(tok, lineno));
    if (sp == std::string::npos) break;
    pos = sp + 1;
  }
  Circuit c;
  try {
    c = Circuit::from_cycle(seq);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  if (c.vertices() != seq) throw ParseError(lineno, "circuit not in canonical ordering: '" + line + "'");
  return c;
}

}  // namespace

BiasedInstance read_instance(std::istream& in) {
  LineReader r(in);
  if (r.next("header") != "biased-clique v1") throw ParseError(r.line(), "expected header 'biased-clique v1'");
  const int n = keyed_int(r, "n");
  if (n < 0 || n > kMaxVertex) throw ParseError(r.line(), "n out of range");
  const int count = keyed_int(r, "balanced");
  if (count < 0) throw ParseError(r.line(), "negative circuit count");
  CircuitSet balanced;
  Circuit prev;
  for (int i = 0; i < count; ++i) {
    const std::string line = r.next("a circuit");
    const Circuit c = parse_canonical(line, r.line());
    if (c.max_vertex() > n) throw ParseError(r.line(), "circuit uses a vertex above n");
    if (!prev.empty() && !(prev < c)) throw ParseError(r.line(), "circuits not sorted by (length, lexicographic)");
    balanced.insert(c);
    prev = c;
  }
  if (r.next("'end'") != "end") throw ParseError(r.line(), "expected 'end'");
  return BiasedInstance(n, std::move(balanced));
}

}  // namespace biased
