#include "flagcoh/cli.hpp"

#include <optional>

#include "CLI11.hpp"

#include "flagcoh/chern.hpp"
#include "flagcoh/error.hpp"
#include "flagcoh/report.hpp"

namespace flagcoh {

namespace {

enum class Format { text, json, latex };

struct Settings {
  bool json = false;
  bool latex = false;
  unsigned long long weyl_cap = kDefaultWeylCap;
  std::optional<unsigned> max_degree;
  bool include_trivial = false;
  bool rank2 = false;
  std::string spec;

  Format format() const { return json ? Format::json : latex ? Format::latex : Format::text; }
  RingOptions ring_options() const {
    RingOptions o;
    o.weyl_cap = weyl_cap;
    return o;
  }
};

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Recomputes the Betti numbers by length counting and checks the structural
// invariants; any disagreement is an internal error.
void cross_check(const CohomologyRing& ring, unsigned long long cap) {
  const auto oracle = betti_oracle(ring.parabolic, cap);
  const std::vector<long long> computed(ring.betti.begin(), ring.betti.end());
  if (oracle != computed) throw ConsistencyError("Betti numbers disagree with the Poincare series quotient for " +
                                                 ring.parabolic.label());
  const auto violations = structural_violations(ring);
  if (!violations.empty()) throw ConsistencyError(ring.parabolic.label() + ": " + violations.front());
}

int cmd_ring(const Settings& s, std::ostream& out) {
  const ParabolicSpec p = parse_parabolic(s.spec);
  const CohomologyRing ring = parabolic_ring(p, s.ring_options());
  cross_check(ring, s.weyl_cap);
  switch (s.format()) {
    case Format::json: emit_json(out, ring_to_json(ring)); break;
    case Format::latex: out << ring_to_latex(ring); break;
    case Format::text: out << ring_to_text(ring); break;
  }
  return kExitOk;
}

ChernReport build_chern(const Settings& s) {
  const ParabolicSpec p = parse_parabolic(s.spec);
  const CohomologyRing ring = parabolic_ring(p, s.ring_options());
  cross_check(ring, s.weyl_cap);
  RelationOptions ro;
  ro.max_degree = s.max_degree;
  ro.include_trivial = s.include_trivial;
  ChernReport report = chern_report(ring, ro);
  for (const auto& space : report.relations)
    for (const auto& rel : space.relations)
      if (!is_zero(evaluate(rel, report, ring)))
        throw ConsistencyError("relation " + to_string(rel) + " does not vanish");
  return report;
}

int cmd_chern(const Settings& s, std::ostream& out) {
  const ChernReport report = build_chern(s);
  switch (s.format()) {
    case Format::json: emit_json(out, chern_to_json(report)); break;
    case Format::latex: out << chern_to_latex(report); break;
    case Format::text: out << chern_to_text(report); break;
  }
  return kExitOk;
}

int cmd_relations(const Settings& s, std::ostream& out) {
  const ChernReport report = build_chern(s);
  switch (s.format()) {
    case Format::json: {
      Json j = chern_to_json(report);
      Json slim;
      slim["spec"] = j["spec"];
      slim["dimension"] = j["dimension"];
      slim["relations"] = j["relations"];
      emit_json(out, slim);
      break;
    }
    case Format::latex: out << chern_to_latex(report); break;
    case Format::text: out << relations_to_text(report); break;
  }
  return kExitOk;
}

int cmd_delta(const Settings& s, std::ostream& out) {
  const ParabolicSpec p = parse_parabolic(s.spec);
  const auto cls = classify_roots(p);
  for (const auto& row : delta_pairing_table(p)) {
    const bool levi = std::find(cls.levi.begin(), cls.levi.end(), row.root) != cls.levi.end();
    if ((row.value == 0) != levi) throw ConsistencyError("delta pairing vanishes off the Levi roots");
  }
  if (s.format() == Format::json) emit_json(out, delta_to_json(p));
  else out << delta_to_text(p);
  return kExitOk;
}

int cmd_filtration(const Settings& s, std::ostream& out) {
  const ParabolicSpec p = parse_parabolic(s.spec);
  if (s.format() == Format::json) emit_json(out, filtration_to_json(p));
  else out << filtration_to_text(p);
  return kExitOk;
}

int cmd_table(const Settings& s, std::ostream& out, std::ostream& err) {
  if (!s.rank2) {
    err << "error: table requires --rank2\n";
    return kExitUsage;
  }
  const auto rings = rank2_rings(s.ring_options());
  for (const auto& ring : rings) cross_check(ring, s.weyl_cap);
  switch (s.format()) {
    case Format::json: emit_json(out, rank2_table_json(rings)); break;
    case Format::latex: out << rank2_table_latex(rings); break;
    case Format::text: out << rank2_table_text(rings); break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Rational cohomology and Chern class relations of G/P"};
  app.name("flagcoh");
  app.require_subcommand(1);
  auto* json = app.add_flag("--json", s.json, "Emit JSON");
  auto* latex = app.add_flag("--latex", s.latex, "Emit LaTeX");
  json->excludes(latex);
  app.add_option("--weyl-cap", s.weyl_cap, "Largest Weyl group order to enumerate")
      ->check(CLI::PositiveNumber);

  const char* spec_help = "Parabolic spec such as A2[crossed=1]";
  auto* ring = app.add_subcommand("ring", "Betti numbers, graded bases and Groebner data");
  ring->add_option("spec", s.spec, spec_help)->required();
  auto* chern = app.add_subcommand("chern", "Chern classes of the tangent bundle");
  chern->add_option("spec", s.spec, spec_help)->required();
  chern->add_option("--max-degree", s.max_degree, "Highest weighted degree searched for relations");
  auto* relations = app.add_subcommand("relations", "Polynomial relations among Chern classes");
  relations->add_option("spec", s.spec, spec_help)->required();
  relations->add_option("--max-degree", s.max_degree, "Highest weighted degree searched");
  relations->add_flag("--include-trivial", s.include_trivial, "List degrees above the dimension");
  auto* delta = app.add_subcommand("lemma-delta", "Pairings of delta with every root");
  delta->add_option("spec", s.spec, spec_help)->required();
  auto* filtration = app.add_subcommand("filtration", "Ranks of the filtration of g/p");
  filtration->add_option("spec", s.spec, spec_help)->required();
  auto* table = app.add_subcommand("table", "Cohomology table of rank-2 flag varieties");
  table->add_flag("--rank2", s.rank2, "All eight rank-2 cases");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (ring->parsed()) return cmd_ring(s, out);
    if (chern->parsed()) return cmd_chern(s, out);
    if (relations->parsed()) return cmd_relations(s, out);
    if (delta->parsed()) return cmd_delta(s, out);
    if (filtration->parsed()) return cmd_filtration(s, out);
    if (table->parsed()) return cmd_table(s, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace flagcoh
