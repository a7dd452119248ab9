#include "flagcoh/report.hpp"

#include <numeric>
#include <sstream>

#include "flagcoh/error.hpp"

namespace flagcoh {

std::string rational_string(const Rational& q) { return q.get_str(); }

std::string weight_string(const Vector& v) { return to_string(Polynomial::linear(v)); }

namespace {

std::string node_char(const ParabolicSpec& p, std::size_t i) { return p.is_crossed(i) ? "x" : "o"; }

std::string bond(const RootSystem& rs, std::size_t i, std::size_t j) {
  const int m = rs.cartan[i][j] * rs.cartan[j][i];
  if (m == 1) return "-";
  const bool left_long = rs.symmetrizer[i] > rs.symmetrizer[j];
  if (m == 2) return left_long ? "=>" : "<=";
  return left_long ? "=>>" : "<<=";
}

Json rational_array(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_string(x));
  return a;
}

Json crossed_json(const ParabolicSpec& p) {
  Json a = Json::array();
  for (auto c : p.crossed) a.push_back(c + 1);
  return a;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

std::string root_string(const RootVector& r) { return to_string(Polynomial::linear(r)); }

std::string group_label(const RootSystem& rs) { return rs.name(); }

}  // namespace

std::string dynkin_diagram(const ParabolicSpec& p) {
  const RootSystem& rs = p.root_system;
  const std::size_t n = rs.rank;
  if (rs.type == DynkinType::D) {
    std::string s;
    for (std::size_t i = 0; i + 2 < n; ++i) s += (i ? "-" : "") + node_char(p, i);
    return s + "<" + node_char(p, n - 2) + "," + node_char(p, n - 1) + ">";
  }
  std::string s = node_char(p, 0);
  for (std::size_t i = 1; i < n; ++i) s += bond(rs, i - 1, i) + node_char(p, i);
  return s;
}

std::string dynkin_diagram_latex(const ParabolicSpec& p) {
  const std::string plain = dynkin_diagram(p);
  std::string s;
  for (std::size_t i = 0; i < plain.size(); ++i) {
    auto starts = [&](const char* token) { return plain.compare(i, std::char_traits<char>::length(token), token) == 0; };
    if (starts("=>>")) { s += " \\Rrightarrow "; i += 2; }
    else if (starts("<<=")) { s += " \\Lleftarrow "; i += 2; }
    else if (starts("=>")) { s += " \\Rightarrow "; i += 1; }
    else if (starts("<=")) { s += " \\Leftarrow "; i += 1; }
    else if (plain[i] == 'x') s += "\\times";
    else if (plain[i] == 'o') s += "\\bullet";
    else if (plain[i] == '-') s += " - ";
    else if (plain[i] == '<') s += " \\langle ";
    else if (plain[i] == '>') s += " \\rangle";
    else s += plain[i];
  }
  return "$" + s + "$";
}

Json ring_to_json(const CohomologyRing& ring) {
  const auto& p = ring.parabolic;
  Json j;
  j["spec"] = p.label();
  j["type"] = p.root_system.type_label;
  j["rank"] = p.root_system.rank;
  j["crossed"] = crossed_json(p);
  j["dimension"] = ring.dim;
  j["betti"] = ring.betti;
  j["euler_characteristic"] = std::accumulate(ring.betti.begin(), ring.betti.end(), std::size_t{0});
  Json basis = Json::array();
  for (std::size_t d = 0; d <= ring.dim; ++d) {
    Json row;
    row["degree"] = d;
    row["cohomological_degree"] = 2 * d;
    Json elems = Json::array();
    for (const auto& b : ring.graded_basis[d]) elems.push_back(to_string(b));
    row["elements"] = std::move(elems);
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  Json gb;
  gb["order"] = ring.gb().order_tag;
  Json lts = Json::array();
  for (const auto& m : ring.gb().leading_monomials()) lts.push_back(to_string(m, p.root_system.rank));
  gb["leading_terms"] = std::move(lts);
  Json gens = Json::array();
  for (const auto& g : ring.gb().generators) gens.push_back(to_string(g));
  gb["generators"] = std::move(gens);
  j["groebner"] = std::move(gb);
  Json inv = Json::array();
  for (const auto& f : ring.borel->invariants) inv.push_back(to_string(f));
  j["invariants"] = std::move(inv);
  return j;
}

RingSummary ring_summary_from_json(const Json& j) {
  RingSummary s;
  s.spec = j.at("spec").get<std::string>();
  s.type = j.at("type").get<std::string>();
  s.rank = j.at("rank").get<std::size_t>();
  s.crossed = j.at("crossed").get<std::vector<std::size_t>>();
  s.dimension = j.at("dimension").get<std::size_t>();
  s.betti = j.at("betti").get<std::vector<std::size_t>>();
  s.euler_characteristic = j.at("euler_characteristic").get<std::size_t>();
  for (const auto& row : j.at("basis")) {
    std::vector<Polynomial> elems;
    for (const auto& e : row.at("elements")) elems.push_back(parse_polynomial(e.get<std::string>(), s.rank));
    s.basis.push_back(std::move(elems));
  }
  const auto& gb = j.at("groebner");
  s.order = gb.at("order").get<std::string>();
  for (const auto& lt : gb.at("leading_terms")) {
    const Polynomial m = parse_polynomial(lt.get<std::string>(), s.rank);
    if (m.size() != 1 || m.leading_coeff() != 1) throw InvalidInput("leading term is not a monomial: " + lt.dump());
    s.leading_terms.push_back(m.leading_monomial());
  }
  for (const auto& g : gb.at("generators")) s.generators.push_back(parse_polynomial(g.get<std::string>(), s.rank));
  for (const auto& f : j.at("invariants")) s.invariants.push_back(parse_polynomial(f.get<std::string>(), s.rank));
  return s;
}

Json ring_summary_to_json(const RingSummary& s) {
  Json j;
  j["spec"] = s.spec;
  j["type"] = s.type;
  j["rank"] = s.rank;
  j["crossed"] = s.crossed;
  j["dimension"] = s.dimension;
  j["betti"] = s.betti;
  j["euler_characteristic"] = s.euler_characteristic;
  Json basis = Json::array();
  for (std::size_t d = 0; d < s.basis.size(); ++d) {
    Json row;
    row["degree"] = d;
    row["cohomological_degree"] = 2 * d;
    Json elems = Json::array();
    for (const auto& b : s.basis[d]) elems.push_back(to_string(b));
    row["elements"] = std::move(elems);
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  Json gb;
  gb["order"] = s.order;
  Json lts = Json::array();
  for (const auto& m : s.leading_terms) lts.push_back(to_string(m, s.rank));
  gb["leading_terms"] = std::move(lts);
  Json gens = Json::array();
  for (const auto& g : s.generators) gens.push_back(to_string(g));
  gb["generators"] = std::move(gens);
  j["groebner"] = std::move(gb);
  Json inv = Json::array();
  for (const auto& f : s.invariants) inv.push_back(to_string(f));
  j["invariants"] = std::move(inv);
  return j;
}

std::string ring_to_text(const CohomologyRing& ring) {
  std::ostringstream os;
  const auto& p = ring.parabolic;
  os << "spec: " << p.label() << "\n";
  os << "diagram: " << dynkin_diagram(p) << "\n";
  os << "dimension: " << ring.dim << "\n";
  std::vector<std::string> betti;
  for (auto b : ring.betti) betti.push_back(std::to_string(b));
  os << "betti: " << join(betti, " ") << "\n";
  std::vector<std::string> lts;
  for (const auto& m : ring.gb().leading_monomials()) lts.push_back(to_string(m, p.root_system.rank));
  os << "groebner leading terms (" << ring.gb().order_tag << "): " << join(lts, ", ") << "\n";
  for (std::size_t d = 0; d <= ring.dim; ++d) {
    std::vector<std::string> elems;
    for (const auto& b : ring.graded_basis[d]) elems.push_back(to_string(b));
    os << "H^" << 2 * d << ": " << join(elems, "; ") << "\n";
  }
  return os.str();
}

std::string ring_to_latex(const CohomologyRing& ring) {
  std::ostringstream os;
  os << "\\begin{array}{cc}\n\\head{Degree} & \\head{Basis} \\\\\n\\midrule\n";
  for (std::size_t d = 1; d <= ring.dim; ++d) {
    std::vector<std::string> elems;
    for (const auto& b : ring.graded_basis[d]) elems.push_back(to_latex(b));
    os << 2 * d << " & " << join(elems, ", ") << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

Json chern_to_json(const ChernReport& report) {
  const auto& p = report.parabolic;
  Json j;
  j["spec"] = p.label();
  j["dimension"] = report.dim;
  j["filtration_ranks"] = filtration_ranks(p);
  Json classes = Json::array();
  for (std::size_t k = 0; k < report.chern_classes.size(); ++k) {
    Json c;
    c["index"] = k + 1;
    c["class"] = to_string(report.chern_classes[k]);
    classes.push_back(std::move(c));
  }
  j["chern_classes"] = std::move(classes);
  j["c1_weight"] = rational_array(report.c1_weight);
  j["c1_fundamental_coords"] = rational_array(report.c1_fundamental_coords);
  if (report.epsilon) j["epsilon"] = *report.epsilon;
  else j["epsilon"] = nullptr;
  if (report.c1_multiple) j["c1_multiple"] = rational_string(*report.c1_multiple);
  else j["c1_multiple"] = nullptr;
  Json rels = Json::array();
  for (const auto& space : report.relations) {
    Json r;
    r["degree"] = space.degree;
    r["trivial"] = space.trivial;
    Json list = Json::array();
    for (const auto& rel : space.relations) list.push_back(to_string(rel));
    r["relations"] = std::move(list);
    rels.push_back(std::move(r));
  }
  j["relations"] = std::move(rels);
  return j;
}

std::string relations_to_text(const ChernReport& report) {
  std::ostringstream os;
  for (const auto& space : report.relations) {
    if (space.trivial && space.relations.empty()) {
      os << "degree " << space.degree << ": all monomials vanish (above dimension " << report.dim << ")\n";
      continue;
    }
    if (space.relations.empty()) {
      os << "degree " << space.degree << ": none\n";
      continue;
    }
    os << "degree " << space.degree << ":\n";
    for (const auto& rel : space.relations) os << "  " << to_string(rel) << " = 0\n";
  }
  return os.str();
}

std::string chern_to_text(const ChernReport& report) {
  std::ostringstream os;
  const auto& p = report.parabolic;
  os << "spec: " << p.label() << "\n";
  os << "diagram: " << dynkin_diagram(p) << "\n";
  os << "dimension: " << report.dim << "\n";
  std::vector<std::string> ranks;
  for (auto r : filtration_ranks(p)) ranks.push_back(std::to_string(r));
  os << "filtration ranks: " << join(ranks, " ") << "\n";
  for (std::size_t k = 0; k < report.chern_classes.size(); ++k)
    os << "c" << k + 1 << " = " << to_string(report.chern_classes[k]) << "\n";
  os << "c1 weight: " << weight_string(report.c1_weight) << "\n";
  if (report.epsilon) {
    os << "epsilon: " << root_string(*report.epsilon) << "\n";
    os << "c1 = " << rational_string(*report.c1_multiple) << " * epsilon\n";
  } else if (!report.c1_fundamental_coords.empty()) {
    std::vector<std::string> coords;
    for (const auto& x : report.c1_fundamental_coords) coords.push_back(rational_string(x));
    os << "c1 over crossed fundamental weights: " << join(coords, " ") << "\n";
  }
  os << "relations:\n" << relations_to_text(report);
  return os.str();
}

std::string chern_to_latex(const ChernReport& report) {
  std::ostringstream os;
  const auto& p = report.parabolic;
  std::vector<std::string> ranks;
  for (auto r : filtration_ranks(p)) ranks.push_back(std::to_string(r));
  std::vector<std::string> rels;
  if (report.epsilon && *report.c1_multiple != 1)
    rels.push_back("c_{1} = " + (is_integral(*report.c1_multiple)
                                     ? report.c1_multiple->get_str()
                                     : "\\frac{" + report.c1_multiple->get_num().get_str() + "}{" +
                                           report.c1_multiple->get_den().get_str() + "}") +
                   " \\varepsilon");
  for (const auto& space : report.relations)
    for (const auto& rel : space.relations) rels.push_back(to_latex(rel) + " = 0");
  os << "\\begin{longtable}{lll}\n";
  os << "\\toprule\nDiagram & Filtration & Relations \\\\\n\\midrule\n";
  os << dynkin_diagram_latex(p) << " & " << join(ranks, ", ") << " & ";
  if (rels.empty()) {
    os << "--- \\\\\n";
  } else {
    os << "$" << rels.front() << "$ \\\\\n";
    for (std::size_t i = 1; i < rels.size(); ++i) os << " & & $" << rels[i] << "$ \\\\\n";
  }
  os << "\\bottomrule\n\\end{longtable}\n";
  return os.str();
}

Json delta_to_json(const ParabolicSpec& p) {
  Json j;
  j["spec"] = p.label();
  j["delta"] = rational_array(delta_weight(p));
  const auto cls = classify_roots(p);
  Json table = Json::array();
  for (const auto& row : delta_pairing_table(p)) {
    Json r;
    r["root"] = root_string(row.root);
    r["pairing"] = rational_string(row.value);
    r["levi"] = std::find(cls.levi.begin(), cls.levi.end(), row.root) != cls.levi.end();
    table.push_back(std::move(r));
  }
  j["pairings"] = std::move(table);
  return j;
}

std::string delta_to_text(const ParabolicSpec& p) {
  std::ostringstream os;
  os << "spec: " << p.label() << "\n";
  os << "delta: " << weight_string(delta_weight(p)) << "\n";
  const auto cls = classify_roots(p);
  for (const auto& row : delta_pairing_table(p)) {
    const bool levi = std::find(cls.levi.begin(), cls.levi.end(), row.root) != cls.levi.end();
    os << "<delta, " << root_string(row.root) << "> = " << rational_string(row.value)
       << (levi ? "  [levi]" : "") << "\n";
  }
  return os.str();
}

Json filtration_to_json(const ParabolicSpec& p) {
  Json j;
  j["spec"] = p.label();
  j["dimension"] = dimension(p);
  j["ranks"] = filtration_ranks(p);
  return j;
}

std::string filtration_to_text(const ParabolicSpec& p) {
  std::vector<std::string> ranks;
  for (auto r : filtration_ranks(p)) ranks.push_back(std::to_string(r));
  std::ostringstream os;
  os << "spec: " << p.label() << "\n";
  os << "dimension: " << dimension(p) << "\n";
  os << "filtration ranks: " << join(ranks, " ") << "\n";
  return os.str();
}

std::vector<ParabolicSpec> rank2_cases() {
  const RootSystem a2 = build_root_system(DynkinType::A, 2);
  const RootSystem b2 = build_root_system(DynkinType::B, 2);
  const RootSystem g2 = build_root_system(DynkinType::G, 2);
  return {
      make_parabolic(a2, {0, 1}), make_parabolic(a2, {0}),
      make_parabolic(b2, {0, 1}), make_parabolic(b2, {1}), make_parabolic(b2, {0}),
      make_parabolic(g2, {0, 1}), make_parabolic(g2, {1}), make_parabolic(g2, {0}),
  };
}

std::vector<CohomologyRing> rank2_rings(const RingOptions& options) {
  std::vector<CohomologyRing> rings;
  std::shared_ptr<const BorelPresentation> borel;
  for (const auto& p : rank2_cases()) {
    if (!borel || borel->root_system.type != p.root_system.type)
      borel = borel_presentation(p.root_system, options);
    rings.push_back(parabolic_ring(p, borel));
  }
  return rings;
}

Json rank2_table_json(const std::vector<CohomologyRing>& rings) {
  Json j;
  j["table"] = "rational cohomology of rank-2 flag varieties G/P";
  Json cases = Json::array();
  for (const auto& ring : rings) {
    Json c;
    c["spec"] = ring.parabolic.label();
    c["group"] = group_label(ring.parabolic.root_system);
    c["diagram"] = dynkin_diagram(ring.parabolic);
    c["betti"] = ring.betti;
    Json rows = Json::array();
    for (std::size_t d = 1; d <= ring.dim; ++d) {
      Json row;
      row["cohomological_degree"] = 2 * d;
      Json elems = Json::array();
      for (const auto& b : ring.graded_basis[d]) elems.push_back(to_string(b));
      row["basis"] = std::move(elems);
      rows.push_back(std::move(row));
    }
    c["rows"] = std::move(rows);
    cases.push_back(std::move(c));
  }
  j["cases"] = std::move(cases);
  return j;
}

std::string rank2_table_text(const std::vector<CohomologyRing>& rings) {
  std::ostringstream os;
  for (const auto& ring : rings) {
    os << group_label(ring.parabolic.root_system) << "  " << dynkin_diagram(ring.parabolic) << "  "
       << ring.parabolic.label() << "\n";
    for (std::size_t d = 1; d <= ring.dim; ++d) {
      std::vector<std::string> elems;
      for (const auto& b : ring.graded_basis[d]) elems.push_back(to_string(b));
      os << "  " << 2 * d << ": " << join(elems, "; ") << "\n";
    }
  }
  return os.str();
}

std::string rank2_table_latex(const std::vector<CohomologyRing>& rings) {
  std::ostringstream os;
  os << "\\begin{longtable}[c]{ccc}\n";
  os << "\\caption{Rational cohomology of the rank-2 flag varieties $G/P$.} \\\\\n";
  os << "\\toprule\n\\head{Group} & \\head{Dynkin diagram} & \\head{Cohomology} \\\\\n\\midrule\n\\endhead\n";
  for (std::size_t k = 0; k < rings.size(); ++k) {
    const auto& ring = rings[k];
    os << "$" << ring.parabolic.root_system.type_label.substr(0, 1) << "_2$ & "
       << dynkin_diagram_latex(ring.parabolic) << " &\n$\n" << ring_to_latex(ring) << "$\n\\\\";
    if (k + 1 < rings.size()) os << " \\addlinespace[3pt]";
    os << "\n";
  }
  os << "\\bottomrule\n\\end{longtable}\n";
  return os.str();
}

}  // namespace flagcoh
