#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "flagcoh/chern.hpp"
#include "flagcoh/cohomology.hpp"

namespace flagcoh {

using Json = nlohmann::ordered_json;

// "x" for crossed nodes, "o" otherwise; bonds "-", "=>"/"<=", "=>>"/"<<="
// (arrow towards the short root). D_n branches are written a-b<c,d>.
std::string dynkin_diagram(const ParabolicSpec& p);
std::string dynkin_diagram_latex(const ParabolicSpec& p);

Json ring_to_json(const CohomologyRing& ring);
std::string ring_to_text(const CohomologyRing& ring);
std::string ring_to_latex(const CohomologyRing& ring);

// Plain-data view of the ring JSON; parsing and re-emitting is byte-stable.
struct RingSummary {
  std::string spec;
  std::string type;
  std::size_t rank = 0;
  std::vector<std::size_t> crossed;  // 1-based
  std::size_t dimension = 0;
  std::vector<std::size_t> betti;
  std::size_t euler_characteristic = 0;
  std::vector<std::vector<Polynomial>> basis;
  std::string order;
  std::vector<Monomial> leading_terms;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> invariants;
};

RingSummary ring_summary_from_json(const Json& j);
Json ring_summary_to_json(const RingSummary& s);

Json chern_to_json(const ChernReport& report);
std::string chern_to_text(const ChernReport& report);
std::string relations_to_text(const ChernReport& report);
std::string chern_to_latex(const ChernReport& report);

Json delta_to_json(const ParabolicSpec& p);
std::string delta_to_text(const ParabolicSpec& p);

Json filtration_to_json(const ParabolicSpec& p);
std::string filtration_to_text(const ParabolicSpec& p);

// The eight rank-2 cases in table order: A2 full, A2 [1], B2 full, B2 [2],
// B2 [1], G2 full, G2 [2], G2 [1].
std::vector<ParabolicSpec> rank2_cases();
std::vector<CohomologyRing> rank2_rings(const RingOptions& options = {});
Json rank2_table_json(const std::vector<CohomologyRing>& rings);
std::string rank2_table_text(const std::vector<CohomologyRing>& rings);
std::string rank2_table_latex(const std::vector<CohomologyRing>& rings);

std::string rational_string(const Rational& q);
std::string weight_string(const Vector& v);  // as a linear form in a1..ar

}  // namespace flagcoh
