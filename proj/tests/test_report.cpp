#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "flagcoh/cli.hpp"
#include "flagcoh/report.hpp"

using namespace flagcoh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("Dynkin diagrams") {
  CHECK(dynkin_diagram(parse_parabolic("A2[crossed=1]")) == "x-o");
  CHECK(dynkin_diagram(parse_parabolic("B2[crossed=2]")) == "o<=x");
  CHECK(dynkin_diagram(parse_parabolic("G2")) == "x<<=x");
  CHECK(dynkin_diagram(parse_parabolic("B3[crossed=1]")) == "x-o=>o");
  CHECK(dynkin_diagram(parse_parabolic("C3[crossed=3]")) == "o-o<=x");
  CHECK(dynkin_diagram(parse_parabolic("D4[crossed=2]")) == "o-x<o,o>");
  CHECK(dynkin_diagram(parse_parabolic("F4[crossed=1]")) == "x-o=>o-o");
}

TEST_CASE("ring JSON round-trips byte for byte") {
  for (const char* text : {"A2[crossed=1,2]", "G2[crossed=2]", "B3[crossed=2]", "A1[crossed=1]"}) {
    const CohomologyRing ring = parabolic_ring(parse_parabolic(text));
    const std::string first = ring_to_json(ring).dump(2);
    const RingSummary summary = ring_summary_from_json(Json::parse(first));
    CHECK(ring_summary_to_json(summary).dump(2) == first);
    CHECK(summary.betti == ring.betti);
  }
}

TEST_CASE("ring JSON fields for the A2 flag variety") {
  const Json j = ring_to_json(parabolic_ring(parse_parabolic("A2[crossed=1,2]")));
  CHECK(j["betti"] == Json::array({1, 2, 2, 1}));
  CHECK(j["euler_characteristic"] == 6);
  CHECK(j["groebner"]["leading_terms"] == Json::array({"a1^2", "a1*a2^2", "a2^4"}));
  CHECK(j["basis"][3]["elements"] == Json::array({"a2^3"}));
}

TEST_CASE("CLI golden outputs") {
  CHECK(run({"relations", "A2[crossed=1]"}).out == testing::read_file(testing::golden_path("relations_A2_crossed1.txt")));
  CHECK(run({"table", "--rank2", "--json"}).out == testing::read_file(testing::golden_path("rank2_table.json")));
  CHECK(run({"table", "--rank2", "--latex"}).out == testing::read_file(testing::golden_path("rank2_table.tex")));
}

TEST_CASE("CLI examples") {
  const Run a2 = run({"ring", "A2[crossed=1,2]"});
  CHECK(a2.code == kExitOk);
  CHECK(a2.out.find("betti: 1 2 2 1") != std::string::npos);
  CHECK(run({"ring", "A1[crossed=1]"}).out.find("betti: 1 1\n") != std::string::npos);
  const Run g2 = run({"--json", "ring", "G2[crossed=2]"});
  const Json j = Json::parse(g2.out);
  CHECK(j["betti"] == Json::array({1, 1, 1, 1, 1, 1}));
  CHECK(j["basis"][1]["elements"] == Json::array({"3*a1 + 2*a2"}));
  CHECK(run({"relations", "A2[crossed=1]"}).out.find("c2 - (1/3)*c1^2 = 0") != std::string::npos);
  CHECK(run({"filtration", "G2[crossed=1]", "--json"}).out.find("\"ranks\"") != std::string::npos);
  const Run delta = run({"lemma-delta", "B2[crossed=1]"});
  CHECK(delta.code == kExitOk);
  CHECK(delta.out.find("<delta, a2> = 0  [levi]") != std::string::npos);
  CHECK(run({"chern", "A3[crossed=2]", "--latex"}).out.find("\\begin{longtable}") != std::string::npos);
  CHECK(run({"relations", "A2[crossed=1]", "--max-degree", "1"}).out == "degree 1: none\n");
}

TEST_CASE("CLI exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"ring"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const Run bad = run({"ring", "Z2[crossed=1]"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("'Z'") != std::string::npos);
  CHECK(run({"ring", "A2[crossed=7]"}).code == kExitUsage);
  CHECK(run({"table"}).code == kExitUsage);
  CHECK(run({"--json", "--latex", "ring", "A2"}).code == kExitUsage);
  CHECK(run({"--weyl-cap", "100", "ring", "B3"}).code == kExitOk);
  CHECK(run({"--weyl-cap", "47", "ring", "B3"}).code == kExitCap);
  CHECK(run({"ring", "B3", "--weyl-cap", "47"}).code == kExitCap);
  CHECK(run({"--help"}).code == kExitOk);
}
