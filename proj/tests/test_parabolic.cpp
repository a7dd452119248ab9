#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "flagcoh/error.hpp"
#include "flagcoh/parabolic.hpp"

using namespace flagcoh;

TEST_CASE("spec grammar") {
  const ParabolicSpec p = parse_parabolic("G2[crossed=1,2]");
  CHECK(p.root_system.type == DynkinType::G);
  CHECK(p.crossed == std::vector<std::size_t>{0, 1});
  CHECK(p.label() == "G2[crossed=1,2]");

  CHECK(parse_parabolic("A2[crossed=1]").crossed == std::vector<std::size_t>{0});
  CHECK(parse_parabolic("A2").crossed == std::vector<std::size_t>{0, 1});
  CHECK(parse_parabolic("A2[crossed=]").crossed.empty());
  CHECK(parse_parabolic("B3[crossed=3,1]").crossed == std::vector<std::size_t>{0, 2});
  CHECK(parse_parabolic("F4[crossed=4]").label() == "F4[crossed=4]");
}

TEST_CASE("parse errors name the offending token") {
  auto message = [](const std::string& text) {
    try {
      parse_parabolic(text);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("X2").find("'X'") != std::string::npos);
  CHECK(message("A2[crossed=3]").find("'3'") != std::string::npos);
  CHECK(message("A2[crossed=1").find("A2[crossed=1") != std::string::npos);
  CHECK(message("A2[crosed=1]").find("crosed") != std::string::npos);
  CHECK(message("G3").find("G3") != std::string::npos);
  CHECK(!message("A2[crossed=x]").empty());
  CHECK(!message("").empty());
}

TEST_CASE("root classification of P^2") {
  const auto p = parse_parabolic("A2[crossed=1]");
  const auto cls = classify_roots(p);
  CHECK(cls.levi == std::vector<RootVector>{{0, 1}, {0, -1}});
  CHECK(cls.nilradical.size() == 2);
  CHECK(dimension(p) == 2);
  for (const auto& g : cls.omitted) CHECK(g[0] < 0);
}

TEST_CASE("delta for P^2") {
  const auto p = parse_parabolic("A2[crossed=1]");
  const Vector delta = delta_weight(p);
  CHECK(delta == Vector{Rational(-1), Rational(-1, 2)});
  const RootSystem& rs = p.root_system;
  CHECK(rs.pairing(delta, Vector{1, 0}) == Rational(-3, 2));
  CHECK(rs.pairing(delta, Vector{0, 1}) == 0);
}

TEST_CASE("delta vanishes exactly on Levi roots") {
  for (const char* text : {"B2[crossed=1]", "B2[crossed=2]", "G2[crossed=1]", "A3[crossed=2]", "B3[crossed=1,3]",
                           "C3[crossed=2]", "D4[crossed=2]", "F4[crossed=1]", "A2[crossed=]"}) {
    const auto p = parse_parabolic(text);
    const auto cls = classify_roots(p);
    CAPTURE(text);
    for (const auto& row : delta_pairing_table(p)) {
      const bool levi = std::find(cls.levi.begin(), cls.levi.end(), row.root) != cls.levi.end();
      CHECK((row.value == 0) == levi);
    }
  }
}

TEST_CASE("B2 crossed at the first node pairs to zero only at plus or minus the second root") {
  const auto p = parse_parabolic("B2[crossed=1]");
  for (const auto& row : delta_pairing_table(p)) {
    const bool beta = row.root == RootVector{0, 1} || row.root == RootVector{0, -1};
    CHECK((row.value == 0) == beta);
  }
}

TEST_CASE("filtration ranks") {
  CHECK(filtration_ranks(parse_parabolic("A2[crossed=1,2]")) == std::vector<std::size_t>{2, 1});
  CHECK(filtration_ranks(parse_parabolic("A2[crossed=1]")) == std::vector<std::size_t>{2});
  const auto g2 = filtration_ranks(parse_parabolic("G2[crossed=1]"));
  CHECK(g2 == std::vector<std::size_t>{2, 1, 2});
  CHECK(std::accumulate(g2.begin(), g2.end(), std::size_t{0}) == 5);
  CHECK(filtration_ranks(parse_parabolic("G2[crossed=2]")) == std::vector<std::size_t>{4, 1});
  CHECK(filtration_ranks(parse_parabolic("A2[crossed=]")).empty());
  for (const char* text : {"B3[crossed=2]", "F4[crossed=4]", "D5[crossed=1,5]"}) {
    const auto p = parse_parabolic(text);
    const auto r = filtration_ranks(p);
    CHECK(std::accumulate(r.begin(), r.end(), std::size_t{0}) == dimension(p));
  }
}

TEST_CASE("dimension of G/B is the number of positive roots") {
  CHECK(dimension(parse_parabolic("F4")) == 24);
  CHECK(dimension(parse_parabolic("A3[crossed=2]")) == 4);
  CHECK(dimension(parse_parabolic("B3[crossed=1]")) == 5);
  CHECK(dimension(parse_parabolic("C3[crossed=1]")) == 5);
}
