#include "doctest.h"
#include "support.hpp"

#include "flagcoh/cohomology.hpp"
#include "flagcoh/groebner.hpp"
#include "flagcoh/invariants.hpp"

using namespace flagcoh;

TEST_CASE("Reynolds average of a1^2 over the A2 Weyl group") {
  // Orbit of a1 is {+-a1, +-a2, +-(a1+a2)}; the squares sum to 4(a1^2 + a1*a2 + a2^2).
  const RootSystem rs = build_root_system(DynkinType::A, 2);
  const auto group = enumerate_weyl(rs);
  const Polynomial avg = reynolds(group, parse_polynomial("a1^2", 2));
  CHECK(avg == parse_polynomial("(2/3)*(a1^2 + a1*a2 + a2^2)", 2));
  CHECK(reynolds_serial(group, parse_polynomial("a1^2", 2)) == avg);
  CHECK(reynolds(group, parse_polynomial("a1", 2)).is_zero());
}

TEST_CASE("Reynolds operator is an idempotent projection onto invariants") {
  std::mt19937 rng(37);
  const RootSystem rs = build_root_system(DynkinType::B, 2);
  const auto group = enumerate_weyl(rs);
  for (int i = 0; i < 10; ++i) {
    const Polynomial p = testing::random_polynomial(rng, 2, 4);
    const Polynomial r = reynolds(group, p);
    CHECK(reynolds(group, r) == r);
    for (const auto& w : group) CHECK(weyl_act(w, r) == r);
  }
}

TEST_CASE("fundamental invariants have the right degrees and are invariant") {
  for (auto [t, n] : {std::pair{DynkinType::A, 2}, {DynkinType::B, 2}, {DynkinType::G, 2}, {DynkinType::A, 3},
                      {DynkinType::B, 3}, {DynkinType::C, 3}, {DynkinType::D, 4}}) {
    const RootSystem rs = build_root_system(t, n);
    CAPTURE(rs.name());
    const auto group = enumerate_weyl(rs);
    const auto inv = fundamental_invariants(rs, group);
    REQUIRE(inv.size() == rs.rank);
    const auto degrees = rs.invariant_degrees();
    for (std::size_t k = 0; k < inv.size(); ++k) {
      CHECK(inv[k].is_homogeneous());
      CHECK(inv[k].degree() == degrees[k]);
      for (std::size_t g = 0; g < group.size(); g += 3) CHECK(weyl_act(group[g], inv[k]) == inv[k]);
    }
    CHECK(jacobian_nonzero(inv));
  }
}

TEST_CASE("dependent families fail the Jacobian test") {
  const Polynomial q = parse_polynomial("a1^2 + a1*a2 + a2^2", 2);
  CHECK(!jacobian_nonzero({q, q * Rational(3)}));
  CHECK(!jacobian_nonzero({q, pow(q, 2)}));
  CHECK(jacobian_nonzero({q, parse_polynomial("a1^3", 2)}));
}

TEST_CASE("parallel and serial Reynolds agree on B3") {
  const RootSystem rs = build_root_system(DynkinType::B, 3);
  const auto group = enumerate_weyl(rs);
  const Polynomial p = parse_polynomial("a1^4*a2 + 3*a2^2*a3^3 - a1*a3", 3);
  CHECK(reynolds(group, p, Exec::parallel) == reynolds_serial(group, p));
  const Vector seed = invariant_seed(rs, 0, 0);
  CHECK(orbit_power_sum(group, seed, 4, Exec::parallel) == orbit_power_sum(group, seed, 4, Exec::serial));
}

TEST_CASE("hand-listed rank-2 invariant generators span the computed ideal") {
  for (const auto& row : testing::read_table("invariant_generators.txt")) {
    const RootSystem rs = build_root_system(row[0].substr(0, 1), 2);
    CAPTURE(row[0]);
    const auto borel = borel_presentation(rs);
    const GroebnerBasis& computed = borel->quotient->groebner();
    std::vector<Polynomial> listed;
    for (const auto& text : testing::split(row[1], ';')) listed.push_back(parse_polynomial(text, 2));
    for (const auto& f : listed) CHECK(normal_form(computed, f).is_zero());
    const GroebnerBasis from_list = buchberger(listed, static_cast<unsigned>(rs.positive_roots.size()) + 1);
    REQUIRE(from_list.complete);
    for (const auto& f : borel->invariants) CHECK(normal_form(from_list, f).is_zero());
  }
}

TEST_CASE("orbit power sums agree with averaging powers of the linear form") {
  for (auto [t, n] : {std::pair{DynkinType::A, 2}, {DynkinType::G, 2}, {DynkinType::B, 3}}) {
    const RootSystem rs = build_root_system(t, n);
    const auto group = enumerate_weyl(rs);
    const Vector seed = invariant_seed(rs, 1, 0);
    for (unsigned k = 1; k <= 6; ++k) {
      const Polynomial direct = reynolds(group, pow(Polynomial::linear(seed), k));
      CHECK(orbit_power_sum(group, seed, k, Exec::serial) == direct);
      CHECK(orbit_power_sum(group, seed, k, Exec::parallel) == direct);
    }
  }
}
