#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagcoh/cohomology.hpp"

namespace flagcoh {

// Exponent vector over the abstract symbols c_1..c_n.
using ChernMonomial = std::vector<unsigned>;

unsigned weighted_degree(const ChernMonomial& m);

// Polynomial in c_1..c_n; terms are kept in the order they were emitted.
struct ChernPolynomial {
  std::size_t n = 0;
  std::vector<std::pair<ChernMonomial, Rational>> terms;
};

std::string to_string(const ChernMonomial& m);
std::string to_string(const ChernPolynomial& p);
std::string to_latex(const ChernPolynomial& p);

// Weighted-degree-d monomials in c_1..c_n, higher classes first so the pure
// c_1 power comes last: compared on the exponent of c_n, then c_{n-1}, ...
std::vector<ChernMonomial> chern_monomials(std::size_t n, unsigned d);

struct RelationSpace {
  unsigned degree = 0;
  bool trivial = false;  // above dim G/P: every monomial vanishes
  std::vector<ChernMonomial> monomials;
  std::vector<ChernPolynomial> relations;  // reduced row echelon kernel basis
};

struct ChernReport {
  ParabolicSpec parabolic;
  std::size_t dim = 0;
  std::vector<Vector> chern_coords;        // c_p at index p-1, standard coordinates of degree p
  std::vector<Polynomial> chern_classes;   // same classes as normal-form polynomials
  Vector c1_weight;                        // c_1 as a weight in the simple-root basis
  Vector c1_fundamental_coords;            // c_1 over the fundamental weights of crossed nodes
  std::optional<RootVector> epsilon;       // present when exactly one node is crossed
  std::optional<Rational> c1_multiple;     // c_1 = m * epsilon
  std::vector<RelationSpace> relations;
};

// c(T) = prod over omitted roots of (1 + gamma), reduced in the Borel quotient.
ChernReport chern_total(const CohomologyRing& ring);

// Fills the epsilon / c1 fields.
void epsilon_weight(ChernReport& report, const CohomologyRing& ring);

struct RelationOptions {
  std::optional<unsigned> max_degree;  // default dim + 1
  bool include_trivial = false;
  Exec exec = Exec::parallel;
};

std::vector<RelationSpace> find_relations(const ChernReport& report, const CohomologyRing& ring,
                                          const RelationOptions& options = {});

// chern_total + epsilon_weight + find_relations.
ChernReport chern_report(const CohomologyRing& ring, const RelationOptions& options = {});

// Value of a c-polynomial in the quotient (standard coordinates of its degree),
// through the tabulated multiplication.
Vector evaluate(const ChernPolynomial& p, const ChernReport& report, const CohomologyRing& ring);

// Same value through polynomial substitution and Groebner division.
Polynomial evaluate_by_division(const ChernPolynomial& p, const ChernReport& report,
                                const CohomologyRing& ring);

}  // namespace flagcoh
