#pragma once

#include <string>
#include <vector>

#include "flagcoh/rootsys.hpp"

namespace flagcoh {

// A parabolic subalgebra given by its crossed Dynkin nodes (0-based, sorted).
struct ParabolicSpec {
  RootSystem root_system;
  std::vector<std::size_t> crossed;

  bool is_crossed(std::size_t node) const;
  std::vector<std::size_t> uncrossed() const;

  // "A2[crossed=1,2]" with 1-based node labels.
  std::string label() const;
};

ParabolicSpec make_parabolic(RootSystem rs, std::vector<std::size_t> crossed);

// Parses `<TYPE><RANK>[crossed=<i,j,...>]`. Node labels are 1-based. A bare
// `<TYPE><RANK>` means every node is crossed (the full flag variety).
ParabolicSpec parse_parabolic(const std::string& text);

struct RootClassification {
  std::vector<RootVector> levi;        // zero coefficient on every crossed node, both signs
  std::vector<RootVector> nilradical;  // positive roots touching a crossed node
  std::vector<RootVector> omitted;     // negatives of the nilradical roots
};

RootClassification classify_roots(const ParabolicSpec& p);

// dim G/P = number of omitted roots.
std::size_t dimension(const ParabolicSpec& p);

struct DeltaPairing {
  RootVector root;
  Rational value;  // <delta, root>
};

// delta = half the sum of the omitted roots, in the simple-root basis.
Vector delta_weight(const ParabolicSpec& p);

// <delta, beta> for every root beta of g (positives, then negatives).
std::vector<DeltaPairing> delta_pairing_table(const ParabolicSpec& p);

// Entry k-1 counts omitted roots whose coefficients over the crossed nodes
// sum to -k. Empty when nothing is crossed.
std::vector<std::size_t> filtration_ranks(const ParabolicSpec& p);

}  // namespace flagcoh
