#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flagcoh/rational.hpp"

namespace flagcoh {

inline constexpr std::size_t kMaxRank = 8;
inline constexpr std::size_t kDefaultWeylCap = 51840;

enum class DynkinType { A, B, C, D, F, G };

// Integer vector in the simple-root basis (roots, Weyl images of roots).
using RootVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

struct RootSystem {
  DynkinType type;
  std::string type_label;  // "A", "B", "C", "D", "G2", "F4"
  std::size_t rank;
  IntMatrix cartan;        // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<RootVector> positive_roots;  // sorted by height, then lexicographically
  std::vector<Rational> symmetrizer;       // d_i with d_i * cartan[i][j] symmetric, short roots d = 1

  // B(alpha_i, alpha_j) = d_i a_ij.  Short roots have B(a, a) = 2.
  Rational form(std::size_t i, std::size_t j) const { return symmetrizer[i] * cartan[i][j]; }
  Rational pairing(const Vector& lambda, const Vector& mu) const;
  Rational pairing(const RootVector& lambda, const RootVector& mu) const;

  // <lambda, alpha_i^vee> for lambda in the simple-root basis.
  Rational coroot_pairing(const Vector& lambda, std::size_t i) const;

  std::vector<RootVector> all_roots() const;  // positives followed by their negatives

  // Exponents m_i; degrees of basic invariants are m_i + 1.
  std::vector<int> exponents() const;
  std::vector<int> invariant_degrees() const;
  unsigned long long weyl_order() const;

  // Text label such as "A2", "G2", "F4".
  std::string name() const;
};

struct WeylElement {
  IntMatrix action;                 // column j is w(alpha_j) in the simple-root basis
  std::size_t length = 0;
  std::vector<std::size_t> reduced_word;  // 0-based node indices; w = s_{w[0]} ... s_{w[k-1]}

  RootVector apply(const RootVector& v) const;
  Vector apply(const Vector& v) const;
};

// Rank 2 uses node 1 = short root for B2 and G2; C2 is aliased to B2.
RootSystem build_root_system(const std::string& type_label, std::size_t rank);
RootSystem build_root_system(DynkinType type, std::size_t rank);

// lambda - <lambda, alpha_i^vee> alpha_i, i is 0-based.
Vector reflect(const RootSystem& rs, std::size_t i, const Vector& lambda);
RootVector reflect(const RootSystem& rs, std::size_t i, const RootVector& lambda);

IntMatrix simple_reflection_matrix(const RootSystem& rs, std::size_t i);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

// Breadth-first enumeration; elements come out in order of discovery, so
// lengths are nondecreasing. Throws CapExceeded when the order exceeds `cap`.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs,
                                        unsigned long long cap = kDefaultWeylCap);
// Subgroup generated by the simple reflections listed in `generators` (0-based).
std::vector<WeylElement> enumerate_subgroup(const RootSystem& rs,
                                            const std::vector<std::size_t>& generators,
                                            unsigned long long cap = kDefaultWeylCap);

// Number of positive roots sent to negative roots.
std::size_t count_inversions(const RootSystem& rs, const WeylElement& w);

// Coefficients of sum_w t^{length(w)}.
std::vector<long long> length_generating_function(const std::vector<WeylElement>& group);

// prod_i (1 + t + ... + t^{m_i}) from the exponents table.
std::vector<long long> poincare_from_exponents(const std::vector<int>& exponents);

// Fundamental weight of node k in the simple-root basis (k 0-based).
Vector fundamental_weight(const RootSystem& rs, std::size_t k);

}  // namespace flagcoh
