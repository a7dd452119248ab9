#pragma once

#include <limits>
#include <string>
#include <vector>

#include "flagcoh/poly.hpp"

namespace flagcoh {

struct GroebnerBasis {
  std::size_t rank = 0;
  // Reduced and monic, sorted by increasing leading monomial.
  std::vector<Polynomial> generators;
  std::string order_tag = "grevlex";
  // Every ideal element of degree <= complete_through reduces to zero.
  unsigned complete_through = 0;
  // Set when the basis is certified complete in all degrees.
  bool complete = false;

  std::vector<Monomial> leading_monomials() const;
  bool is_standard(const Monomial& m) const;
  bool covers_degree(unsigned d) const { return complete || d <= complete_through; }
};

// Degree-truncated Buchberger for homogeneous input (normal selection
// strategy, coprime and chain criteria). The basis is marked complete when no
// S-pair was dropped or when every monomial of degree max_degree is a leading
// term multiple. Non-homogeneous input throws InvalidInput.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, unsigned max_degree);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Full reduction of p by monic divisors (remainder has no term divisible by
// any divisor's leading monomial).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors);

// Unique remainder on standard monomials. Throws InvalidInput when the basis
// is not certified through deg(p).
Polynomial normal_form(const GroebnerBasis& gb, const Polynomial& p);

// Degree-d monomials outside the leading-term ideal, in decreasing grevlex order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, unsigned degree);

}  // namespace flagcoh
