#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flagcoh/rational.hpp"
#include "flagcoh/rootsys.hpp"

namespace flagcoh {

// Exponent vector over alpha_1..alpha_r, zero-padded to kMaxRank.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial variable(std::size_t i) {
    Monomial m;
    m.exps_[i] = 1;
    return m;
  }

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e) { exps_[i] = static_cast<std::uint16_t>(e); }

  unsigned degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divides()
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxRank> exps_;
};

// Graded reverse lexicographic order, alpha_1 > ... > alpha_r.
// Returns <0, 0, >0 like a three-way compare.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) < 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of total degree d in `rank` variables, in increasing grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t rank, unsigned d);

struct Term {
  Monomial monomial;
  Rational coeff;
};

// Sparse polynomial with exact rational coefficients. Terms are kept in
// strictly decreasing grevlex order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::size_t rank = 0) : rank_(rank) {}

  static Polynomial constant(std::size_t rank, const Rational& c);
  static Polynomial variable(std::size_t rank, std::size_t i);
  static Polynomial term(std::size_t rank, const Monomial& m, const Rational& c);
  // sum_i coeffs[i] alpha_i
  static Polynomial linear(const Vector& coeffs);
  static Polynomial linear(const RootVector& coeffs);
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::size_t rank, std::vector<Term> terms);

  std::size_t rank() const { return rank_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(unsigned d) const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const;

  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial monic() const;

  Rational evaluate(const Vector& point) const;
  Polynomial derivative(std::size_t i) const;

  // Replaces alpha_i by images[i].
  Polynomial substitute(const std::vector<Polynomial>& images) const;

 private:
  std::size_t rank_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

// Applies w as the algebra automorphism alpha_i -> w(alpha_i).
Polynomial weyl_act(const WeylElement& w, const Polynomial& p);

// Canonical rendering: grevlex-descending terms in variables a1..ar,
// integer coefficients bare and fractions as (p/q).
std::string to_string(const Monomial& m, std::size_t rank, const std::string& var = "a");
std::string to_string(const Polynomial& p, const std::string& var = "a");
std::string to_latex(const Polynomial& p);

// Inverse of to_string; accepts +, -, *, ^, parentheses and p/q literals.
Polynomial parse_polynomial(const std::string& text, std::size_t rank,
                            const std::string& var = "a");

}  // namespace flagcoh

namespace flagcoh {

// Scales p to integer coefficients with gcd 1 and a positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

}  // namespace flagcoh
