#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagcoh/groebner.hpp"
#include "flagcoh/linalg.hpp"
#include "flagcoh/parabolic.hpp"
#include "flagcoh/parallel.hpp"

namespace flagcoh {

// Finite-dimensional graded quotient Q[alpha]/I for a complete Groebner basis
// of a zero-dimensional homogeneous ideal. Coordinates in degree d are taken
// against standard(d) (decreasing grevlex). Normal forms of every monomial
// up to the top degree are tabulated at construction, so the object is
// immutable and safe to share across threads afterwards.
class Quotient {
 public:
  explicit Quotient(GroebnerBasis gb);

  std::size_t rank() const { return gb_.rank; }
  unsigned top_degree() const { return top_; }
  const GroebnerBasis& groebner() const { return gb_; }

  std::size_t dim(unsigned d) const { return d <= top_ ? standard_[d].size() : 0; }
  std::size_t total_dim() const;
  const std::vector<Monomial>& standard(unsigned d) const { return standard_.at(d); }
  std::size_t index_of(const Monomial& standard_monomial) const;

  // Normal-form coordinates of a monomial (zero vector above the top degree).
  Vector coords(const Monomial& m) const;
  // Coordinates of the degree-d component of p.
  Vector coords(const Polynomial& p, unsigned d) const;
  Polynomial to_polynomial(unsigned d, const Vector& v) const;

  // (sum_k linear[k] alpha_k) * v for v in degree d-1.
  Vector multiply_linear(unsigned d, const Vector& v, const Vector& linear) const;
  // a (degree p) times b (degree q).
  Vector multiply(unsigned p, const Vector& a, unsigned q, const Vector& b) const;

  // Matrices of the algebra automorphism alpha_j -> sum_k action[k][j] alpha_k
  // on every degree 0..top.
  std::vector<Matrix> graded_action(const IntMatrix& action, Exec exec = Exec::parallel) const;
  std::vector<Matrix> graded_action_serial(const IntMatrix& action) const;

 private:
  Vector action_column(unsigned d, std::size_t c, const IntMatrix& action, const Matrix& previous) const;

  GroebnerBasis gb_;
  unsigned top_ = 0;
  std::vector<std::vector<Monomial>> standard_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> standard_index_;
  std::vector<std::unordered_map<Monomial, Vector, MonomialHash>> table_;
  std::vector<std::vector<Matrix>> mul_;  // mul_[d][k]: dim(d) x dim(d-1), multiplication by alpha_k
};

struct RingOptions {
  unsigned long long weyl_cap = kDefaultWeylCap;
  Exec exec = Exec::parallel;
  unsigned max_attempts = 4;
};

// Borel's presentation of H*(G/B, Q), shared by every parabolic of one type.
struct BorelPresentation {
  RootSystem root_system;
  std::vector<WeylElement> weyl;
  std::vector<Polynomial> invariants;
  unsigned attempt = 0;  // seed attempt that passed the Betti self-check
  std::shared_ptr<const Quotient> quotient;
  std::vector<std::vector<Matrix>> reflection_action;  // [node][degree]
};

// Throws CapExceeded when |W| is above the cap, ConsistencyError when no
// seed attempt yields invariants whose quotient matches the Weyl Poincare
// polynomial.
std::shared_ptr<const BorelPresentation> borel_presentation(const RootSystem& rs,
                                                            const RingOptions& options = {});

struct CohomologyRing {
  ParabolicSpec parabolic;
  std::shared_ptr<const BorelPresentation> borel;
  std::vector<Matrix> basis_coords;                  // rows span H^{2d}(G/P) in standard coordinates
  std::vector<std::vector<Polynomial>> graded_basis;  // same rows as primitive integer polynomials
  std::vector<std::size_t> betti;                    // degrees 0..dim G/P
  std::size_t dim = 0;                               // complex dimension of G/P

  const Quotient& quotient() const { return *borel->quotient; }
  const GroebnerBasis& gb() const { return borel->quotient->groebner(); }
};

CohomologyRing borel_ring(const RootSystem& rs, const RingOptions& options = {});
CohomologyRing parabolic_ring(const ParabolicSpec& p, const RingOptions& options = {});
CohomologyRing parabolic_ring(const ParabolicSpec& p, std::shared_ptr<const BorelPresentation> borel);

// Coefficients of P_W(t) / P_{W_L}(t) from Weyl length counts.
std::vector<long long> betti_oracle(const ParabolicSpec& p, unsigned long long cap = kDefaultWeylCap);

// Exact division of integer polynomials; throws ConsistencyError on a remainder.
std::vector<long long> divide_exact(const std::vector<long long>& num, const std::vector<long long>& den);

// Poincare duality, Euler characteristic |W|/|W_L|, top Betti 1, vanishing
// above dim G/P. Returns one message per violation.
std::vector<std::string> structural_violations(const CohomologyRing& ring);

// True when v (degree d, standard coordinates) is fixed by every Levi reflection.
bool is_levi_fixed(const CohomologyRing& ring, unsigned d, const Vector& v);

}  // namespace flagcoh
