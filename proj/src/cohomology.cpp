#include "flagcoh/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "flagcoh/error.hpp"
#include "flagcoh/invariants.hpp"

namespace flagcoh {

namespace {
constexpr unsigned kDegreeGuard = 4096;
}

Quotient::Quotient(GroebnerBasis gb) : gb_(std::move(gb)) {
  if (!gb_.complete) throw ConsistencyError("Quotient requires a complete Groebner basis");
  for (unsigned d = 0;; ++d) {
    if (d > kDegreeGuard) throw ConsistencyError("quotient ring is not finite-dimensional");
    const auto ascending = monomials_of_degree(rank(), d);
    std::vector<Monomial> basis;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it)
      if (gb_.is_standard(*it)) basis.push_back(*it);
    if (basis.empty()) {
      if (d == 0) throw ConsistencyError("ideal contains a unit");
      top_ = d - 1;
      break;
    }
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);

    // Ascending grevlex: each reduction step only needs smaller monomials.
    std::unordered_map<Monomial, Vector, MonomialHash> table;
    table.reserve(ascending.size());
    for (const auto& m : ascending) {
      Vector v(basis.size());
      if (auto it = index.find(m); it != index.end()) {
        v[it->second] = 1;
      } else {
        const Polynomial* divisor = nullptr;
        for (const auto& g : gb_.generators)
          if (g.leading_monomial().divides(m)) {
            divisor = &g;
            break;
          }
        const Monomial q = m / divisor->leading_monomial();
        const auto& terms = divisor->terms();
        Rational product;
        for (std::size_t k = 1; k < terms.size(); ++k) {
          const Vector& w = table.at(terms[k].monomial * q);
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (sgn(w[i]) == 0) continue;
            mpq_mul(product.get_mpq_t(), terms[k].coeff.get_mpq_t(), w[i].get_mpq_t());
            mpq_sub(v[i].get_mpq_t(), v[i].get_mpq_t(), product.get_mpq_t());
          }
        }
      }
      table.emplace(m, std::move(v));
    }
    standard_.push_back(std::move(basis));
    standard_index_.push_back(std::move(index));
    table_.push_back(std::move(table));
  }

  mul_.resize(top_ + 1);
  for (unsigned d = 1; d <= top_; ++d) {
    for (std::size_t k = 0; k < rank(); ++k) {
      Matrix m(dim(d), dim(d - 1));
      for (std::size_t t = 0; t < dim(d - 1); ++t)
        m.set_column(t, coords(standard_[d - 1][t] * Monomial::variable(k)));
      mul_[d].push_back(std::move(m));
    }
  }
}

std::size_t Quotient::total_dim() const {
  std::size_t n = 0;
  for (const auto& b : standard_) n += b.size();
  return n;
}

std::size_t Quotient::index_of(const Monomial& m) const {
  const unsigned d = m.degree();
  if (d > top_) throw InvalidInput("monomial above the top degree");
  auto it = standard_index_[d].find(m);
  if (it == standard_index_[d].end()) throw InvalidInput("not a standard monomial: " + to_string(m, rank()));
  return it->second;
}

Vector Quotient::coords(const Monomial& m) const {
  const unsigned d = m.degree();
  if (d > top_) return {};
  return table_[d].at(m);
}

Vector Quotient::coords(const Polynomial& p, unsigned d) const {
  Vector v(dim(d));
  if (d > top_) return v;
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() != d) continue;
    const Vector& w = table_[d].at(t.monomial);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(w[i]) != 0) v[i] += t.coeff * w[i];
  }
  return v;
}

Polynomial Quotient::to_polynomial(unsigned d, const Vector& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) terms.push_back(Term{standard_[d][i], v[i]});
  return Polynomial::from_terms(rank(), std::move(terms));
}

Vector Quotient::multiply_linear(unsigned d, const Vector& v, const Vector& linear) const {
  Vector out(dim(d));
  if (d > top_ || d == 0) return out;
  for (std::size_t k = 0; k < rank(); ++k) {
    if (sgn(linear[k]) == 0) continue;
    const Vector part = mul_[d][k] * v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += linear[k] * part[i];
  }
  return out;
}

Vector Quotient::multiply(unsigned p, const Vector& a, unsigned q, const Vector& b) const {
  Vector out(dim(p + q));
  if (p + q > top_) return out;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (sgn(a[s]) == 0) continue;
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (sgn(b[t]) == 0) continue;
      const Rational f = a[s] * b[t];
      const Vector& w = table_[p + q].at(standard_[p][s] * standard_[q][t]);
      for (std::size_t i = 0; i < out.size(); ++i)
        if (sgn(w[i]) != 0) out[i] += f * w[i];
    }
  }
  return out;
}

Vector Quotient::action_column(unsigned d, std::size_t c, const IntMatrix& action,
                               const Matrix& previous) const {
  // s' = alpha_j * s with s standard one degree lower; w(s') = w(alpha_j) w(s).
  const Monomial& target = standard_[d][c];
  std::size_t j = 0;
  while (target[j] == 0) ++j;
  const Monomial lower = target / Monomial::variable(j);
  const Vector image_lower = previous.column(index_of(lower));
  Vector linear(rank());
  for (std::size_t k = 0; k < rank(); ++k) linear[k] = action[k][j];
  return multiply_linear(d, image_lower, linear);
}

std::vector<Matrix> Quotient::graded_action_serial(const IntMatrix& action) const {
  std::vector<Matrix> out;
  out.push_back(Matrix::identity(1));
  for (unsigned d = 1; d <= top_; ++d) {
    Matrix m(dim(d), dim(d));
    for (std::size_t c = 0; c < dim(d); ++c) m.set_column(c, action_column(d, c, action, out.back()));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> Quotient::graded_action(const IntMatrix& action, Exec exec) const {
  if (exec == Exec::serial) return graded_action_serial(action);
  std::vector<Matrix> out;
  out.push_back(Matrix::identity(1));
  for (unsigned d = 1; d <= top_; ++d) {
    const Matrix& previous = out.back();
    std::vector<Vector> columns(dim(d));
    const long n = static_cast<long>(dim(d));
    FLAGCOH_PARALLEL_FOR
    for (long c = 0; c < n; ++c) columns[c] = action_column(d, static_cast<std::size_t>(c), action, previous);
    Matrix m(dim(d), dim(d));
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<long long> divide_exact(const std::vector<long long>& num, const std::vector<long long>& den) {
  std::size_t den_deg = den.size();
  while (den_deg > 0 && den[den_deg - 1] == 0) --den_deg;
  if (den_deg == 0) throw ConsistencyError("division by the zero polynomial");
  std::vector<long long> rem = num;
  const long long lead = den[den_deg - 1];
  if (rem.size() < den_deg) rem.resize(den_deg, 0);
  std::vector<long long> quot(rem.size() - den_deg + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const long long top = rem[k + den_deg - 1];
    if (top % lead != 0) throw ConsistencyError("Poincare polynomial division is not exact");
    quot[k] = top / lead;
    for (std::size_t i = 0; i < den_deg; ++i) rem[k + i] -= quot[k] * den[i];
  }
  if (std::any_of(rem.begin(), rem.end(), [](long long x) { return x != 0; }))
    throw ConsistencyError("Poincare polynomial division leaves a remainder");
  while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
  return quot;
}

std::vector<long long> betti_oracle(const ParabolicSpec& p, unsigned long long cap) {
  const auto whole = length_generating_function(enumerate_weyl(p.root_system, cap));
  const auto levi = length_generating_function(enumerate_subgroup(p.root_system, p.uncrossed(), cap));
  return divide_exact(whole, levi);
}

std::shared_ptr<const BorelPresentation> borel_presentation(const RootSystem& rs,
                                                            const RingOptions& options) {
  auto out = std::make_shared<BorelPresentation>();
  out->root_system = rs;
  out->weyl = enumerate_weyl(rs, options.weyl_cap);
  const auto poincare = length_generating_function(out->weyl);
  const unsigned truncation = static_cast<unsigned>(rs.positive_roots.size()) + 1;

  std::string last_failure;
  for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Polynomial> invariants;
    try {
      invariants = fundamental_invariants(rs, out->weyl, attempt, options.exec);
    } catch (const ConsistencyError& e) {
      last_failure = e.what();
      continue;
    }
    GroebnerBasis gb = buchberger(invariants, truncation);
    if (!gb.complete) {
      last_failure = "Groebner basis not certified complete";
      continue;
    }
    auto quotient = std::make_shared<const Quotient>(std::move(gb));
    bool matches = quotient->top_degree() + 1 == poincare.size();
    for (unsigned d = 0; matches && d < poincare.size(); ++d)
      matches = static_cast<long long>(quotient->dim(d)) == poincare[d];
    if (!matches) {
      last_failure = "standard monomial counts differ from the Weyl Poincare polynomial";
      continue;
    }
    out->invariants = std::move(invariants);
    out->attempt = attempt;
    out->quotient = std::move(quotient);
    for (std::size_t i = 0; i < rs.rank; ++i)
      out->reflection_action.push_back(
          out->quotient->graded_action(simple_reflection_matrix(rs, i), options.exec));
    return out;
  }
  throw ConsistencyError("no invariant generating set found for " + rs.name() + ": " + last_failure);
}

namespace {

// Rows spanning {v : A v = v for every A}, in reduced row echelon form. The
// maps are imposed one at a time, each on the subspace fixed so far.
Matrix common_fixed_space(const std::vector<const Matrix*>& maps, std::size_t n) {
  Matrix basis = Matrix::identity(n);
  for (const Matrix* a : maps) {
    if (basis.rows() == 0) break;
    Matrix moved(n, basis.rows());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      const Vector b = basis.row(r);
      Vector image = (*a) * b;
      for (std::size_t i = 0; i < n; ++i) image[i] -= b[i];
      moved.set_column(r, image);
    }
    basis = nullspace(moved) * basis;
  }
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < basis.rows(); ++r) rows.push_back(basis.row(r));
  return row_space_basis(rows, n);
}

}  // namespace

CohomologyRing parabolic_ring(const ParabolicSpec& p, std::shared_ptr<const BorelPresentation> borel) {
  CohomologyRing ring;
  ring.parabolic = p;
  ring.borel = std::move(borel);
  ring.dim = dimension(p);
  const Quotient& q = *ring.borel->quotient;
  const auto levi_nodes = p.uncrossed();

  for (unsigned d = 0; d <= q.top_degree(); ++d) {
    const std::size_t n = q.dim(d);
    std::vector<const Matrix*> maps;
    for (auto node : levi_nodes) maps.push_back(&ring.borel->reflection_action[node][d]);
    Matrix fixed = common_fixed_space(maps, n);
    std::vector<Polynomial> polys;
    for (std::size_t r = 0; r < fixed.rows(); ++r) polys.push_back(primitive_part(q.to_polynomial(d, fixed.row(r))));
    if (d <= ring.dim) ring.betti.push_back(fixed.rows());
    ring.basis_coords.push_back(std::move(fixed));
    ring.graded_basis.push_back(std::move(polys));
  }
  ring.betti.resize(ring.dim + 1, 0);
  return ring;
}

CohomologyRing parabolic_ring(const ParabolicSpec& p, const RingOptions& options) {
  return parabolic_ring(p, borel_presentation(p.root_system, options));
}

CohomologyRing borel_ring(const RootSystem& rs, const RingOptions& options) {
  std::vector<std::size_t> all(rs.rank);
  std::iota(all.begin(), all.end(), 0);
  return parabolic_ring(make_parabolic(rs, all), options);
}

bool is_levi_fixed(const CohomologyRing& ring, unsigned d, const Vector& v) {
  if (d > ring.quotient().top_degree()) return true;
  for (auto i : ring.parabolic.uncrossed()) {
    const Vector image = ring.borel->reflection_action[i][d] * v;
    if (image != v) return false;
  }
  return true;
}

std::vector<std::string> structural_violations(const CohomologyRing& ring) {
  std::vector<std::string> out;
  const auto& b = ring.betti;
  const std::string name = ring.parabolic.label();
  if (b.size() != ring.dim + 1) out.push_back(name + ": Betti vector length differs from dim + 1");
  if (b.empty() || b.front() != 1) out.push_back(name + ": betti[0] != 1");
  if (!b.empty() && b.back() != 1) out.push_back(name + ": top Betti number != 1");
  for (std::size_t d = 0; d < b.size(); ++d)
    if (b[d] != b[b.size() - 1 - d]) {
      out.push_back(name + ": Poincare duality fails at degree " + std::to_string(d));
      break;
    }
  for (std::size_t d = 0; d < ring.basis_coords.size(); ++d) {
    const std::size_t rows = ring.basis_coords[d].rows();
    if (d > ring.dim && rows != 0)
      out.push_back(name + ": nonzero cohomology above dim in degree " + std::to_string(d));
    if (d <= ring.dim && d < b.size() && rows != b[d])
      out.push_back(name + ": basis size differs from Betti number in degree " + std::to_string(d));
  }
  const auto whole = ring.borel->weyl.size();
  const auto levi = enumerate_subgroup(ring.parabolic.root_system, ring.parabolic.uncrossed()).size();
  const std::size_t euler = std::accumulate(b.begin(), b.end(), std::size_t{0});
  if (whole % levi != 0 || euler != whole / levi)
    out.push_back(name + ": Euler characteristic " + std::to_string(euler) + " != |W|/|W_L| = " +
                  std::to_string(whole) + "/" + std::to_string(levi));
  return out;
}

}  // namespace flagcoh
