#include "flagcoh/invariants.hpp"

#include <map>

#include "flagcoh/error.hpp"
#include "flagcoh/linalg.hpp"

namespace flagcoh {

namespace {

Polynomial sum_in_order(std::vector<Polynomial>& parts, std::size_t rank) {
  // Pairwise reduction keeps operands of similar size.
  if (parts.empty()) return Polynomial(rank);
  while (parts.size() > 1) {
    std::vector<Polynomial> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

}  // namespace

Polynomial reynolds_serial(const std::vector<WeylElement>& group, const Polynomial& p) {
  Polynomial acc(p.rank());
  for (const auto& w : group) acc += weyl_act(w, p);
  return acc * Rational(1, group.size());
}

Polynomial reynolds(const std::vector<WeylElement>& group, const Polynomial& p, Exec exec) {
  if (exec == Exec::serial) return reynolds_serial(group, p);
  std::vector<Polynomial> images(group.size(), Polynomial(p.rank()));
  const long n = static_cast<long>(group.size());
  FLAGCOH_PARALLEL_FOR
  for (long k = 0; k < n; ++k) images[k] = weyl_act(group[k], p);
  return sum_in_order(images, p.rank()) * Rational(1, group.size());
}

namespace {

using PowerSums = std::vector<Integer>;

// Adds prod_j u_j^{m_j} for every monomial m of the list.
void accumulate_orbit_point(const RootVector& u, unsigned k, const std::vector<Monomial>& monomials,
                            PowerSums& sums) {
  std::vector<std::vector<Integer>> powers(u.size(), std::vector<Integer>(k + 1));
  for (std::size_t j = 0; j < u.size(); ++j) {
    powers[j][0] = 1;
    for (unsigned e = 1; e <= k; ++e) powers[j][e] = powers[j][e - 1] * u[j];
  }
  Integer product;
  for (std::size_t t = 0; t < monomials.size(); ++t) {
    product = 1;
    for (std::size_t j = 0; j < u.size(); ++j)
      if (monomials[t][j]) product *= powers[j][monomials[t][j]];
    sums[t] += product;
  }
}

}  // namespace

// Expands sum_w (w l)^k by the multinomial theorem over an integral multiple
// of the seed, so the orbit loop runs on machine-sized integers.
Polynomial orbit_power_sum(const std::vector<WeylElement>& group, const Vector& seed, unsigned k,
                           Exec exec) {
  const std::size_t rank = seed.size();
  Integer denominator = 1;
  for (const auto& x : seed) denominator = lcm(denominator, Integer(x.get_den()));
  RootVector u(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    const Rational scaled = seed[j] * denominator;
    if (!scaled.get_num().fits_sint_p()) throw InvalidInput("orbit seed too large");
    u[j] = static_cast<int>(scaled.get_num().get_si());
  }
  const std::vector<Monomial> monomials = monomials_of_degree(rank, k);
  PowerSums sums(monomials.size());
  const long n = static_cast<long>(group.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) accumulate_orbit_point(group[i].apply(u), k, monomials, sums);
  } else {
#pragma omp parallel
    {
      PowerSums local(monomials.size());
#pragma omp for schedule(static)
      for (long i = 0; i < n; ++i) accumulate_orbit_point(group[i].apply(u), k, monomials, local);
#pragma omp critical
      for (std::size_t t = 0; t < sums.size(); ++t) sums[t] += local[t];
    }
  }

  // coefficient of x^m: multinomial(k; m) * sums[m] / (denominator^k |W|)
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), denominator.get_mpz_t(), k);
  scale *= static_cast<unsigned long>(group.size());
  std::vector<Term> terms;
  for (std::size_t t = 0; t < monomials.size(); ++t) {
    if (sgn(sums[t]) == 0) continue;
    Integer multinomial;
    mpz_fac_ui(multinomial.get_mpz_t(), k);
    for (std::size_t j = 0; j < rank; ++j) {
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), monomials[t][j]);
      multinomial /= f;
    }
    Rational c(multinomial * sums[t], scale);
    c.canonicalize();
    terms.push_back({monomials[t], c});
  }
  return Polynomial::from_terms(rank, std::move(terms));
}

Vector invariant_seed(const RootSystem& rs, unsigned attempt, unsigned copy) {
  Vector seed(rs.rank);
  for (std::size_t k = 0; k < rs.rank; ++k) {
    const Vector w = fundamental_weight(rs, k);
    for (std::size_t i = 0; i < rs.rank; ++i) seed[i] += w[i];
  }
  // rho itself is useless when -1 is not in W: w0 rho = -rho kills odd power sums.
  const unsigned shift = attempt + copy + 1;
  for (std::size_t i = 0; i < rs.rank; ++i)
    seed[i] += Rational(static_cast<long>(shift * (i * i + 2 * i + 3)), 7);
  return seed;
}

bool jacobian_nonzero(const std::vector<Polynomial>& invariants) {
  const std::size_t n = invariants.size();
  if (n == 0) return true;
  std::vector<std::vector<Polynomial>> partials(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) partials[i].push_back(invariants[i].derivative(j));
  for (long trial = 1; trial <= 12; ++trial) {
    Vector point(n);
    for (std::size_t j = 0; j < n; ++j) point[j] = trial * 3 + static_cast<long>(j * j) * trial + static_cast<long>(j) + 1;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = partials[i][j].evaluate(point);
    if (sgn(determinant(m)) != 0) return true;
  }
  return false;
}

std::vector<Polynomial> fundamental_invariants(const RootSystem& rs,
                                               const std::vector<WeylElement>& group,
                                               unsigned attempt, Exec exec) {
  std::vector<Polynomial> out;
  std::map<int, unsigned> copies;
  for (int degree : rs.invariant_degrees()) {
    const unsigned copy = copies[degree]++;
    const Vector seed = invariant_seed(rs, attempt, copy);
    Polynomial f = orbit_power_sum(group, seed, static_cast<unsigned>(degree), exec);
    if (f.is_zero())
      throw ConsistencyError("orbit power sum of degree " + std::to_string(degree) + " vanishes for " +
                             rs.name());
    out.push_back(primitive_part(f));
  }
  if (!jacobian_nonzero(out))
    throw ConsistencyError("degenerate invariant candidates for " + rs.name() + " (attempt " +
                           std::to_string(attempt) + ")");
  return out;
}

std::vector<Polynomial> fundamental_invariants(const RootSystem& rs) {
  const auto group = enumerate_weyl(rs);
  for (unsigned attempt = 0;; ++attempt) {
    try {
      return fundamental_invariants(rs, group, attempt);
    } catch (const ConsistencyError&) {
      if (attempt >= 4) throw;
    }
  }
}

}  // namespace flagcoh
