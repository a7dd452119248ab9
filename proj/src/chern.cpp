#include "flagcoh/chern.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "flagcoh/error.hpp"

namespace flagcoh {

unsigned weighted_degree(const ChernMonomial& m) {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<unsigned>(i + 1) * m[i];
  return d;
}

std::string to_string(const ChernMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += "c" + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const ChernPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    const bool negative = sgn(c) < 0;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = abs(c);
    const bool constant = weighted_degree(m) == 0;
    if (constant) {
      s += is_integral(magnitude) ? magnitude.get_str() : "(" + magnitude.get_str() + ")";
      continue;
    }
    if (magnitude != 1)
      s += is_integral(magnitude) ? magnitude.get_str() + "*" : "(" + magnitude.get_str() + ")*";
    s += to_string(m);
  }
  return s;
}

std::string to_latex(const ChernPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    const bool negative = sgn(c) < 0;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = abs(c);
    if (magnitude != 1) {
      if (is_integral(magnitude)) s += magnitude.get_str();
      else s += "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
      s += " ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      mono += "c_{" + std::to_string(i + 1) + "}";
      if (m[i] > 1) mono += "^{" + std::to_string(m[i]) + "}";
    }
    s += mono;
  }
  return s;
}

std::vector<ChernMonomial> chern_monomials(std::size_t n, unsigned d) {
  std::vector<ChernMonomial> out;
  ChernMonomial m(n, 0);
  // Descend from c_n so larger indices get larger exponents first.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t index, unsigned left) {
    if (index == 0) {
      if (left == 0) out.push_back(m);
      return;
    }
    const unsigned weight = static_cast<unsigned>(index);
    for (unsigned e = left / weight + 1; e-- > 0;) {
      m[index - 1] = e;
      rec(index - 1, left - e * weight);
    }
    m[index - 1] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(n, d);
  return out;
}

ChernReport chern_total(const CohomologyRing& ring) {
  const Quotient& q = ring.quotient();
  const std::size_t rank = q.rank();
  ChernReport report;
  report.parabolic = ring.parabolic;
  report.dim = ring.dim;

  std::vector<Vector> total(q.top_degree() + 1);
  for (unsigned d = 0; d <= q.top_degree(); ++d) total[d] = Vector(q.dim(d));
  total[0][0] = 1;
  report.c1_weight = Vector(rank);
  for (const auto& gamma : classify_roots(ring.parabolic).omitted) {
    const Vector linear(gamma.begin(), gamma.end());
    for (unsigned d = q.top_degree(); d >= 1; --d) {
      const Vector shifted = q.multiply_linear(d, total[d - 1], linear);
      for (std::size_t i = 0; i < shifted.size(); ++i) total[d][i] += shifted[i];
    }
    for (std::size_t i = 0; i < rank; ++i) report.c1_weight[i] += gamma[i];
  }
  for (std::size_t p = 1; p <= ring.dim; ++p) {
    report.chern_coords.push_back(total[p]);
    report.chern_classes.push_back(q.to_polynomial(static_cast<unsigned>(p), total[p]));
  }
  return report;
}

void epsilon_weight(ChernReport& report, const CohomologyRing& ring) {
  const RootSystem& rs = ring.parabolic.root_system;
  const auto& crossed = ring.parabolic.crossed;
  report.c1_fundamental_coords.clear();
  for (auto k : crossed) report.c1_fundamental_coords.push_back(rs.coroot_pairing(report.c1_weight, k));
  for (auto i : ring.parabolic.uncrossed())
    if (sgn(rs.coroot_pairing(report.c1_weight, i)) != 0)
      throw ConsistencyError("c_1 is not invariant under the Levi Weyl group");
  report.epsilon.reset();
  report.c1_multiple.reset();
  if (crossed.size() != 1) return;

  const Vector w = fundamental_weight(rs, crossed.front());
  Integer den = 1;
  for (const auto& x : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> scaled;
  for (const auto& x : w) {
    scaled.push_back(x.get_num() * (den / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.back().get_mpz_t());
  }
  RootVector eps;
  for (auto& s : scaled) eps.push_back(static_cast<int>(Integer(s / g).get_si()));
  const auto lead = std::find_if(eps.begin(), eps.end(), [](int x) { return x != 0; });
  if (lead != eps.end() && *lead < 0)
    for (auto& x : eps) x = -x;

  std::optional<Rational> m;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] == 0) {
      if (sgn(report.c1_weight[i]) != 0) throw ConsistencyError("c_1 is not a multiple of epsilon");
      continue;
    }
    const Rational ratio = report.c1_weight[i] / eps[i];
    if (m && *m != ratio) throw ConsistencyError("c_1 is not a multiple of epsilon");
    m = ratio;
  }
  report.epsilon = eps;
  report.c1_multiple = m.value_or(Rational(0));
}

namespace {

Vector monomial_value(const ChernMonomial& m, const std::map<ChernMonomial, Vector>& known,
                      const ChernReport& report, const Quotient& q) {
  std::size_t k = m.size();
  while (k > 0 && m[k - 1] == 0) --k;
  ChernMonomial parent = m;
  --parent[k - 1];
  const unsigned parent_degree = weighted_degree(parent);
  return q.multiply(parent_degree, known.at(parent), static_cast<unsigned>(k), report.chern_coords[k - 1]);
}

}  // namespace

std::vector<RelationSpace> find_relations(const ChernReport& report, const CohomologyRing& ring,
                                          const RelationOptions& options) {
  const Quotient& q = ring.quotient();
  const std::size_t n = report.chern_coords.size();
  const unsigned max_degree = options.max_degree.value_or(static_cast<unsigned>(ring.dim) + 1);
  std::vector<RelationSpace> out;
  if (n == 0) return out;

  std::map<ChernMonomial, Vector> values;
  values.emplace(ChernMonomial(n, 0), Vector{Rational(1)});

  for (unsigned d = 1; d <= max_degree; ++d) {
    RelationSpace space;
    space.degree = d;
    space.trivial = d > ring.dim;
    space.monomials = chern_monomials(n, d);
    std::vector<Vector> columns(space.monomials.size());
    const long count = static_cast<long>(columns.size());
    if (options.exec == Exec::serial) {
      for (long i = 0; i < count; ++i) columns[i] = monomial_value(space.monomials[i], values, report, q);
    } else {
      FLAGCOH_PARALLEL_FOR
      for (long i = 0; i < count; ++i) columns[i] = monomial_value(space.monomials[i], values, report, q);
    }
    const std::size_t rows = q.dim(d);
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    for (std::size_t c = 0; c < columns.size(); ++c) values.emplace(space.monomials[c], std::move(columns[c]));

    if (!space.trivial || options.include_trivial) {
      const Matrix kernel = nullspace(m);
      for (std::size_t r = 0; r < kernel.rows(); ++r) {
        ChernPolynomial rel;
        rel.n = n;
        for (std::size_t c = 0; c < kernel.cols(); ++c)
          if (sgn(kernel(r, c)) != 0) rel.terms.emplace_back(space.monomials[c], kernel(r, c));
        space.relations.push_back(std::move(rel));
      }
    }
    out.push_back(std::move(space));
  }
  return out;
}

ChernReport chern_report(const CohomologyRing& ring, const RelationOptions& options) {
  ChernReport report = chern_total(ring);
  epsilon_weight(report, ring);
  report.relations = find_relations(report, ring, options);
  return report;
}

Vector evaluate(const ChernPolynomial& p, const ChernReport& report, const CohomologyRing& ring) {
  const Quotient& q = ring.quotient();
  unsigned degree = 0;
  if (!p.terms.empty()) degree = weighted_degree(p.terms.front().first);
  Vector total(q.dim(degree));
  for (const auto& [m, c] : p.terms) {
    if (weighted_degree(m) != degree) throw InvalidInput("evaluate: relation is not weighted-homogeneous");
    Vector value{Rational(1)};
    unsigned value_degree = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) {
        value = q.multiply(value_degree, value, static_cast<unsigned>(i + 1), report.chern_coords[i]);
        value_degree += static_cast<unsigned>(i + 1);
      }
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += c * value[k];
  }
  return total;
}

Polynomial evaluate_by_division(const ChernPolynomial& p, const ChernReport& report,
                                const CohomologyRing& ring) {
  const std::size_t rank = ring.quotient().rank();
  Polynomial sum(rank);
  for (const auto& [m, c] : p.terms) {
    Polynomial prod = Polynomial::constant(rank, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) prod = prod * pow(report.chern_classes[i], m[i]);
    sum += prod;
  }
  return normal_form(ring.gb(), sum);
}

}  // namespace flagcoh
