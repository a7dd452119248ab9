#include "doctest.h"
#include "support.hpp"

#include "flagcoh/chern.hpp"
#include "flagcoh/error.hpp"

using namespace flagcoh;

namespace {

ChernReport report_for(const char* text, RelationOptions options = {}) {
  return chern_report(parabolic_ring(parse_parabolic(text)), options);
}

const RelationSpace& space_at(const ChernReport& r, unsigned d) {
  for (const auto& s : r.relations)
    if (s.degree == d) return s;
  throw std::out_of_range("no relation space in that degree");
}

// Coefficient vector of p over the monomial list of its weighted degree.
Vector over_monomials(const ChernPolynomial& p, const RelationSpace& space) {
  Vector v(space.monomials.size());
  for (const auto& [m, c] : p.terms)
    for (std::size_t i = 0; i < space.monomials.size(); ++i)
      if (space.monomials[i] == m) v[i] += c;
  return v;
}

Matrix relation_matrix(const RelationSpace& space) {
  std::vector<Vector> rows;
  for (const auto& r : space.relations) rows.push_back(over_monomials(r, space));
  return Matrix::from_rows(rows, space.monomials.size());
}

ChernMonomial mono(std::size_t n, std::vector<std::pair<std::size_t, unsigned>> powers) {
  ChernMonomial m(n, 0);
  for (auto [k, e] : powers) m[k - 1] = e;
  return m;
}

// c_p - a * c_1^p
ChernPolynomial solved_form(std::size_t n, unsigned p, const Rational& a) {
  ChernPolynomial f;
  f.n = n;
  f.terms.emplace_back(mono(n, {{p, 1}}), Rational(1));
  f.terms.emplace_back(mono(n, {{1, p}}), -a);
  return f;
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

TEST_CASE("Chern monomial ordering puts the pure c1 power last") {
  const auto ms = chern_monomials(3, 3);
  REQUIRE(ms.size() == 3);
  CHECK(to_string(ms[0]) == "c3");
  CHECK(to_string(ms[1]) == "c1*c2");
  CHECK(to_string(ms[2]) == "c1^3");
  CHECK(chern_monomials(4, 4).size() == 5);
}

TEST_CASE("A2 flag variety Chern classes") {
  const ChernReport r = report_for("A2[crossed=1,2]");
  REQUIRE(r.chern_classes.size() == 3);
  CHECK(r.chern_classes[0] == parse_polynomial("-2*a1 - 2*a2", 2));
  CHECK(r.chern_classes[1] == parse_polynomial("2*a1*a2", 2));
  CHECK(r.chern_classes[2] == parse_polynomial("a2^3", 2));
  CHECK(r.c1_fundamental_coords == Vector{-2, -2});
  CHECK(!r.epsilon);
}

TEST_CASE("P^2 relation and epsilon") {
  const ChernReport r = report_for("A2[crossed=1]");
  CHECK(r.epsilon == RootVector{2, 1});
  CHECK(*r.c1_multiple == -1);
  const RelationSpace& s2 = space_at(r, 2);
  REQUIRE(s2.relations.size() == 1);
  CHECK(to_string(s2.relations[0]) == "c2 - (1/3)*c1^2");
  CHECK(space_at(r, 1).relations.empty());
}

TEST_CASE("Gunning relations on projective spaces") {
  for (unsigned n = 2; n <= 5; ++n) {
    const std::string text = "A" + std::to_string(n) + "[crossed=1]";
    const ChernReport r = report_for(text.c_str());
    CAPTURE(text);
    CHECK(r.dim == n);
    for (unsigned p = 1; p <= n; ++p) {
      Rational a = binomial(n + 1, p);
      for (unsigned k = 0; k < p; ++k) a /= Rational(n + 1);
      const RelationSpace& space = space_at(r, p);
      const ChernPolynomial gunning = solved_form(n, p, a);
      if (p == 1) {
        CHECK(is_zero(evaluate(gunning, r, parabolic_ring(parse_parabolic(text)))));
        continue;
      }
      CHECK(in_row_span(relation_matrix(space), over_monomials(gunning, space)));
    }
  }
}

TEST_CASE("relations vanish by both evaluation routes") {
  for (const char* text : {"A2[crossed=1,2]", "B2[crossed=1]", "G2[crossed=1]", "A3[crossed=2]", "B3[crossed=3]"}) {
    const CohomologyRing ring = parabolic_ring(parse_parabolic(text));
    const ChernReport r = chern_report(ring);
    CAPTURE(text);
    for (const auto& space : r.relations)
      for (const auto& rel : space.relations) {
        CHECK(is_zero(evaluate(rel, r, ring)));
        CHECK(evaluate_by_division(rel, r, ring).is_zero());
      }
  }
}

TEST_CASE("relation spaces are the full kernels") {
  // dim(relations) + dim(span of monomial values) = number of monomials
  const CohomologyRing ring = parabolic_ring(parse_parabolic("A3[crossed=2]"));
  const ChernReport r = chern_report(ring);
  for (const auto& space : r.relations) {
    if (space.trivial) continue;
    std::vector<Vector> values;
    for (const auto& m : space.monomials) {
      ChernPolynomial single;
      single.n = space.monomials.front().size();
      single.terms.emplace_back(m, Rational(1));
      values.push_back(evaluate(single, r, ring));
    }
    const std::size_t image = rank(Matrix::from_rows(values, ring.quotient().dim(space.degree)));
    CHECK(image + space.relations.size() == space.monomials.size());
  }
}

TEST_CASE("three-dimensional quadric and P^3 from B2") {
  // Q^3: c(T) = (1+h)^5 / (1+2h) with c1 = 3h, so c2 = 4h^2 = (4/9) c1^2.
  const ChernReport quadric = report_for("B2[crossed=2]");
  const RelationSpace& q2 = space_at(quadric, 2);
  CHECK(in_row_span(relation_matrix(q2), over_monomials(solved_form(3, 2, Rational(4, 9)), q2)));
  // P^3 = Sp(4)/P: c2 = 6h^2 = (3/8) c1^2.
  const ChernReport p3 = report_for("B2[crossed=1]");
  const RelationSpace& p2 = space_at(p3, 2);
  CHECK(in_row_span(relation_matrix(p2), over_monomials(solved_form(3, 2, Rational(3, 8)), p2)));
}

TEST_CASE("P^1 has only the trivial relation") {
  RelationOptions opts;
  opts.include_trivial = true;
  const ChernReport r = report_for("A1[crossed=1]", opts);
  REQUIRE(r.relations.size() == 2);
  CHECK(r.relations[0].relations.empty());
  CHECK(r.relations[1].trivial);
  REQUIRE(r.relations[1].relations.size() == 1);
  CHECK(to_string(r.relations[1].relations[0]) == "c1^2");
}

TEST_CASE("c1 to the dimension is nonzero on projective spaces") {
  for (unsigned n = 1; n <= 4; ++n) {
    const std::string text = "A" + std::to_string(n) + "[crossed=1]";
    const CohomologyRing ring = parabolic_ring(parse_parabolic(text));
    const ChernReport r = chern_report(ring);
    CHECK(ring.betti == std::vector<std::size_t>(n + 1, 1));
    ChernPolynomial top;
    top.n = n;
    top.terms.emplace_back(mono(n, {{1, n}}), Rational(1));
    CHECK(!is_zero(evaluate(top, r, ring)));
  }
}

TEST_CASE("Chern classes are fixed by the Levi reflections") {
  for (const char* text : {"B3[crossed=2]", "C3[crossed=1,3]", "G2[crossed=2]", "A3[crossed=]"}) {
    const CohomologyRing ring = parabolic_ring(parse_parabolic(text));
    const ChernReport r = chern_total(ring);
    for (std::size_t p = 0; p < r.chern_coords.size(); ++p) CHECK(is_levi_fixed(ring, p + 1, r.chern_coords[p]));
  }
}

TEST_CASE("serial and parallel relation searches agree") {
  const CohomologyRing ring = parabolic_ring(parse_parabolic("B3[crossed=1,2]"));
  const ChernReport base = chern_total(ring);
  RelationOptions serial, parallel;
  serial.exec = Exec::serial;
  const auto a = find_relations(base, ring, serial);
  const auto b = find_relations(base, ring, parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].relations.size() == b[i].relations.size());
    for (std::size_t k = 0; k < a[i].relations.size(); ++k)
      CHECK(to_string(a[i].relations[k]) == to_string(b[i].relations[k]));
  }
}

TEST_CASE("epsilon is primitive and proportional to c1") {
  for (const char* text : {"A3[crossed=2]", "B3[crossed=1]", "G2[crossed=1]", "G2[crossed=2]", "C3[crossed=3]"}) {
    const ChernReport r = report_for(text);
    REQUIRE(r.epsilon);
    mpz_class g = 0;
    for (int x : *r.epsilon) g = gcd(g, mpz_class(x));
    CHECK(g == 1);
    for (std::size_t i = 0; i < r.c1_weight.size(); ++i) CHECK(r.c1_weight[i] == *r.c1_multiple * (*r.epsilon)[i]);
  }
}
