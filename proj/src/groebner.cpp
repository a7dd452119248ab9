#include "flagcoh/groebner.hpp"

#include <algorithm>
#include <map>

#include "flagcoh/error.hpp"

namespace flagcoh {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
  for (const auto& g : generators)
    if (g.leading_monomial().divides(m)) return false;
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), 1 / f.leading_coeff()) -
         g.mul_term(l / g.leading_monomial(), 1 / g.leading_coeff());
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  std::map<Monomial, Rational, GrevlexGreater> work;
  for (const auto& t : p.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term> remainder;

  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors)
      if (g.leading_monomial().divides(m)) {
        divisor = &g;
        break;
      }
    if (!divisor) {
      remainder.push_back(Term{m, std::move(it->second)});
      work.erase(it);
      continue;
    }
    const Monomial q = m / divisor->leading_monomial();
    const Rational factor = it->second / divisor->leading_coeff();
    work.erase(it);
    const auto& terms = divisor->terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      const Monomial target = terms[k].monomial * q;
      auto [pos, inserted] = work.try_emplace(target);
      pos->second -= factor * terms[k].coeff;
      if (sgn(pos->second) == 0) work.erase(pos);
    }
  }
  return Polynomial::from_terms(p.rank(), std::move(remainder));
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned degree;
};

// Gebauer-Moeller style chain test: some other leading monomial strictly
// inside lcm(i, j) whose own pairs with i and j have strictly smaller lcm.
bool chain_criterion(const Pair& pair, const std::vector<Polynomial>& basis) {
  const Monomial& li = basis[pair.i].leading_monomial();
  const Monomial& lj = basis[pair.j].leading_monomial();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == pair.i || k == pair.j) continue;
    const Monomial& lk = basis[k].leading_monomial();
    if (!lk.divides(pair.lcm)) continue;
    if (Monomial::lcm(li, lk) == pair.lcm) continue;
    if (Monomial::lcm(lj, lk) == pair.lcm) continue;
    return true;
  }
  return false;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, unsigned max_degree) {
  GroebnerBasis gb;
  std::vector<Polynomial> inputs;
  for (const auto& g : generators) {
    gb.rank = std::max(gb.rank, g.rank());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw InvalidInput("buchberger: non-homogeneous generator " + to_string(g));
    if (static_cast<unsigned>(g.degree()) > max_degree)
      throw InvalidInput("buchberger: generator degree " + std::to_string(g.degree()) +
                         " exceeds max_degree " + std::to_string(max_degree));
    inputs.push_back(g);
  }
  std::stable_sort(inputs.begin(), inputs.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });

  std::vector<Polynomial> basis;
  std::vector<Pair> pairs;
  bool dropped = false;

  auto add_element = [&](Polynomial h) {
    h = h.monic();
    const std::size_t n = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < n; ++i) {
      const Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[n].leading_monomial());
      pairs.push_back(Pair{i, n, l, l.degree()});
    }
  };

  std::size_t next_input = 0;
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::vector<Polynomial> candidates;
    // Snapshot the pairs of this degree; new elements only create higher-degree pairs.
    std::vector<Pair> current;
    std::vector<Pair> rest;
    for (auto& p : pairs) (p.degree == d ? current : rest).push_back(p);
    pairs = std::move(rest);
    std::sort(current.begin(), current.end(), [](const Pair& a, const Pair& b) {
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    for (const auto& pair : current) {
      const auto& f = basis[pair.i];
      const auto& g = basis[pair.j];
      if (f.leading_monomial().coprime(g.leading_monomial())) continue;
      if (chain_criterion(pair, basis)) continue;
      candidates.push_back(s_polynomial(f, g));
    }
    while (next_input < inputs.size() && static_cast<unsigned>(inputs[next_input].degree()) == d)
      candidates.push_back(inputs[next_input++]);

    for (auto& c : candidates) {
      Polynomial h = reduce(c, basis);
      if (!h.is_zero()) add_element(std::move(h));
    }
  }
  for (const auto& p : pairs) {
    if (basis[p.i].leading_monomial().coprime(basis[p.j].leading_monomial())) continue;
    dropped = true;
    break;
  }

  // Minimalize, then inter-reduce tails.
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
      if (j != i && basis[j].leading_monomial().divides(basis[i].leading_monomial()) &&
          (!(basis[j].leading_monomial() == basis[i].leading_monomial()) || j < i))
        redundant = true;
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term lead = minimal[i].leading_term();
    const Polynomial tail = minimal[i] - Polynomial::term(minimal[i].rank(), lead.monomial, lead.coeff);
    minimal[i] = (Polynomial::term(minimal[i].rank(), lead.monomial, lead.coeff) + reduce(tail, others)).monic();
  }

  gb.generators = std::move(minimal);
  gb.complete_through = max_degree;
  gb.complete = !dropped;
  if (!gb.complete && gb.rank > 0) {
    // Every monomial of degree max_degree lies in the leading-term ideal, so
    // the ideal contains all higher degrees and no S-pair can add anything.
    bool top_vanishes = true;
    for (const auto& m : monomials_of_degree(gb.rank, max_degree))
      if (gb.is_standard(m)) {
        top_vanishes = false;
        break;
      }
    gb.complete = top_vanishes;
  }
  return gb;
}

Polynomial normal_form(const GroebnerBasis& gb, const Polynomial& p) {
  if (!p.is_zero() && !gb.covers_degree(static_cast<unsigned>(p.degree())))
    throw InvalidInput("normal_form: Groebner basis only certified through degree " +
                       std::to_string(gb.complete_through) + ", polynomial has degree " +
                       std::to_string(p.degree()));
  return reduce(p, gb.generators);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, unsigned degree) {
  if (!gb.covers_degree(degree))
    throw InvalidInput("standard_monomials: Groebner basis only certified through degree " +
                       std::to_string(gb.complete_through));
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(gb.rank, degree))
    if (gb.is_standard(m)) out.push_back(m);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace flagcoh
