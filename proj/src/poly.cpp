#include "flagcoh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "flagcoh/error.hpp"

namespace flagcoh {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxRank; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxRank; ++i) m.exps_[i] = exps_[i] + other.exps_[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxRank; ++i) m.exps_[i] = exps_[i] - other.exps_[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxRank; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxRank; ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = kMaxRank; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t rank, unsigned d) {
  std::vector<Monomial> out;
  if (rank == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial m;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == rank) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(i, e);
      rec(i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

Polynomial Polynomial::constant(std::size_t rank, const Rational& c) {
  Polynomial p(rank);
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t rank, std::size_t i) {
  return term(rank, Monomial::variable(i), 1);
}

Polynomial Polynomial::term(std::size_t rank, const Monomial& m, const Rational& c) {
  Polynomial p(rank);
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::linear(const Vector& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) p.terms_.push_back(Term{Monomial::variable(i), coeffs[i]});
  // alpha_1 > alpha_2 > ... already descending
  return p;
}

Polynomial Polynomial::linear(const RootVector& coeffs) {
  return linear(Vector(coeffs.begin(), coeffs.end()));
}

Polynomial Polynomial::from_terms(std::size_t rank, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p(rank);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

Polynomial Polynomial::homogeneous_component(unsigned d) const {
  Polynomial p(rank_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out(std::max(rank_, o.rank_));
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = grevlex_compare(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (sgn(s) != 0) out.terms_.push_back(Term{terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(rank_);
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(rank_);
  Polynomial out(rank_);
  out.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves grevlex order
  for (const auto& t : terms_) out.terms_.push_back(Term{t.monomial * m, t.coeff * c});
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
  Polynomial out(std::max(rank_, o.rank_));
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.terms_.push_back(Term{m, std::move(c)});
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == o.terms_[i].monomial) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / terms_.front().coeff);
}

Rational Polynomial::evaluate(const Vector& point) const {
  Rational acc;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < rank_; ++i)
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[i];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(i, e - 1);
    out.push_back(Term{m, t.coeff * e});
  }
  return from_terms(rank_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  std::vector<std::vector<Polynomial>> powers(rank_);
  for (std::size_t i = 0; i < rank_; ++i) powers[i].push_back(constant(rank_, 1));
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][e];
  };

  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(rank_, t.coeff);
    for (std::size_t i = 0; i < rank_; ++i)
      if (t.monomial[i]) prod = prod * power(i, t.monomial[i]);
    for (auto& pt : prod.terms_) acc[pt.monomial] += pt.coeff;
  }
  Polynomial out(rank_);
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.terms_.push_back(Term{m, std::move(c)});
  return out;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.rank(), 1);
  Polynomial base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial weyl_act(const WeylElement& w, const Polynomial& p) {
  const std::size_t r = p.rank();
  std::vector<Polynomial> images;
  images.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    RootVector column(r);
    for (std::size_t j = 0; j < r; ++j) column[j] = w.action[j][i];
    images.push_back(Polynomial::linear(column));
  }
  return p.substitute(images);
}

std::string to_string(const Monomial& m, std::size_t rank, const std::string& var) {
  std::string s;
  for (std::size_t i = 0; i < rank; ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += var + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

std::string coefficient_prefix(const Rational& magnitude, bool has_monomial) {
  if (!has_monomial) return is_integral(magnitude) ? magnitude.get_str() : "(" + magnitude.get_str() + ")";
  if (magnitude == 1) return "";
  if (is_integral(magnitude)) return magnitude.get_str() + "*";
  return "(" + magnitude.get_str() + ")*";
}

}  // namespace

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = abs(t.coeff);
    const bool has_monomial = t.monomial.degree() > 0;
    s += coefficient_prefix(magnitude, has_monomial);
    if (has_monomial) s += to_string(t.monomial, p.rank(), var);
  }
  return s;
}

std::string to_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  auto var = [&](std::size_t i) -> std::string {
    if (p.rank() == 2) return i == 0 ? "\\alpha" : "\\beta";
    return "\\alpha_{" + std::to_string(i + 1) + "}";
  };
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = abs(t.coeff);
    const bool has_monomial = t.monomial.degree() > 0;
    if (!has_monomial || magnitude != 1) {
      if (is_integral(magnitude)) s += magnitude.get_str();
      else s += "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
      if (has_monomial) s += " \\, ";
    }
    for (std::size_t i = 0; i < p.rank(); ++i) {
      if (!t.monomial[i]) continue;
      s += var(i);
      if (t.monomial[i] > 1) s += "^{" + std::to_string(t.monomial[i]) + "}";
      s += ' ';
    }
    if (s.back() == ' ') s.pop_back();
  }
  return s;
}

namespace {

// Recursive-descent parser over the canonical rendering grammar.
class PolyParser {
 public:
  PolyParser(const std::string& text, std::size_t rank, const std::string& var)
      : text_(text), rank_(rank), var_(var) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_, 1) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw InvalidInput("cannot parse polynomial '" + text_ + "' at " + std::to_string(pos_) +
                       ": " + why);
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  // Unary minus binds looser than '^': -x^2 is -(x^2).
  Polynomial factor() {
    if (eat('-')) return -factor();
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      const unsigned e = static_cast<unsigned>(integer().get_ui());
      base = pow(base, e);
    }
    return base;
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(integer());
      if (eat('/')) {
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        q /= Rational(den);
      }
      return Polynomial::constant(rank_, q);
    }
    if (text_.compare(pos_, var_.size(), var_) == 0) {
      pos_ += var_.size();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index");
      const std::size_t index = std::stoul(text_.substr(start, pos_ - start));
      if (index == 0 || index > rank_) fail("variable index out of range");
      return Polynomial::variable(rank_, index - 1);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t rank_;
  const std::string& var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t rank, const std::string& var) {
  return PolyParser(text, rank, var).parse();
}

}  // namespace flagcoh

namespace flagcoh {

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : p.terms()) {
    Integer scaled = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(p.leading_coeff()) < 0) factor = -factor;
  return p * factor;
}

}  // namespace flagcoh
