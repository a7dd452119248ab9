#include "flagcoh/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "flagcoh/error.hpp"
#include "flagcoh/linalg.hpp"

namespace flagcoh {

namespace {

IntMatrix chain_cartan(std::size_t n) {
  IntMatrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

IntMatrix cartan_for(DynkinType type, std::size_t n) {
  IntMatrix a = chain_cartan(n);
  switch (type) {
    case DynkinType::A:
      break;
    case DynkinType::B:
      if (n == 2) {
        // node 0 short: r_0(alpha_1) = alpha_1 + 2 alpha_0
        a[0][1] = -2;
      } else {
        a[n - 1][n - 2] = -2;  // alpha_n short
      }
      break;
    case DynkinType::C:
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case DynkinType::D:
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case DynkinType::F:
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case DynkinType::G:
      a[0][1] = -3;  // node 0 short
      break;
  }
  return a;
}

std::vector<Rational> symmetrize(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || sgn(d[j]) != 0) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      queue.push_back(j);
    }
  }
  const Rational smallest = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= smallest;
  return d;
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<RootVector> close_positive_roots(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  std::vector<RootVector> all = layer;
  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        // p = length of the alpha_i-string below beta
        int p = 0;
        RootVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
        if (p - pairing > 0) {
          RootVector up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  std::sort(all.begin(), all.end(), [](const RootVector& x, const RootVector& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  return all;
}

void validate(DynkinType type, std::size_t rank, const std::string& label) {
  bool ok = false;
  switch (type) {
    case DynkinType::A: ok = rank >= 1; break;
    case DynkinType::B: ok = rank >= 2; break;
    case DynkinType::C: ok = rank >= 2; break;
    case DynkinType::D: ok = rank >= 3; break;
    case DynkinType::F: ok = rank == 4; break;
    case DynkinType::G: ok = rank == 2; break;
  }
  if (!ok || rank > kMaxRank)
    throw InvalidInput("unsupported root system '" + label.substr(0, 1) + std::to_string(rank) + "'");
}

}  // namespace

Rational RootSystem::pairing(const Vector& lambda, const Vector& mu) const {
  Rational acc;
  for (std::size_t i = 0; i < rank; ++i) {
    if (sgn(lambda[i]) == 0) continue;
    for (std::size_t j = 0; j < rank; ++j)
      if (sgn(mu[j]) != 0 && cartan[i][j] != 0) acc += lambda[i] * mu[j] * form(i, j);
  }
  return acc;
}

Rational RootSystem::pairing(const RootVector& lambda, const RootVector& mu) const {
  Vector l(lambda.begin(), lambda.end()), m(mu.begin(), mu.end());
  return pairing(l, m);
}

Rational RootSystem::coroot_pairing(const Vector& lambda, std::size_t i) const {
  Rational acc;
  for (std::size_t j = 0; j < rank; ++j) acc += lambda[j] * cartan[i][j];
  return acc;
}

std::vector<RootVector> RootSystem::all_roots() const {
  std::vector<RootVector> out = positive_roots;
  for (const auto& r : positive_roots) {
    RootVector neg(r);
    for (auto& x : neg) x = -x;
    out.push_back(std::move(neg));
  }
  return out;
}

std::vector<int> RootSystem::exponents() const {
  std::vector<int> e;
  const int n = static_cast<int>(rank);
  switch (type) {
    case DynkinType::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case DynkinType::B:
    case DynkinType::C:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case DynkinType::D:
      for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      std::sort(e.begin(), e.end());
      break;
    case DynkinType::F:
      e = {1, 5, 7, 11};
      break;
    case DynkinType::G:
      e = {1, 5};
      break;
  }
  return e;
}

std::vector<int> RootSystem::invariant_degrees() const {
  auto e = exponents();
  for (auto& x : e) ++x;
  return e;
}

unsigned long long RootSystem::weyl_order() const {
  unsigned long long order = 1;
  for (int d : invariant_degrees()) order *= static_cast<unsigned long long>(d);
  return order;
}

std::string RootSystem::name() const {
  if (type == DynkinType::G || type == DynkinType::F) return type_label;
  return type_label + std::to_string(rank);
}

RootVector WeylElement::apply(const RootVector& v) const {
  RootVector out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += action[i][j] * v[j];
  return out;
}

Vector WeylElement::apply(const Vector& v) const {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (action[i][j] != 0) out[i] += action[i][j] * v[j];
  return out;
}

RootSystem build_root_system(DynkinType type, std::size_t rank) {
  static const char* labels[] = {"A", "B", "C", "D", "F4", "G2"};
  std::string label = labels[static_cast<int>(type)];
  validate(type, rank, label);
  if (type == DynkinType::C && rank == 2) {
    type = DynkinType::B;
    label = "B";
  }
  RootSystem rs;
  rs.type = type;
  rs.type_label = label;
  rs.rank = rank;
  rs.cartan = cartan_for(type, rank);
  rs.symmetrizer = symmetrize(rs.cartan);
  rs.positive_roots = close_positive_roots(rs.cartan);
  return rs;
}

RootSystem build_root_system(const std::string& type_label, std::size_t rank) {
  if (type_label == "A") return build_root_system(DynkinType::A, rank);
  if (type_label == "B") return build_root_system(DynkinType::B, rank);
  if (type_label == "C") return build_root_system(DynkinType::C, rank);
  if (type_label == "D") return build_root_system(DynkinType::D, rank);
  if (type_label == "F" || type_label == "F4") return build_root_system(DynkinType::F, rank);
  if (type_label == "G" || type_label == "G2") return build_root_system(DynkinType::G, rank);
  throw InvalidInput("unknown Dynkin type '" + type_label + "'");
}

Vector reflect(const RootSystem& rs, std::size_t i, const Vector& lambda) {
  if (i >= rs.rank) throw InvalidInput("simple root index out of range: " + std::to_string(i + 1));
  Vector out = lambda;
  out[i] -= rs.coroot_pairing(lambda, i);
  return out;
}

RootVector reflect(const RootSystem& rs, std::size_t i, const RootVector& lambda) {
  if (i >= rs.rank) throw InvalidInput("simple root index out of range: " + std::to_string(i + 1));
  int pairing = 0;
  for (std::size_t j = 0; j < rs.rank; ++j) pairing += lambda[j] * rs.cartan[i][j];
  RootVector out = lambda;
  out[i] -= pairing;
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix simple_reflection_matrix(const RootSystem& rs, std::size_t i) {
  IntMatrix m = identity_matrix(rs.rank);
  // column j: alpha_j - a_ij alpha_i
  for (std::size_t j = 0; j < rs.rank; ++j) m[i][j] -= rs.cartan[i][j];
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

std::vector<WeylElement> enumerate_subgroup(const RootSystem& rs,
                                            const std::vector<std::size_t>& generators,
                                            unsigned long long cap) {
  std::vector<IntMatrix> reflections;
  for (auto g : generators) {
    if (g >= rs.rank) throw InvalidInput("simple root index out of range: " + std::to_string(g + 1));
    reflections.push_back(simple_reflection_matrix(rs, g));
  }

  std::vector<WeylElement> elements;
  std::map<IntMatrix, std::size_t> seen;
  elements.push_back(WeylElement{identity_matrix(rs.rank), 0, {}});
  seen.emplace(elements.front().action, 0);

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      IntMatrix next = multiply(elements[head].action, reflections[k]);
      if (seen.count(next)) continue;
      if (elements.size() >= cap)
        throw CapExceeded("Weyl group order exceeds cap " + std::to_string(cap) +
                              " (at least " + std::to_string(elements.size() + 1) + ")",
                          elements.size() + 1);
      WeylElement w;
      w.action = next;
      w.length = elements[head].length + 1;
      w.reduced_word = elements[head].reduced_word;
      w.reduced_word.push_back(generators[k]);
      seen.emplace(std::move(next), elements.size());
      elements.push_back(std::move(w));
    }
  }
  return elements;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, unsigned long long cap) {
  const unsigned long long order = rs.weyl_order();
  if (order > cap)
    throw CapExceeded("Weyl group of " + rs.name() + " has order " + std::to_string(order) +
                          ", above cap " + std::to_string(cap),
                      order);
  std::vector<std::size_t> gens(rs.rank);
  std::iota(gens.begin(), gens.end(), 0);
  auto group = enumerate_subgroup(rs, gens, cap);
  if (group.size() != order)
    throw ConsistencyError("Weyl group of " + rs.name() + " enumerated " +
                           std::to_string(group.size()) + " elements, expected " +
                           std::to_string(order));
  return group;
}

std::size_t count_inversions(const RootSystem& rs, const WeylElement& w) {
  std::size_t count = 0;
  for (const auto& root : rs.positive_roots) {
    const RootVector image = w.apply(root);
    if (std::any_of(image.begin(), image.end(), [](int x) { return x < 0; })) ++count;
  }
  return count;
}

std::vector<long long> length_generating_function(const std::vector<WeylElement>& group) {
  std::vector<long long> coeffs;
  for (const auto& w : group) {
    if (w.length >= coeffs.size()) coeffs.resize(w.length + 1, 0);
    ++coeffs[w.length];
  }
  return coeffs;
}

std::vector<long long> poincare_from_exponents(const std::vector<int>& exponents) {
  std::vector<long long> p{1};
  for (int m : exponents) {
    std::vector<long long> next(p.size() + m, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int k = 0; k <= m; ++k) next[i + k] += p[i];
    p = std::move(next);
  }
  return p;
}

Vector fundamental_weight(const RootSystem& rs, std::size_t k) {
  Matrix a(rs.rank, rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j) a(i, j) = rs.cartan[i][j];
  Vector e(rs.rank);
  e[k] = 1;
  return solve(a, e);
}

}  // namespace flagcoh
