#include "flagcoh/parabolic.hpp"

#include <algorithm>
#include <cctype>

#include "flagcoh/error.hpp"

namespace flagcoh {

bool ParabolicSpec::is_crossed(std::size_t node) const {
  return std::binary_search(crossed.begin(), crossed.end(), node);
}

std::vector<std::size_t> ParabolicSpec::uncrossed() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < root_system.rank; ++i)
    if (!is_crossed(i)) out.push_back(i);
  return out;
}

std::string ParabolicSpec::label() const {
  std::string s = root_system.type_label;
  if (root_system.type != DynkinType::G && root_system.type != DynkinType::F)
    s += std::to_string(root_system.rank);
  s += "[crossed=";
  for (std::size_t k = 0; k < crossed.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(crossed[k] + 1);
  }
  return s + "]";
}

ParabolicSpec make_parabolic(RootSystem rs, std::vector<std::size_t> crossed) {
  std::sort(crossed.begin(), crossed.end());
  crossed.erase(std::unique(crossed.begin(), crossed.end()), crossed.end());
  for (auto c : crossed)
    if (c >= rs.rank)
      throw InvalidInput("crossed node " + std::to_string(c + 1) + " out of range for " +
                         rs.name());
  return ParabolicSpec{std::move(rs), std::move(crossed)};
}

ParabolicSpec parse_parabolic(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::string type = text.substr(0, pos);
  const std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::string rank_token = text.substr(digits_begin, pos - digits_begin);
  if (type.empty() || rank_token.empty() || rank_token.size() > 3)
    throw InvalidInput("cannot parse Dynkin spec '" + text + "': expected <TYPE><RANK>, got '" +
                       text.substr(0, pos) + "'");
  const std::size_t rank = std::stoul(rank_token);
  if (type != "A" && type != "B" && type != "C" && type != "D" && type != "F" && type != "G")
    throw InvalidInput("unknown Dynkin type '" + type + "' in '" + text + "'");
  RootSystem rs = build_root_system(type, rank);

  if (pos == text.size()) {
    std::vector<std::size_t> all(rs.rank);
    for (std::size_t i = 0; i < rs.rank; ++i) all[i] = i;
    return make_parabolic(std::move(rs), std::move(all));
  }

  const std::string rest = text.substr(pos);
  const std::string prefix = "[crossed=";
  if (rest.rfind(prefix, 0) != 0 || rest.back() != ']')
    throw InvalidInput("cannot parse Dynkin spec '" + text + "': unexpected '" + rest +
                       "', expected [crossed=i,j,...]");
  const std::string list = rest.substr(prefix.size(), rest.size() - prefix.size() - 1);
  std::vector<std::size_t> crossed;
  std::size_t start = 0;
  while (start < list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    const std::string token = list.substr(start, comma - start);
    const bool numeric = !token.empty() && token.size() <= 3 &&
                         std::all_of(token.begin(), token.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!numeric) throw InvalidInput("bad crossed node '" + token + "' in '" + text + "'");
    const std::size_t node = std::stoul(token);
    if (node == 0 || node > rs.rank)
      throw InvalidInput("crossed node '" + token + "' out of range 1.." +
                         std::to_string(rs.rank) + " in '" + text + "'");
    crossed.push_back(node - 1);
    start = comma + 1;
    if (comma + 1 == list.size()) throw InvalidInput("trailing ',' in '" + text + "'");
  }
  return make_parabolic(std::move(rs), std::move(crossed));
}

RootClassification classify_roots(const ParabolicSpec& p) {
  RootClassification out;
  for (const auto& root : p.root_system.positive_roots) {
    const bool touches = std::any_of(p.crossed.begin(), p.crossed.end(),
                                     [&](std::size_t c) { return root[c] != 0; });
    if (touches) {
      out.nilradical.push_back(root);
      RootVector neg = root;
      for (auto& x : neg) x = -x;
      out.omitted.push_back(std::move(neg));
    } else {
      out.levi.push_back(root);
    }
  }
  const std::size_t positive_levi = out.levi.size();
  for (std::size_t k = 0; k < positive_levi; ++k) {
    RootVector neg = out.levi[k];
    for (auto& x : neg) x = -x;
    out.levi.push_back(std::move(neg));
  }
  return out;
}

std::size_t dimension(const ParabolicSpec& p) { return classify_roots(p).omitted.size(); }

Vector delta_weight(const ParabolicSpec& p) {
  Vector delta(p.root_system.rank);
  for (const auto& root : classify_roots(p).omitted)
    for (std::size_t i = 0; i < root.size(); ++i) delta[i] += root[i];
  for (auto& x : delta) x /= 2;
  return delta;
}

std::vector<DeltaPairing> delta_pairing_table(const ParabolicSpec& p) {
  const Vector delta = delta_weight(p);
  std::vector<DeltaPairing> table;
  for (const auto& root : p.root_system.all_roots()) {
    Vector r(root.begin(), root.end());
    table.push_back(DeltaPairing{root, p.root_system.pairing(delta, r)});
  }
  return table;
}

std::vector<std::size_t> filtration_ranks(const ParabolicSpec& p) {
  std::vector<std::size_t> ranks;
  for (const auto& root : classify_roots(p).omitted) {
    int level = 0;
    for (auto c : p.crossed) level -= root[c];
    if (static_cast<std::size_t>(level) > ranks.size()) ranks.resize(level, 0);
    ++ranks[level - 1];
  }
  return ranks;
}

}  // namespace flagcoh
