#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flagcoh/poly.hpp"

namespace flagcoh::testing {

inline std::string golden_path(const std::string& name) { return std::string(FLAGCOH_GOLDEN_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

// Non-comment lines of a '|'-separated golden file.
inline std::vector<std::vector<std::string>> read_table(const std::string& name) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(golden_path(name));
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    rows.push_back(split(line, '|'));
  }
  return rows;
}

// Small random polynomial with integer coefficients in [-3, 3] and degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937& rng, std::size_t rank, unsigned max_degree,
                                    std::size_t terms = 4) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Polynomial p(rank);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto mons = monomials_of_degree(rank, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    p += Polynomial::term(rank, mons[pick(rng)], coeff(rng));
  }
  return p;
}

inline Polynomial random_homogeneous(std::mt19937& rng, std::size_t rank, unsigned degree,
                                     std::size_t terms = 4) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial p(rank);
  const auto mons = monomials_of_degree(rank, degree);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  for (std::size_t t = 0; t < terms; ++t) p += Polynomial::term(rank, mons[pick(rng)], coeff(rng));
  return p;
}

}  // namespace flagcoh::testing
