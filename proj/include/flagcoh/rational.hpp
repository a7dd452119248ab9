#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flagcoh {

using Rational = mpq_class;
using Integer = mpz_class;

// Lowest-terms "p/q" (or "p" when integral).
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

using Vector = std::vector<Rational>;

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace flagcoh
