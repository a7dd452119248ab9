#pragma once

#include <vector>

#include "flagcoh/parallel.hpp"
#include "flagcoh/poly.hpp"
#include "flagcoh/rootsys.hpp"

namespace flagcoh {

// (1/|group|) sum_w w.p. `group` must be closed under composition.
Polynomial reynolds(const std::vector<WeylElement>& group, const Polynomial& p,
                    Exec exec = Exec::parallel);
Polynomial reynolds_serial(const std::vector<WeylElement>& group, const Polynomial& p);

// reynolds(group, l^k) for a linear form l = sum seed_i alpha_i, computed as
// the average of k-th powers over the orbit images of l.
Polynomial orbit_power_sum(const std::vector<WeylElement>& group, const Vector& seed, unsigned k,
                           Exec exec = Exec::parallel);

// Linear-form seed for the given retry attempt and copy index (copies are
// needed when a degree repeats, as for D_{2m}): rho plus a fixed rational
// perturbation scaled by attempt + copy + 1.
Vector invariant_seed(const RootSystem& rs, unsigned attempt, unsigned copy);

// det(d f_i / d alpha_j) is a nonzero polynomial. Certified by exact
// evaluation at a fixed sequence of integer points.
bool jacobian_nonzero(const std::vector<Polynomial>& invariants);

// rank-many homogeneous W-invariants of degrees exponent+1, primitive
// integral, algebraically independent. Throws ConsistencyError if the
// seeds for `attempt` give a vanishing Jacobian.
std::vector<Polynomial> fundamental_invariants(const RootSystem& rs,
                                               const std::vector<WeylElement>& group,
                                               unsigned attempt = 0, Exec exec = Exec::parallel);
std::vector<Polynomial> fundamental_invariants(const RootSystem& rs);

}  // namespace flagcoh
