#pragma once

#include <vector>

#include "sdq/quiver.hpp"

namespace sdq {

// Euler form of the quiver: chi(a, b) = sum_i a_i b_i - sum_{arrows} a_{tgt} b_{src}.
// All results are checked 64-bit integers; overflow throws std::overflow_error.
long long chi(const SelfDualQuiver& q, const DimVector& a, const DimVector& b);

// Quadratic correction D(alpha) measuring the self-dual Euler pairing against
// the zero class: chi_sd(alpha, 0). Always an integer despite half-integral terms.
long long chi_sd_zero(const SelfDualQuiver& q, const DimVector& alpha);

// Self-dual Euler pairing chi_sd(alpha, theta) = chi(alpha, theta) + D(alpha).
long long chi_sd(const SelfDualQuiver& q, const DimVector& alpha, const DimVector& theta);

// sum_{i<j} chi(parts[i], parts[j])
long long multi_chi(const SelfDualQuiver& q, const std::vector<DimVector>& parts);

// sum_{i<j} (chi(parts[i], parts[j]) + chi(parts[i], parts[j]^dual))
//   + sum_i chi_sd(parts[i], rho)
long long multi_chi_sd(const SelfDualQuiver& q, const std::vector<DimVector>& parts,
                       const DimVector& rho);

// Antisymmetrized forms entering the Lie-theoretic identities.
long long chi_bar(const SelfDualQuiver& q, const DimVector& a, const DimVector& b);
long long chi_bar_sd(const SelfDualQuiver& q, const DimVector& a, const DimVector& theta);

// prod_{j=2}^{n} sum_{i<j} chi_bar(parts[i], parts[j]); empty/singleton product is 1.
long long chi_tilde(const SelfDualQuiver& q, const std::vector<DimVector>& parts);

// Grouped variant: for groups (alpha_{i,1}, ..., alpha_{i,m_i}) and a residual
// self-dual class rho,
//   prod_i chi_tilde(bars of group i)
//   * prod_i chi_bar_sd(sum of group i, bar-sum of all later groups + rho)
// where bar(alpha) = alpha + alpha^dual.
long long chi_tilde_sd(const SelfDualQuiver& q, const std::vector<std::vector<DimVector>>& groups,
                       const DimVector& rho);

}  // namespace sdq
