#pragma once

#include <vector>

#include "sdq/quiver.hpp"
#include "sdq/ratfun.hpp"
#include "sdq/stability.hpp"

namespace sdq {

// Sign coefficient comparing consecutive slopes under tau against the
// prefix/suffix slopes under tau_tilde; values in {-1, 0, +1}. Requires a
// nonempty list; the single-class value is 1.
int coeff_S(const std::vector<DimVector>& classes, const StabilityFunction& tau,
            const StabilityFunction& tau_tilde);

// Self-dual counterpart with the sentinel slope 0 after the last class and
// prefix signs under tau_tilde; the empty list gives 1.
int coeff_S_sd(const std::vector<DimVector>& classes, const StabilityFunction& tau,
               const StabilityFunction& tau_tilde);

// Rational coefficient transforming equal-slope invariants between stability
// functions: sum over nested block chains of S-products with factorial weights.
Rational coeff_U(const std::vector<DimVector>& classes, const StabilityFunction& tau,
                 const StabilityFunction& tau_tilde);

// Self-dual counterpart: chains may stop before the end of the list; the tail
// classes must have tau-slope 0 and carry weight 1/(2^k k!).
Rational coeff_U_sd(const std::vector<DimVector>& classes, const StabilityFunction& tau,
                    const StabilityFunction& tau_tilde);

}  // namespace sdq
