#pragma once

#include <map>
#include <string>
#include <tuple>

#include "sdq/euler.hpp"
#include "sdq/quiver.hpp"
#include "sdq/ratfun.hpp"
#include "sdq/stability.hpp"
#include "sdq/wallcross.hpp"

namespace sdq {

// Raised when a computed J or J^sd fails the guaranteed no-pole property at
// L = 1; always indicates an implementation bug, never bad user input.
struct NoPoleViolation : std::runtime_error {
    explicit NoPoleViolation(const std::string& what) : std::runtime_error(what) {}
};

enum class GroupFamily { GL, O, Sp };

// Motive of the classifying stack of the group: GL(n), O(n), Sp(n even).
RationalFunction motive_classifying(GroupFamily family, long long n);

// Computes motivic invariants I, I^sd, J, J^sd of a self-dual quiver and their
// numerical specializations at L = 1. Results are memoized per (stability,
// class, kind); the engine is cheap to construct.
class InvariantEngine {
  public:
    explicit InvariantEngine(SelfDualQuiver q) : q_(std::move(q)) {}

    const SelfDualQuiver& quiver() const { return q_; }

    // Trivial-stability motives: closed products over arrows and vertices.
    RationalFunction I_trivial(const DimVector& alpha);
    RationalFunction Isd_trivial(const DimVector& theta);

    // Finite wall-crossing sums from trivial stability; I(0, tau) = 1.
    RationalFunction I(const DimVector& alpha, const StabilityFunction& tau);
    RationalFunction Isd(const DimVector& theta, const StabilityFunction& tau);

    // Log-type relations on top of I/I^sd; Jsd(0, tau) = 1. Both enforce the
    // no-pole property at L = 1.
    RationalFunction J(const DimVector& alpha, const StabilityFunction& tau);
    RationalFunction Jsd(const DimVector& theta, const StabilityFunction& tau);

    // Numerical invariants at L = 1 and their signed variants.
    Rational chiJ(const DimVector& alpha, const StabilityFunction& tau);
    Rational chiJsd(const DimVector& theta, const StabilityFunction& tau);
    Rational DT(const DimVector& alpha, const StabilityFunction& tau);
    Rational DTsd(const DimVector& theta, const StabilityFunction& tau);

    // Invariants at tau_tilde assembled from tau-side invariants via the
    // S/U/S^sd/U^sd coefficient sums; must agree with direct computation.
    RationalFunction wallcross_I(const DimVector& alpha, const StabilityFunction& tau,
                                 const StabilityFunction& tau_tilde);
    RationalFunction wallcross_Isd(const DimVector& theta, const StabilityFunction& tau,
                                   const StabilityFunction& tau_tilde);
    RationalFunction wallcross_J(const DimVector& alpha, const StabilityFunction& tau,
                                 const StabilityFunction& tau_tilde);
    RationalFunction wallcross_Jsd(const DimVector& theta, const StabilityFunction& tau,
                                   const StabilityFunction& tau_tilde);

    // Right inverses of the log-type relations: rebuild I from J values and
    // I^sd from J/J^sd values. Exposed for round-trip verification.
    RationalFunction I_from_J(const DimVector& alpha, const StabilityFunction& tau);
    RationalFunction Isd_from_Jsd(const DimVector& theta, const StabilityFunction& tau);

  private:
    using Key = std::tuple<char, std::string, std::string>;

    RationalFunction& memo_slot(char kind, const StabilityFunction& tau, const DimVector& a,
                                bool& present);
    void require_selfdual_stability(const StabilityFunction& tau) const;

    SelfDualQuiver q_;
    std::map<Key, RationalFunction> cache_;
};

}  // namespace sdq
