#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sdq/quiver.hpp"
#include "sdq/ratfun.hpp"

namespace sdq {

struct ZeroClassError : std::runtime_error {
    ZeroClassError() : std::runtime_error("slope of the zero class is undefined") {}
};

// Rational weights indexed by vertex; the slope of a nonzero class is
// (sum_i w_i a_i) / (sum_i a_i).
struct StabilityFunction {
    std::vector<Rational> weights;

    StabilityFunction() = default;
    explicit StabilityFunction(std::vector<Rational> w) : weights(std::move(w)) {}
    static StabilityFunction trivial(int num_vertices) {
        return StabilityFunction(std::vector<Rational>(num_vertices, Rational(0)));
    }

    Rational pairing(const DimVector& a) const;  // sum_i w_i a_i
    bool operator==(const StabilityFunction& o) const { return weights == o.weights; }
    std::string to_string() const;
};

Rational slope(const StabilityFunction& tau, const DimVector& a);

bool is_selfdual(const StabilityFunction& tau, const SelfDualQuiver& q);

// -1, 0, +1 as slope(a) compares to slope(b); exact, no division.
int compare_slopes(const StabilityFunction& tau, const DimVector& a, const DimVector& b);

// -1, 0, +1 as slope(a) compares to 0.
int slope_sign(const StabilityFunction& tau, const DimVector& a);

// Certified over all nonzero class pairs of total dimension <= box:
// slope_tau(a) <= slope_tau(b) implies slope_tilde(a) <= slope_tilde(b).
bool dominates(const StabilityFunction& tau_tilde, const StabilityFunction& tau, int num_vertices,
               long long box);

// Accepts the token "trivial", inline JSON {"vertex-id": "p/q", ...}, or a path
// to a JSON file with the same shape. Every vertex must receive a weight.
StabilityFunction load_stability(const std::string& spec, const SelfDualQuiver& q);

}  // namespace sdq
