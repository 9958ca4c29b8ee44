#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sdq/quiver.hpp"
#include "sdq/ratfun.hpp"

namespace sdq {

// One multiplicand (1 + c * x^e)^p of a closed-form generating series in
// x = q^{1/2}; coefficients may involve L.
struct SeriesFactor {
    RationalFunction c;
    int e = 1;
    Rational p;
};

// Coefficients of x^0 .. x^max_exp of the product of the factors, expanded
// with the generalized binomial series.
std::vector<RationalFunction> expand_series(const std::vector<SeriesFactor>& factors, int max_exp);

// Conjectured closed form of the generating series of the two-vertex cyclic
// quiver's self-dual invariants at stability (1, -1), by kind: 'J' (motivic
// J^sd), 'c' (chiJ^sd), 'D' (DT^sd). The shape depends only on the sign
// pattern (u, v1 v2).
std::vector<SeriesFactor> conjectured_series_factors(const SelfDualQuiver& q, char kind);

// Entry point used by both the binary and the tests. Writes normal output to
// `out`, diagnostics to `err`. Returns 0 on success, 1 on verification
// failure, 2 on input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdq
