#pragma once

#include "sdq/ratfun.hpp"

namespace sdq {

// Finite set with an involution: r two-element orbits and s fixed points.
struct Z2FinObject {
    long long r = 0;
    long long s = 0;
    long long cardinality() const { return 2 * r + s; }
    bool operator==(const Z2FinObject& o) const { return r == o.r && s == o.s; }
    bool operator<(const Z2FinObject& o) const { return r < o.r || (r == o.r && s < o.s); }
};

// k-th Bernoulli polynomial, exact coefficients, in the formal variable of
// Polynomial (read as x here).
Polynomial bernoulli_poly(int k);

// Three Bernoulli-polynomial summation identities, verified as exact
// polynomial equalities for 1 <= i <= n. Identities 2 and 3 evaluate the
// polynomials at x/2 and (x+1)/2; identity 3 has the zero right-hand side.
bool check_bernoulli_identity(int which, int i, int n);

// Alternating binomial sum over 0 <= q <= n-i with 0 <= k-q <= i-1, compared
// against its two-term closed form; needs 1 <= i <= n, 1 <= k <= n-1.
bool check_alt_binom(int i, int k, int n);

// Number of involution-equivariant surjections src onto dst, counted up to
// automorphisms of dst. Closed Stirling-number forms cover dst.s <= 1;
// larger dst.s falls back to exhaustive map enumeration (the automorphism
// group acts freely on surjections, so the division is exact).
long long count_z2_surjections(Z2FinObject src, Z2FinObject dst);

// Alternating sum (-1)^m over chains of non-bijective equivariant surjections
// from (r, s) ending at a set fixed pointwise, counted up to isomorphisms
// that fix the source. Equals (-1)^r (2r-1)!! for s <= 1 and 0 otherwise.
long long chain_sum_z2(long long r, long long s);

// Plain finite-set analogue: chains ending at the one-point set; equals
// (-1)^(n-1) (n-1)! for an n-element start.
long long chain_sum_fin(long long cardinality);

// Checks that sum_{r'=0..r} (-1)^{r'} (2r'-1)!! times the inner binomial-
// Stirling sum vanishes; holds for every r >= 1.
bool check_signed_surjection_sum(long long r);

long long stirling2(long long n, long long k);
long long double_factorial_odd(long long r);  // (2r-1)!!, with (-1)!! = 1

}  // namespace sdq
