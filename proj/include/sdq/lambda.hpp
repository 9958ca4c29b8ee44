#pragma once

#include <map>

#include "sdq/euler.hpp"
#include "sdq/quiver.hpp"
#include "sdq/ratfun.hpp"

namespace sdq {

// Formal finite sums of basis symbols indexed by dimension vectors with
// coefficients in Q(L). Zero coefficients are never stored.
struct LambdaElement {
    std::map<DimVector, RationalFunction> terms;

    static LambdaElement basis(const DimVector& a, const RationalFunction& c = RationalFunction(1));
    void add_term(const DimVector& a, const RationalFunction& c);
    bool operator==(const LambdaElement& o) const { return terms == o.terms; }
    LambdaElement operator+(const LambdaElement& o) const;
    LambdaElement operator-(const LambdaElement& o) const;
    LambdaElement operator*(const RationalFunction& c) const;
};

// Same shape over self-dual classes.
struct LambdaSdElement {
    std::map<DimVector, RationalFunction> terms;

    static LambdaSdElement basis(const DimVector& t,
                                 const RationalFunction& c = RationalFunction(1));
    void add_term(const DimVector& t, const RationalFunction& c);
    bool operator==(const LambdaSdElement& o) const { return terms == o.terms; }
    LambdaSdElement operator+(const LambdaSdElement& o) const;
    LambdaSdElement operator-(const LambdaSdElement& o) const;
    LambdaSdElement operator*(const RationalFunction& c) const;
};

// Multiplication twisted by the Euler form: on basis symbols,
// basis(a) * basis(b) = L^{-chi(a,b)} basis(a+b).
LambdaElement star(const SelfDualQuiver& q, const LambdaElement& x, const LambdaElement& y);

// Module action twisted by the self-dual Euler pairing: on basis symbols,
// basis(a) acts on basis(t) as L^{-chi_sd(a,t)} basis(a + a^dual + t).
LambdaSdElement diamond(const SelfDualQuiver& q, const LambdaElement& x, const LambdaSdElement& m);

// Basis relabeling by the dual class; an anti-homomorphism for star.
LambdaElement involution(const SelfDualQuiver& q, const LambdaElement& x);

// Twisted action heart(x, m) = diamond(x, m) - diamond(involution(x), m).
LambdaSdElement heart(const SelfDualQuiver& q, const LambdaElement& x, const LambdaSdElement& m);

}  // namespace sdq
