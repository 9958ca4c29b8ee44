#include "sdq/lambda.hpp"

namespace sdq {

LambdaElement LambdaElement::basis(const DimVector& a, const RationalFunction& c) {
    LambdaElement x;
    x.add_term(a, c);
    return x;
}

void LambdaElement::add_term(const DimVector& a, const RationalFunction& c) {
    auto it = terms.find(a);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

LambdaElement LambdaElement::operator+(const LambdaElement& o) const {
    LambdaElement out = *this;
    for (const auto& [a, c] : o.terms) out.add_term(a, c);
    return out;
}

LambdaElement LambdaElement::operator-(const LambdaElement& o) const {
    LambdaElement out = *this;
    for (const auto& [a, c] : o.terms) out.add_term(a, -c);
    return out;
}

LambdaElement LambdaElement::operator*(const RationalFunction& c) const {
    LambdaElement out;
    for (const auto& [a, coeff] : terms) out.add_term(a, coeff * c);
    return out;
}

LambdaSdElement LambdaSdElement::basis(const DimVector& t, const RationalFunction& c) {
    LambdaSdElement x;
    x.add_term(t, c);
    return x;
}

void LambdaSdElement::add_term(const DimVector& t, const RationalFunction& c) {
    auto it = terms.find(t);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

LambdaSdElement LambdaSdElement::operator+(const LambdaSdElement& o) const {
    LambdaSdElement out = *this;
    for (const auto& [t, c] : o.terms) out.add_term(t, c);
    return out;
}

LambdaSdElement LambdaSdElement::operator-(const LambdaSdElement& o) const {
    LambdaSdElement out = *this;
    for (const auto& [t, c] : o.terms) out.add_term(t, -c);
    return out;
}

LambdaSdElement LambdaSdElement::operator*(const RationalFunction& c) const {
    LambdaSdElement out;
    for (const auto& [t, coeff] : terms) out.add_term(t, coeff * c);
    return out;
}

LambdaElement star(const SelfDualQuiver& q, const LambdaElement& x, const LambdaElement& y) {
    LambdaElement out;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms)
            out.add_term(add(a, b),
                         ca * cb * RationalFunction::lefschetz_power(-chi(q, a, b)));
    return out;
}

LambdaSdElement diamond(const SelfDualQuiver& q, const LambdaElement& x,
                        const LambdaSdElement& m) {
    LambdaSdElement out;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [t, cm] : m.terms)
            out.add_term(bar_add(q, a, t),
                         ca * cm * RationalFunction::lefschetz_power(-chi_sd(q, a, t)));
    return out;
}

LambdaElement involution(const SelfDualQuiver& q, const LambdaElement& x) {
    LambdaElement out;
    for (const auto& [a, c] : x.terms) out.add_term(dual_class(q, a), c);
    return out;
}

LambdaSdElement heart(const SelfDualQuiver& q, const LambdaElement& x, const LambdaSdElement& m) {
    return diamond(q, x, m) - diamond(q, involution(q, x), m);
}

}  // namespace sdq
