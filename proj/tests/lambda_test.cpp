#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdq/lambda.hpp"

using namespace sdq;

namespace {
const DimVector e1{1, 0};
const DimVector e2{0, 1};
const DimVector zero2{0, 0};
}  // namespace

TEST_CASE("star on basis symbols") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    LambdaElement a = LambdaElement::basis(e1);
    LambdaElement b = LambdaElement::basis(e2);

    LambdaElement ab = star(q, a, b);
    REQUIRE(ab.terms.size() == 1);
    CHECK(ab.terms.at({1, 1}) == RationalFunction(1));

    LambdaElement ba = star(q, b, a);
    REQUIRE(ba.terms.size() == 1);
    CHECK(ba.terms.at({1, 1}) == RationalFunction::lefschetz_power(2));

    // Bilinearity over sums and scalars.
    LambdaElement sum = star(q, a + b, b);
    CHECK(sum == star(q, a, b) + star(q, b, b));
    CHECK(star(q, a * RationalFunction::lefschetz(), b) ==
          star(q, a, b) * RationalFunction::lefschetz());
}

TEST_CASE("zero coefficients are pruned") {
    LambdaElement a = LambdaElement::basis(e1);
    CHECK((a - a).terms.empty());
    CHECK((a - a) == LambdaElement());
    LambdaSdElement m = LambdaSdElement::basis(zero2);
    CHECK((m - m).terms.empty());
}

TEST_CASE("diamond action on basis symbols") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    LambdaElement a = LambdaElement::basis(e1);
    LambdaSdElement m0 = LambdaSdElement::basis(zero2);

    LambdaSdElement acted = diamond(q, a, m0);
    REQUIRE(acted.terms.size() == 1);
    CHECK(acted.terms.at({1, 1}) == RationalFunction(1));

    LambdaSdElement m1 = LambdaSdElement::basis({1, 1});
    LambdaSdElement acted1 = diamond(q, a, m1);
    REQUIRE(acted1.terms.size() == 1);
    CHECK(acted1.terms.at({2, 2}) == RationalFunction::lefschetz_power(-1));
}

TEST_CASE("involution relabels by the dual class") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    LambdaElement a = LambdaElement::basis(e1, RationalFunction::lefschetz());
    LambdaElement ai = involution(q, a);
    REQUIRE(ai.terms.size() == 1);
    CHECK(ai.terms.at(e2) == RationalFunction::lefschetz());
    CHECK(involution(q, ai) == a);

    LambdaElement b = LambdaElement::basis(e2);
    CHECK(involution(q, star(q, a, b)) == star(q, involution(q, b), involution(q, a)));
}

TEST_CASE("heart action") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    LambdaElement a = LambdaElement::basis(e1);
    LambdaSdElement m0 = LambdaSdElement::basis(zero2);
    LambdaSdElement h = heart(q, a, m0);
    REQUIRE(h.terms.size() == 1);
    // L^{-D(e1)} - L^{-D(e2)} = 1 - L^2 at the barred class.
    CHECK(h.terms.at({1, 1}) ==
          RationalFunction(1) - RationalFunction::lefschetz_power(2));
}

TEST_CASE("twisted Jacobi identity on a fixed instance") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,+-");
    LambdaElement x = LambdaElement::basis(e1) +
                      LambdaElement::basis({1, 1}, RationalFunction::lefschetz());
    LambdaElement y = LambdaElement::basis(e2);
    LambdaSdElement m = LambdaSdElement::basis({1, 1});

    auto bracket = [&](const LambdaElement& p, const LambdaElement& r) {
        return star(q, p, r) - star(q, r, p);
    };
    LambdaSdElement lhs = heart(q, x, heart(q, y, m)) - heart(q, y, heart(q, x, m));
    LambdaSdElement rhs = heart(q, bracket(x, y), m) -
                          heart(q, bracket(involution(q, x), y), m);
    CHECK(lhs == rhs);
}
