#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdq/euler.hpp"

using namespace sdq;

namespace {
const DimVector e1{1, 0};
const DimVector e2{0, 1};
}  // namespace

TEST_CASE("euler form on the two-vertex cyclic quiver") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    CHECK(chi(q, e1, e1) == 1);
    CHECK(chi(q, e2, e2) == 1);
    CHECK(chi(q, e1, e2) == 0);
    CHECK(chi(q, e2, e1) == -2);
    CHECK(chi(q, {1, 1}, {1, 1}) == 0);
}

TEST_CASE("euler form on loop quivers") {
    // m loops at one vertex: chi(a, b) = (1 - m) a b.
    CHECK(chi(builtin_quiver("point:+"), {3}, {4}) == 12);
    CHECK(chi(builtin_quiver("loop:1:+:+"), {3}, {4}) == 0);
    CHECK(chi(builtin_quiver("loop:3:+:+--"), {2}, {5}) == -20);
}

TEST_CASE("self-dual correction term") {
    SelfDualQuiver v1 = builtin_quiver("atilde1:+,++");
    SelfDualQuiver v2 = builtin_quiver("atilde1:+,+-");
    SelfDualQuiver v3 = builtin_quiver("atilde1:+,--");
    // v1: a1 a2 - a2 (a2 + 1); v2: a1 a2 - a2^2; v3: a1 a2 - a2 (a2 - 1).
    CHECK(chi_sd_zero(v1, e1) == 0);
    CHECK(chi_sd_zero(v1, e2) == -2);
    CHECK(chi_sd_zero(v1, {1, 1}) == -1);
    CHECK(chi_sd_zero(v1, {2, 2}) == -2);
    CHECK(chi_sd_zero(v2, e2) == -1);
    CHECK(chi_sd_zero(v2, {2, 2}) == 0);
    CHECK(chi_sd_zero(v3, e2) == 0);
    CHECK(chi_sd_zero(v3, {2, 2}) == 2);
    // The mixed-sign correction only depends on the sign pattern, not on u.
    CHECK(chi_sd_zero(builtin_quiver("atilde1:-,+-"), {2, 2}) == 0);

    CHECK(chi_sd_zero(builtin_quiver("point:+"), {2}) == 1);
    CHECK(chi_sd_zero(builtin_quiver("point:+"), {3}) == 3);
    CHECK(chi_sd_zero(builtin_quiver("point:-"), {2}) == 3);
    CHECK(chi_sd_zero(builtin_quiver("loop:1:+:+"), {5}) == -5);
    CHECK(chi_sd_zero(builtin_quiver("loop:2:+:+-"), {2}) == -3);
}

TEST_CASE("self-dual pairing combines both pieces") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    CHECK(chi_sd(q, e1, {1, 1}) == 1);
    CHECK(chi_sd(q, e2, {1, 1}) == chi(q, e2, {1, 1}) + chi_sd_zero(q, e2));
    CHECK(chi_sd(q, {2, 2}, {0, 0}) == -2);
}

TEST_CASE("pairwise sums over tuples") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    CHECK(multi_chi(q, {e1, e2}) == 0);
    CHECK(multi_chi(q, {e2, e1}) == -2);
    CHECK(multi_chi(q, {e1, e2, e1}) == -1);
    CHECK(multi_chi(q, {e1}) == 0);

    CHECK(multi_chi_sd(q, {e1}, {1, 1}) == 1);
    CHECK(multi_chi_sd(q, {e1, e2}, {0, 0}) == -1);
    CHECK(multi_chi_sd(q, {}, {1, 1}) == 0);
}

TEST_CASE("antisymmetrized forms") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    CHECK(chi_bar(q, e1, e2) == -2);
    CHECK(chi_bar(q, e2, e1) == 2);
    CHECK(chi_bar(q, e1, e1) == 0);
    CHECK(chi_bar_sd(q, e1, {0, 0}) == -2);
    CHECK(chi_bar_sd(q, e2, {0, 0}) == 2);
    CHECK(chi_bar_sd(q, e1, {1, 1}) == -4);
}

TEST_CASE("tuple products of antisymmetrized forms") {
    SelfDualQuiver q = builtin_quiver("atilde1:+,++");
    CHECK(chi_tilde(q, {e1}) == 1);
    CHECK(chi_tilde(q, {e1, e2}) == -2);
    CHECK(chi_tilde(q, {e1, e2, {1, 1}}) == 0);

    CHECK(chi_tilde_sd(q, {{e1}}, {0, 0}) == -2);
    CHECK(chi_tilde_sd(q, {{e1}, {e2}}, {0, 0}) == -8);
}

TEST_CASE("overflow is detected") {
    SelfDualQuiver p = builtin_quiver("point:+");
    DimVector huge{4000000000LL};
    CHECK_THROWS_AS(chi(p, huge, huge), std::overflow_error);
    CHECK_THROWS_AS(chi_sd_zero(p, huge), std::overflow_error);
}
