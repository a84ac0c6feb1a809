#include "hilbcert/sections.hpp"

#include <doctest.h>

using namespace hilbcert;

namespace {

Integer h0(long k, long ell, Torsion t = Torsion::trivial) {
    const H0Value v = h0_symmetric_product({k, ell, t});
    REQUIRE(std::holds_alternative<Integer>(v));
    return std::get<Integer>(v);
}

} // namespace

TEST_CASE("h0 on the symmetric product") {
    CHECK(h0(1, 0) == 1);
    CHECK(h0(0, 3) == 9);
    CHECK(h0(17, -8) == 145);
    CHECK(h0(-1, 5) == 0);
    CHECK(h0(3, -2) == 0);
    CHECK(h0(4, -2, Torsion::generic) == 0);
    CHECK(std::holds_alternative<Indeterminate>(h0_symmetric_product({4, -2, Torsion::two_torsion})));
    CHECK(std::holds_alternative<Indeterminate>(h0_symmetric_product({0, 0, Torsion::trivial})));
    // (k^2 + 1)(k + 2l)^2 / 2 by hand: k = 3, l = -1 gives 10 * 1 / 2.
    CHECK(h0(3, -1) == 5);
    CHECK(h0(2, 1) == 5 * 16 / 2);
}

TEST_CASE("h0 of Theta_(2)^k agrees with chi") {
    for (long k = 1; k <= 50; ++k)
        REQUIRE(h0(k, 0) == chi_hilb2(k));
}

TEST_CASE("Euler characteristics") {
    CHECK(chi_theta_power(2, 1) == 4);
    CHECK(chi_theta_power(0, 1) == 0);
    CHECK(chi_theta_power(3, 2) == 18);
    CHECK_THROWS_AS(chi_theta_power(1, 0), ParameterError);
    CHECK(chi_hilb2(1) == 1);
    CHECK(chi_hilb2(2) == 10);
    CHECK(chi_hilb2(3) == 45);
    CHECK_THROWS_AS(chi_hilb2(0), ParameterError);
}

TEST_CASE("dim V_k") {
    CHECK(dim_Vk(1) == 4);
    CHECK(dim_Vk(3) == 20);
    CHECK(dim_Vk(2) == 10);
    CHECK(dim_Vk(2) == chi_hilb2(2));
    for (long m = 1; m <= 50; ++m)
        REQUIRE(m * m * dim_Vk(m) == 4 * chi_hilb2(m));
    CHECK_THROWS_AS(dim_Vk(-1), ParameterError);
}

TEST_CASE("even theta dimensions") {
    CHECK(even_theta_dim(2, 2) == 4);
    CHECK(even_theta_dim(2, 1) == 1);
    CHECK(even_theta_dim(3, 4) == 36);
    CHECK(even_theta_dim_bruteforce(2, 2) == 4);
    CHECK(even_theta_dim_bruteforce(2, 3) == 5);
    CHECK(even_theta_dim_bruteforce(2, 5) == 13);
    for (unsigned g = 1; g <= 3; ++g)
        for (long m = 1; m <= 20; ++m)
            REQUIRE(even_theta_dim(g, m) == even_theta_dim_bruteforce(g, m));
    CHECK_THROWS_AS(even_theta_dim_bruteforce(8, 10), ResourceLimitError);
    CHECK_THROWS_AS(even_theta_dim(0, 3), ParameterError);
}

TEST_CASE("vanishing-order bounds") {
    CHECK(h0_even_vanishing_bound(4, 2).bound == 9);
    CHECK(h0_even_vanishing_bound(1, 0).bound == 1);
    CHECK(h0_even_vanishing_bound(3, 4).bound == 1);
    CHECK(h0_even_vanishing_bound(1, 6).bound == 0);
    CHECK(promote_vanishing_order(3) == 4);
    CHECK(promote_vanishing_order(4) == 4);
    CHECK(h0_even_vanishing_bound(2, 3).effective_order == 4);
    CHECK(h0_even_vanishing_bound(2, 3).bound == h0_even_vanishing_bound(2, 4).bound);
    for (long m = 1; m <= 30; ++m)
        for (unsigned v = 0; v < 20; ++v)
            REQUIRE(h0_even_vanishing_bound(m, 2 * (v + 1)).bound <= h0_even_vanishing_bound(m, 2 * v).bound);
}

TEST_CASE("Seshadri multiplicity bound") {
    CHECK(seshadri_max_multiplicity(2) == 3);
    CHECK(seshadri_max_multiplicity(1) == 1);
    CHECK(seshadri_max_multiplicity(4) == 6);
    CHECK_THROWS_AS(seshadri_max_multiplicity(0), ParameterError);
}

TEST_CASE("torsion names") {
    for (Torsion t : {Torsion::trivial, Torsion::two_torsion, Torsion::generic})
        CHECK(parse_torsion(to_string(t)) == t);
    CHECK_THROWS_AS(parse_torsion("odd"), ParameterError);
}
