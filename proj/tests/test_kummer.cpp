#include "hilbcert/kummer.hpp"
#include "hilbcert/pell.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hilbcert;
using testing_support::uniform;

TEST_CASE("Kummer form") {
    CHECK(kummer_form({1, 0}, {1, 0}) == 4);
    CHECK(kummer_form({0, 1}, {0, 1}) == -8);
    CHECK(kummer_form({3, -2}, {3, -2}) == 4);
    CHECK(kummer_form({1, 0, 2}, {1, 0, 2}) == 8);
    CHECK_THROWS_AS(kummer_form({1, 0, 1}, {1, 0, 2}), ParameterError);
}

TEST_CASE("switch involution") {
    CHECK(switch_pullback({1, 0}) == KummerClass(3, -2));
    CHECK(switch_pullback({0, 1}) == KummerClass(4, -3));
    CHECK(switch_pullback(switch_pullback({5, 7})) == KummerClass(5, 7));
    CHECK_THROWS_AS(switch_pullback({1, 0, 2}), ParameterError);
    for (long h = -100; h <= 100; ++h)
        for (long e = -100; e <= 100; ++e)
            REQUIRE(switch_pullback(switch_pullback({h, e})) == KummerClass(h, e));
    for (int i = 0; i < 1000; ++i) {
        const KummerClass u(uniform(-1000, 1000), uniform(-1000, 1000)), v(uniform(-1000, 1000), uniform(-1000, 1000));
        REQUIRE(kummer_form(switch_pullback(u), switch_pullback(v)) == kummer_form(u, v));
    }
}

TEST_CASE("switch maps Pell solutions to Pell solutions with f negated") {
    for (const auto &s : d2_solution_stream(15)) {
        const KummerClass image = switch_pullback({s.x(), s.y()});
        REQUIRE(image.h == 3 * s.x() + 4 * s.y());
        REQUIRE(image.e == -(2 * s.x() + 3 * s.y()));
        REQUIRE(image.h * image.h - 2 * image.e * image.e == 1);
    }
}

TEST_CASE("Riemann-Roch") {
    CHECK(rr_chi({3, 0}) == 20);
    CHECK(rr_chi({0, 0}) == 2);
    CHECK(rr_chi({1, 1}) == 0);
}

TEST_CASE("mu tilde pullback") {
    auto p = mu_tilde_pullback(DivisorClassH2(1, 0, 0, 1));
    CHECK(p.abelian_exponent == 2);
    CHECK(p.kummer == KummerClass(1, 0));
    p = mu_tilde_pullback(DivisorClassH2(0, 1, 0, 1));
    CHECK(p.abelian_exponent == 4);
    CHECK(p.kummer == KummerClass(0, 0));
    p = mu_tilde_pullback(DivisorClassH2(17, -8, -12, 1));
    CHECK(p.abelian_exponent == 2);
    CHECK(p.kummer == KummerClass(17, -12));
}

TEST_CASE("subcase chain") {
    const SubcaseChain c = subcase_ii_h0_chain(17, 12);
    CHECK(c.d0 == 3);
    CHECK(c.f0 == 2);
    CHECK(c.node_degree == -2);
    CHECK(c.total == 80);
    CHECK(c.pigeonhole == 5);
    CHECK(c.total > 16);
    CHECK(subcase_ii_h0_chain(99, 70).d0 == 17);
    CHECK(subcase_ii_h0_chain(99, 70).total == 2320);
    CHECK(subcase_ii_h0_chain(577, 408).d0 == 99);
    CHECK(subcase_ii_h0_chain(577, 408).total == 78416);
    CHECK_THROWS_AS(subcase_ii_h0_chain(3, 2), ParameterError);
    CHECK_THROWS_AS(subcase_ii_h0_chain(17, 11), ParameterError);
    const auto stream = d2_solution_stream(20);
    for (std::size_t i = 1; i < stream.size(); ++i) {
        const SubcaseChain ch = subcase_ii_h0_chain(stream[i].x(), stream[i].y());
        REQUIRE(ch.d0 == stream[i - 1].x());
        REQUIRE(ch.f0 == stream[i - 1].y());
        REQUIRE(ch.total == 8 * (ch.d0 * ch.d0 + 1));
        REQUIRE(ch.total > 16);
        REQUIRE(ch.pigeonhole >= 5);
    }
}
