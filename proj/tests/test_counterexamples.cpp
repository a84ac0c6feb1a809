#include "hilbcert/counterexamples.hpp"
#include "hilbcert/zmod.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hilbcert;
using testing_support::det_leibniz;
using testing_support::uniform;

namespace {

using Pairs = std::vector<std::pair<Integer, Integer>>;

Pairs pairs(std::initializer_list<std::pair<long, long>> v) {
    Pairs out;
    for (auto [x, y] : v)
        out.emplace_back(x, y);
    return out;
}

IntMatrix strict_upper(std::size_t m, long bound) {
    IntMatrix N(m, std::vector<Integer>(m * m, 0));
    bool nonzero = false;
    while (!nonzero)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                N(i, j) = uniform(-bound, bound);
                nonzero = nonzero || sgn(N(i, j)) != 0;
            }
    return N;
}

} // namespace

TEST_CASE("Pell automorphisms") {
    const PellAutomorphism p = pell_automorphism(2, PellSolution(3, 2, 2, 1));
    CHECK(p.matrix.matrix()(0, 1) == QuadInt(0, 2, 2));
    CHECK(p.matrix.matrix()(0, 0) == QuadInt(3, 0, 2));
    CHECK(p.det == QuadInt(1, 0, 2));
    CHECK(p.matrix.unnatural());

    CHECK(pell_automorphism(3, PellSolution(2, 1, 3, 1)).det == QuadInt(1, 0, 3));
    CHECK_THROWS_AS(pell_automorphism(2, PellSolution(1, 0, 2, 1)), ParameterError);
    CHECK_THROWS_AS(pell_automorphism(3, PellSolution(3, 2, 2, 1)), ParameterError);

    for (long d = 2; d <= 40; ++d) {
        if (is_perfect_square(Integer(d)))
            continue;
        const auto q = pell_automorphism(d, fundamental_solution(d));
        REQUIRE(det_leibniz(q.matrix.matrix()) == QuadInt(1, 0, d));
    }
}

TEST_CASE("powers of a Pell matrix keep determinant 1") {
    for (long d : {2L, 3L, 5L, 7L}) {
        const auto base = pell_automorphism(d, fundamental_solution(d)).matrix.matrix();
        auto power = base;
        for (int k = 1; k <= 5; ++k) {
            REQUIRE(det_leibniz(power) == QuadInt(1, 0, d));
            REQUIRE(power(0, 0) == power(1, 1));
            REQUIRE(power(0, 1) == power(1, 0));
            power = power * base;
        }
    }
}

TEST_CASE("nilpotent block automorphisms") {
    const IntMatrix N = IntMatrix::from_rows({{0, 1}, {0, 0}});
    for (std::size_t n = 2; n <= 5; ++n) {
        const NilpotentAutomorphism a = nilpotent_automorphism(n, N);
        CHECK(a.full.size() == 2 * n);
        CHECK(a.det == 1);
        CHECK(a.n_squared_zero);
        CHECK(a.block_det == IntMatrix::from_rows({{1, 0}, {0, 1}}));
        if (2 * n <= 8)
            CHECK(det_leibniz(a.full) == 1);
    }
    const IntMatrix N3 = IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    const NilpotentAutomorphism b = nilpotent_automorphism(3, N3);
    CHECK(b.det == 1);
    CHECK_FALSE(b.n_squared_zero);
    // (I - N)^2 (I + 2N) = I - 3N^2 + 2N^3 and N^3 = 0.
    CHECK(b.block_det == IntMatrix::from_rows({{1, 0, -3}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(b.t_factor == IntMatrix::from_rows({{-3, 2, 0}, {0, -3, 2}, {0, 0, -3}}));

    CHECK_THROWS_AS(nilpotent_automorphism(2, IntMatrix::from_rows({{1, 1}, {0, 0}})), ParameterError);
    CHECK_THROWS_AS(nilpotent_automorphism(2, IntMatrix::from_rows({{0, 0}, {1, 0}})), ParameterError);
    CHECK_THROWS_AS(nilpotent_automorphism(2, IntMatrix::from_rows({{0, 0}, {0, 0}})), ParameterError);
}

TEST_CASE("random nilpotent blocks against the Leibniz determinant") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = std::size_t(uniform(2, 4));
        const std::size_t n = std::size_t(uniform(2, 8 / long(m)));
        const IntMatrix N = strict_upper(m, 5);
        const NilpotentAutomorphism a = nilpotent_automorphism(n, N);
        REQUIRE(a.det == 1);
        REQUIRE(det_leibniz(a.full) == 1);
        if (a.det_cofactor)
            REQUIRE(*a.det_cofactor == 1);
    }
}

TEST_CASE("cubic construction") {
    const CubicCertificate one = cubic_counterexample(1);
    CHECK(one.cubic.to_string() == "x^3 - 3*x + 1");
    CHECK(one.discriminant == 81);
    CHECK_FALSE(one.rational_root.has_value());
    CHECK(one.root_candidates == std::vector<Integer>{1, -1});
    CHECK(one.det_reduced.to_string() == "1");

    CHECK(cubic_counterexample(2).discriminant == 837);
    CHECK_THROWS_AS(cubic_counterexample(0), ParameterError);
    CHECK_THROWS_AS(cubic_counterexample(max_cubic_parameter + 1), ResourceLimitError);

    for (long y = 1; y <= 60; ++y) {
        const CubicCertificate c = cubic_counterexample(y);
        REQUIRE_FALSE(c.rational_root.has_value());
        REQUIRE(c.discriminant == 108 * y * y * y - 27);
        // det M_3(r, y) - cubic(r) = 1 at integer points r.
        for (long r = -5; r <= 5; ++r) {
            const IntMatrix m = IntMatrix::equivariant(3, r, y);
            const std::vector<Integer> pt{r};
            REQUIRE(det_leibniz(m) - c.cubic.evaluate(pt) == 1);
        }
        // Direct rational-root check over every divisor candidate.
        for (const Integer &r : c.root_candidates) {
            const std::vector<Integer> pt{r};
            REQUIRE(sgn(c.cubic.evaluate(pt)) != 0);
        }
    }
}

TEST_CASE("Kummer fibre identity") {
    const auto out = kummer_fiber_action<Integer>(5, 2, {1, 2, -3});
    CHECK(out == std::vector<Integer>{3, 6, -9});
    CHECK(kummer_fiber_action<Integer>(5, 2, {0, 0, 0}) == std::vector<Integer>{0, 0, 0});
    CHECK_THROWS_AS(kummer_fiber_action<Integer>(5, 2, {1, 1}), ParameterError);

    const IntPoly::Variables vars{"t", "x", "y"};
    const IntPoly t = IntPoly::variable(vars, "t"), x = IntPoly::variable(vars, "x"), y = IntPoly::variable(vars, "y");
    const auto sym = kummer_fiber_action<IntPoly>(x, y, {t, -t});
    CHECK(sym[0] == (x - y) * t);
    CHECK(sym[1] == -((x - y) * t));

    for (std::size_t n = 2; n <= 6; ++n)
        for (int sample = 0; sample < 3; ++sample) {
            const Integer xv = uniform(-50, 50), yv = uniform(-50, 50);
            for (int trial = 0; trial < 500; ++trial) {
                std::vector<Integer> a;
                Integer sum = 0;
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    a.push_back(uniform(-1000, 1000));
                    sum += a.back();
                }
                a.push_back(-sum);
                const auto r = kummer_fiber_action(xv, yv, a);
                for (std::size_t i = 0; i < n; ++i)
                    REQUIRE(r[i] == (xv - yv) * a[i]);
            }
        }

    for (long m : {2L, 3L, 7L}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<ZMod> a;
            Integer sum = 0;
            for (int i = 0; i < 3; ++i) {
                const long v = uniform(0, m - 1);
                a.emplace_back(v, m);
                sum += v;
            }
            a.emplace_back(-sum, m);
            const ZMod xv(uniform(0, m - 1), m), yv(uniform(0, m - 1), m);
            const auto r = kummer_fiber_action(xv, yv, a);
            for (std::size_t i = 0; i < a.size(); ++i)
                REQUIRE(r[i] == (xv - yv) * a[i]);
        }
    }
}

TEST_CASE("integer unit search") {
    const UnitSearch three = search_unit_Mn(3, 1000);
    CHECK(three.solutions == pairs({{-1, 0}, {1, 0}}));
    CHECK(three.agrees());
    CHECK_FALSE(three.wide_arithmetic);

    const UnitSearch two = search_unit_Mn(2, 5);
    CHECK(two.solutions == pairs({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
    CHECK(two.agrees());

    CHECK(search_unit_Mn(4, 200).solutions == pairs({{-1, 0}, {1, 0}}));
    for (unsigned n = 3; n <= 8; ++n) {
        const UnitSearch s = search_unit_Mn(n, 60);
        REQUIRE(s.agrees());
        for (const auto &[x, y] : s.solutions)
            REQUIRE(sgn(y) == 0);
    }
    const UnitSearch wide = search_unit_Mn(70, 2);
    CHECK(wide.wide_arithmetic);
    CHECK(wide.agrees());

    CHECK_THROWS_AS(search_unit_Mn(1, 5), DimensionError);
    CHECK_THROWS_AS(search_unit_Mn(3, 0), ParameterError);
}

TEST_CASE("unit search agrees with direct determinants") {
    for (unsigned n = 2; n <= 5; ++n) {
        const UnitSearch s = search_unit_Mn(n, 6);
        Pairs direct;
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y) {
                const Integer d = det_leibniz(IntMatrix::equivariant(n, x, y));
                if (abs(d) == 1)
                    direct.emplace_back(x, y);
            }
        REQUIRE(s.solutions == direct);
    }
}
