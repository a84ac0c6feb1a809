#include "hilbcert/pell.hpp"
#include "hilbcert/quad_int.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hilbcert;

TEST_CASE("PellSolution validates its equation") {
    CHECK_NOTHROW(PellSolution(3, 2, 2, 1));
    CHECK_THROWS_AS(PellSolution(3, 1, 2, 1), ParameterError);
    CHECK_THROWS_AS(PellSolution(1, 0, 4, 1), ParameterError);
}

TEST_CASE("fundamental solutions") {
    CHECK(fundamental_solution(2) == PellSolution(3, 2, 2, 1));
    CHECK(fundamental_solution(3) == PellSolution(2, 1, 3, 1));
    const PellSolution s61 = fundamental_solution(61);
    CHECK(s61.x() == Integer("1766319049"));
    CHECK(s61.y() == Integer("226153980"));
    CHECK(s61.x() * s61.x() - 61 * s61.y() * s61.y() == 1);
    CHECK_THROWS_AS(fundamental_solution(9), ParameterError);
    CHECK_THROWS_AS(fundamental_solution(1), ParameterError);
}

TEST_CASE("fundamental solution is minimal") {
    // Smallest y >= 1 with 1 + d*y^2 a square, by direct search.
    for (long d = 2; d <= 60; ++d) {
        if (is_perfect_square(Integer(d)) || d == 46 || d == 53)
            continue;
        const PellSolution s = fundamental_solution(d);
        long y = 1;
        while (!is_perfect_square(Integer(1 + d * y * y)))
            ++y;
        REQUIRE(s.y() == y);
        REQUIRE(s.x() == isqrt(Integer(1 + d * y * y)));
    }
}

TEST_CASE("d = 2 solution stream") {
    const auto four = d2_solution_stream(4);
    REQUIRE(four.size() == 4);
    CHECK(four[0] == PellSolution(3, 2, 2, 1));
    CHECK(four[1] == PellSolution(17, 12, 2, 1));
    CHECK(four[2] == PellSolution(99, 70, 2, 1));
    CHECK(four[3] == PellSolution(577, 408, 2, 1));
    CHECK(d2_solution_stream(1).size() == 1);
    CHECK(d2_solution_stream(5)[4] == PellSolution(3363, 2378, 2, 1));
    CHECK_THROWS_AS(d2_solution_stream(0), ParameterError);

    // Powers of the unit 3 + 2*sqrt(2).
    const auto stream = d2_solution_stream(20);
    QuadInt power(1, 0, 2);
    for (const auto &s : stream) {
        power *= QuadInt(3, 2, 2);
        REQUIRE(s.x() == power.rational());
        REQUIRE(s.y() == power.irrational());
        const Integer x1 = 3 * s.x() + 4 * s.y(), y1 = 2 * s.x() + 3 * s.y();
        REQUIRE(x1 * x1 - 2 * y1 * y1 == 1);
    }
}

TEST_CASE("P1 and P-2 bijection") {
    CHECK(p1_to_pm2(PellSolution(3, 2, 2, 1)) == PellSolution(4, 3, 2, -2));
    CHECK(p1_to_pm2(PellSolution(1, 0, 2, 1)) == PellSolution(0, 1, 2, -2));
    CHECK(p1_to_pm2(PellSolution(17, 12, 2, 1)) == PellSolution(24, 17, 2, -2));
    for (const auto &s : d2_solution_stream(15))
        REQUIRE(pm2_to_p1(p1_to_pm2(s)) == s);
    CHECK_THROWS_AS(p1_to_pm2(PellSolution(4, 3, 2, -2)), ParameterError);
    CHECK_THROWS_AS(pm2_to_p1(PellSolution(3, 2, 2, 1)), ParameterError);
}

TEST_CASE("classify_pell_matrix examples") {
    const auto c1 = classify_pell_matrix(3, 2, 1);
    CHECK(c1.a == 4);
    CHECK(c1.c == 3);
    const auto id = classify_pell_matrix(1, 0, 1);
    CHECK(id.a == 0);
    CHECK(id.c == 1);
    const auto m = classify_pell_matrix(17, 12, -1);
    CHECK(m.a == -24);
    CHECK(m.c == -17);
    CHECK(classify_pell_matrix(-1, 0, 1).c == -1);
    CHECK(classify_pell_matrix(3, -2, -1).a == 4);
    CHECK_THROWS_AS(classify_pell_matrix(2, 1, 1), ParameterError);
    CHECK_THROWS_AS(classify_pell_matrix(3, 2, 0), ParameterError);
}

TEST_CASE("classify_pell_matrix against brute-force double loop") {
    for (const auto &s : d2_solution_stream(4)) {
        const long d = s.x().get_si(), f = s.y().get_si();
        const long box = 2 * (d + f) + 2;
        for (int t : {1, -1}) {
            std::vector<std::pair<long, long>> hits;
            for (long a = -box; a <= box; ++a)
                for (long c = -box; c <= box; ++c)
                    if (a * a - 2 * c * c == -2 && d * c - a * f == t)
                        hits.emplace_back(a, c);
            REQUIRE(hits.size() == 1);
            const auto cls = classify_pell_matrix(d, f, t);
            REQUIRE(cls.a == hits[0].first);
            REQUIRE(cls.c == hits[0].second);
            REQUIRE(cls.a == 2 * t * f);
            REQUIRE(cls.c == t * d);
        }
    }
}

TEST_CASE("classify_pell_matrix agrees with exhaustive c-scan for 10 stream solutions") {
    for (const auto &s : d2_solution_stream(10)) {
        const long d = s.x().get_si(), f = s.y().get_si();
        for (int t : {1, -1}) {
            const auto cls = classify_pell_matrix(d, f, t);
            const auto hits = testing_support::pell_matrix_scan(d, f, t, cls.box.get_si());
            REQUIRE(hits.size() == 1);
            REQUIRE(cls.a == hits[0].first);
            REQUIRE(cls.c == hits[0].second);
        }
    }
}

TEST_CASE("bounded Pell search") {
    auto pairs = [](const std::vector<PellSolution> &v) {
        std::vector<std::pair<long, long>> out;
        for (const auto &s : v)
            out.emplace_back(s.x().get_si(), s.y().get_si());
        return out;
    };
    using P = std::vector<std::pair<long, long>>;
    CHECK(pairs(bounded_pell_search(2, -2, 5)) == P{{-4, -3}, {-4, 3}, {0, -1}, {0, 1}, {4, -3}, {4, 3}});
    CHECK(pairs(bounded_pell_search(2, 1, 20)) ==
          P{{-17, -12}, {-17, 12}, {-3, -2}, {-3, 2}, {-1, 0}, {1, 0}, {3, -2}, {3, 2}, {17, -12}, {17, 12}});
    CHECK(bounded_pell_search(3, 5, 10).empty());
    CHECK(bounded_pell_search(2, 1, 0).empty());
    CHECK_THROWS_AS(bounded_pell_search(2, 1, -1), ParameterError);

    // Double-loop oracle.
    for (long d : {2, 3, 5, 7}) {
        for (long n : {-2, -1, 1, 2, 4}) {
            P brute;
            for (long x = -40; x <= 40; ++x)
                for (long y = -40; y <= 40; ++y)
                    if (x * x - d * y * y == n)
                        brute.emplace_back(x, y);
            REQUIRE(pairs(bounded_pell_search(d, n, 40)) == brute);
        }
    }
}

TEST_CASE("bounded form search with square coefficients") {
    // 2*l^2*a^2 - 2c^2 = -2 has only a = 0, c = +-1.
    for (long ell = 1; ell <= 50; ++ell) {
        const auto sols = bounded_form_search(2 * ell * ell, 2, -2, 10000);
        REQUIRE(sols.size() == 2);
        REQUIRE(sols[0] == std::pair<Integer, Integer>(0, -1));
        REQUIRE(sols[1] == std::pair<Integer, Integer>(0, 1));
    }
    // 3u^2 - 2v^2 = 3: (+-1, 0) within 5; (+-5, +-6) appears once the bound reaches 6.
    CHECK(bounded_form_search(3, 2, 3, 5).size() == 2);
    CHECK(bounded_form_search(3, 2, 3, 6).size() == 6);
}
