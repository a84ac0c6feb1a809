#include "hilbcert/equivariance.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace hilbcert;
using testing_support::uniform;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

// lam refines tau iff some assignment of lam's parts to tau's parts fills
// each exactly; searched part by part, independent of set-partition order.
bool refines_oracle(std::vector<unsigned> lam, std::vector<unsigned> tau) {
    if (lam.empty())
        return std::all_of(tau.begin(), tau.end(), [](unsigned t) { return t == 0; });
    const unsigned part = lam.back();
    lam.pop_back();
    for (std::size_t j = 0; j < tau.size(); ++j) {
        if (tau[j] < part)
            continue;
        tau[j] -= part;
        const bool ok = refines_oracle(lam, tau);
        tau[j] += part;
        if (ok)
            return true;
    }
    return false;
}

// Component-wise arithmetic of (Z/m)^r written out on digit vectors.
std::vector<long> digits(long g, long m, unsigned r) {
    std::vector<long> d(r);
    for (auto &v : d) {
        v = g % m;
        g /= m;
    }
    return d;
}

long undigits(const std::vector<long> &d, long m) {
    long g = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        g = g * m + *it;
    return g;
}

std::vector<long> apply_oracle(long m, unsigned r, long x, long y, const std::vector<long> &p) {
    std::vector<long> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<long> acc(r, 0);
        for (std::size_t j = 0; j < p.size(); ++j) {
            const auto dj = digits(p[j], m, r);
            const long c = i == j ? x : y;
            for (unsigned k = 0; k < r; ++k)
                acc[k] = (acc[k] + c * dj[k]) % m;
        }
        out.push_back(undigits(acc, m));
    }
    return out;
}

} // namespace

TEST_CASE("partitions") {
    CHECK(P({2, 1}).n() == 3);
    CHECK(P({2, 1}).to_string() == "(2,1)");
    CHECK_THROWS_AS(P({1, 2}), ParameterError);
    CHECK_THROWS_AS(P({2, 0}), ParameterError);
    CHECK_THROWS_AS(P({}), ParameterError);
    const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22};
    for (unsigned n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        REQUIRE(all.size() == counts[n - 1]);
        REQUIRE(std::set<Partition>(all.begin(), all.end()).size() == all.size());
        for (const auto &p : all)
            REQUIRE(p.n() == n);
    }
}

TEST_CASE("multiplicity partitions") {
    CHECK(multiplicity_partition(std::vector<long>{4, 4, 7}) == P({2, 1}));
    CHECK(multiplicity_partition(std::vector<long>{3, 3, 3, 3}) == P({4}));
    CHECK(multiplicity_partition(std::vector<long>{0, 1, 2, 3}) == P({1, 1, 1, 1}));
    CHECK(multiplicity_partition(std::vector<long>{5, 1, 5, 1, 2}) == P({2, 2, 1}));
}

TEST_CASE("refinement") {
    CHECK(refines(P({2, 2, 1, 1}), P({3, 3})));
    CHECK_FALSE(refines(P({4, 2}), P({3, 3})));
    CHECK_FALSE(refines(P({3, 3}), P({4, 2})));
    CHECK(refines(P({1, 1, 1}), P({3})));
    CHECK_THROWS_AS(refines(P({2}), P({1, 1, 1})), ParameterError);
    CHECK_THROWS_AS(refines(P({9}), P({9})), ResourceLimitError);

    const auto g = refinement_grouping(P({2, 2, 1, 1}), P({3, 3}));
    REQUIRE(g.has_value());
    REQUIRE(g->size() == 2);
    for (const auto &block : *g) {
        unsigned sum = 0;
        for (auto i : block)
            sum += P({2, 2, 1, 1}).parts()[i];
        CHECK(sum == 3);
    }
}

TEST_CASE("refinement agrees with a bin-packing oracle and is a partial order") {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        std::vector<std::vector<char>> rel(all.size(), std::vector<char>(all.size()));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                rel[i][j] = refines(all[i], all[j]);
                REQUIRE(bool(rel[i][j]) == refines_oracle(all[i].parts(), all[j].parts()));
            }
        for (std::size_t i = 0; i < all.size(); ++i) {
            REQUIRE(rel[i][i]);
            REQUIRE(refines(all[i], P({n})));
            for (std::size_t j = 0; j < all.size(); ++j) {
                if (i != j)
                    REQUIRE_FALSE((rel[i][j] && rel[j][i]));
                for (std::size_t k = 0; k < all.size(); ++k)
                    if (rel[i][j] && rel[j][k])
                        REQUIRE(rel[i][k]);
            }
        }
    }
}

TEST_CASE("finite models") {
    CHECK_THROWS_AS(FiniteModel(5, 2, 2, 3, 2), ParameterError);
    CHECK_THROWS_AS(FiniteModel(5, 1, 3, 0, 0), ParameterError);
    const FiniteModel f(5, 1, 3, 2, 1);
    CHECK(f.determinant() == 4);
    CHECK(f.group_order() == 5);
    CHECK_THROWS_AS(FiniteModel(1, 1, 2, 1, 0), ParameterError);
    CHECK_THROWS_AS(FiniteModel(2, 1, 1, 1, 0), ParameterError);

    for (int trial = 0; trial < 300; ++trial) {
        const long m = uniform(2, 7);
        const unsigned r = unsigned(uniform(1, 3)), n = unsigned(uniform(2, 5));
        const long x = uniform(0, m - 1), y = uniform(0, m - 1);
        if (!FiniteModel::is_valid(m, n, x, y))
            continue;
        const FiniteModel model(m, r, n, x, y);
        std::vector<long> p;
        for (unsigned i = 0; i < n; ++i)
            p.push_back(uniform(0, model.group_order() - 1));
        REQUIRE(model.apply(p) == apply_oracle(m, r, x, y, p));
    }
}

TEST_CASE("multiplicity preservation") {
    const FiniteModel f(5, 1, 3, 2, 1);
    const PreservationResult ex = check_multiplicity_preservation(f);
    CHECK(ex.preserved);
    CHECK(ex.points_checked == 125);
    CHECK_FALSE(ex.counterexample.has_value());

    const PreservationResult sampled = check_multiplicity_preservation(FiniteModel(101, 1, 6, 3, 1), Sampling{2000, 7});
    CHECK(sampled.preserved);
    CHECK(sampled.points_checked == 2000);
    CHECK_THROWS_AS(check_multiplicity_preservation(FiniteModel(101, 1, 6, 3, 1)), ResourceLimitError);

    for (long m = 2; m <= 6; ++m)
        for (unsigned r = 1; r <= 2; ++r)
            for (unsigned n = 2; n <= 3; ++n)
                for (long x = 0; x < m; ++x)
                    for (long y = 0; y < m; ++y)
                        if (FiniteModel::is_valid(m, n, x, y))
                            REQUIRE(check_multiplicity_preservation(FiniteModel(m, r, n, x, y)).preserved);
}

TEST_CASE("determinant validity matches invertibility of the action") {
    // The action is invertible iff it is injective on G^n.
    for (long m = 2; m <= 6; ++m)
        for (unsigned n = 2; n <= 3; ++n)
            for (long x = 0; x < m; ++x)
                for (long y = 0; y < m; ++y) {
                    long total = 1;
                    for (unsigned i = 0; i < n; ++i)
                        total *= m;
                    std::set<std::vector<long>> images;
                    for (long code = 0; code < total; ++code) {
                        std::vector<long> p;
                        for (long c = code, i = 0; i < long(n); ++i, c /= m)
                            p.push_back(c % m);
                        images.insert(apply_oracle(m, 1, x, y, p));
                    }
                    REQUIRE(FiniteModel::is_valid(m, n, x, y) == (long(images.size()) == total));
                }
}

TEST_CASE("kernel triviality") {
    const KernelResult three = kernel_triviality_check(3, 1, 3);
    CHECK(three.trivial());
    CHECK(three.identity_inducing == std::vector<std::pair<long, long>>{{1, 0}});
    const KernelResult two = kernel_triviality_check(3, 1, 2);
    CHECK(two.trivial());
    CHECK(two.identity_inducing == std::vector<std::pair<long, long>>{{0, 1}, {1, 0}});
    CHECK(kernel_triviality_check(2, 2, 3).trivial());
    CHECK(kernel_triviality_check(5, 1, 4).trivial());
    CHECK_THROWS_AS(kernel_triviality_check(3, 1, 1), ParameterError);
}

TEST_CASE("closure witnesses") {
    for (long m : {3L, 4L}) {
        const FiniteModel model(m, 1, 4, 1, 0);
        for (long code = 0; code < m * m * m * m; ++code) {
            std::vector<long> p;
            for (long c = code, i = 0; i < 4; ++i, c /= m)
                p.push_back(c % m);
            const Partition tau = multiplicity_partition(p);
            for (const auto &lam : partitions_of(4)) {
                const auto q = closure_witness(model.group_order(), p, lam);
                const bool possible = refines(lam, tau) && lam.parts().size() <= std::size_t(m);
                REQUIRE(q.has_value() == possible);
                if (!q)
                    continue;
                REQUIRE(multiplicity_partition(*q) == lam);
                const auto back = collapse_map(*q, p);
                REQUIRE(back.has_value());
                for (std::size_t i = 0; i < p.size(); ++i)
                    REQUIRE(back->at((*q)[i]) == p[i]);
            }
        }
    }
}
