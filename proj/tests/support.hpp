#pragma once

#include "hilbcert/integer.hpp"
#include "hilbcert/ring_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using hilbcert::Integer;

inline std::mt19937_64 &rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Integer random_integer(long bound) { return uniform(-bound, bound); }

// Leibniz formula: sum over all permutations. Independent of both library
// determinant paths, usable for n <= 7 or so.
template <class T>
T det_leibniz(const hilbcert::RingMatrix<T> &m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = hilbcert::zero_like(m(0, 0));
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        T term = hilbcert::one_like(m(0, 0));
        for (std::size_t i = 0; i < n; ++i)
            term *= m(i, perm[i]);
        if (inversions % 2)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline hilbcert::IntMatrix random_int_matrix(std::size_t n, long bound) {
    std::vector<Integer> flat;
    for (std::size_t i = 0; i < n * n; ++i)
        flat.push_back(random_integer(bound));
    return hilbcert::IntMatrix(n, flat);
}

} // namespace testing_support

namespace testing_support {

inline long isqrt_ll(long v) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

// All (a, c) with |a|, |c| <= box, a^2 - 2c^2 = -2 and d*c - a*f = t,
// found by scanning every c in the box and solving a^2 = 2c^2 - 2 exactly.
inline std::vector<std::pair<long, long>> pell_matrix_scan(long d, long f, long t,
                                                                      long box) {
    std::vector<std::pair<long, long>> hits;
    for (long c = -box; c <= box; ++c) {
        const long rhs = 2 * c * c - 2;
        if (rhs < 0)
            continue;
        const long r = isqrt_ll(rhs);
        if (r * r != rhs || r > box)
            continue;
        for (long a : {-r, r}) {
            if (static_cast<__int128>(d) * c - static_cast<__int128>(a) * f == t)
                hits.emplace_back(a, c);
            if (r == 0)
                break;
        }
    }
    return hits;
}

} // namespace testing_support
