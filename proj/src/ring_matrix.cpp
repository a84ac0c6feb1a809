#include "hilbcert/ring_matrix.hpp"

#include <utility>

namespace hilbcert {

Integer det_bareiss(const IntMatrix &m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j);

    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(a[swap_row][k]) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace hilbcert
