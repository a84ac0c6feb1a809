#pragma once

#include "hilbcert/errors.hpp"
#include "hilbcert/int_poly.hpp"
#include "hilbcert/integer.hpp"
#include "hilbcert/quad_int.hpp"
#include "hilbcert/zmod.hpp"

#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hilbcert {

/// Square matrix over one commutative ring instance (Integer, QuadInt with a
/// fixed d, IntPoly over fixed variables, ZMod with a fixed modulus).
template <class T>
class RingMatrix {
  public:
    RingMatrix(std::size_t n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
        if (n_ == 0)
            throw DimensionError("matrix dimension must be at least 1");
        if (entries_.size() != n_ * n_)
            throw DimensionError("expected " + std::to_string(n_ * n_) + " entries, got " +
                                 std::to_string(entries_.size()));
        for (const T &e : entries_)
            if (!same_ring(e, entries_.front()))
                throw ParameterError("matrix entries drawn from different ring instances");
    }

    static RingMatrix from_rows(const std::vector<std::vector<T>> &rows) {
        std::vector<T> flat;
        for (const auto &row : rows) {
            if (row.size() != rows.size())
                throw DimensionError("matrix rows must all have length " + std::to_string(rows.size()));
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return RingMatrix(rows.size(), std::move(flat));
    }

    /// x on the diagonal, y everywhere else.
    static RingMatrix equivariant(std::size_t n, const T &diag, const T &offdiag) {
        std::vector<T> flat;
        flat.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                flat.push_back(i == j ? diag : offdiag);
        return RingMatrix(n, std::move(flat));
    }

    std::size_t size() const { return n_; }
    const T &operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
    T &operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
    const std::vector<T> &entries() const { return entries_; }

    friend RingMatrix operator*(const RingMatrix &a, const RingMatrix &b) {
        if (a.n_ != b.n_)
            throw DimensionError("matrix product of different sizes");
        std::vector<T> out;
        out.reserve(a.n_ * a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j) {
                T acc = zero_like(a(0, 0));
                for (std::size_t k = 0; k < a.n_; ++k)
                    acc += a(i, k) * b(k, j);
                out.push_back(std::move(acc));
            }
        return RingMatrix(a.n_, std::move(out));
    }

    friend bool operator==(const RingMatrix &a, const RingMatrix &b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t n_;
    std::vector<T> entries_;
};

using IntMatrix = RingMatrix<Integer>;

inline constexpr std::size_t max_cofactor_dimension = 20;

/// Determinant by cofactor (Laplace) expansion along successive rows, with
/// minors memoised by their column set: O(n * 2^n) ring operations and no
/// division, so it is valid over any commutative ring.
template <class T>
T det_cofactor(const RingMatrix<T> &m) {
    const std::size_t n = m.size();
    if (n > max_cofactor_dimension)
        throw DimensionError("cofactor determinant limited to n <= " + std::to_string(max_cofactor_dimension));
    // minor[S] = det of rows 0..|S|-1 restricted to the columns in S.
    std::vector<std::optional<T>> minor(std::size_t{1} << n);
    minor[0] = one_like(m(0, 0));
    for (std::size_t mask = 0; mask + 1 < minor.size(); ++mask) {
        if (!minor[mask] || is_zero(*minor[mask]))
            continue;
        const std::size_t row = std::size_t(std::popcount(mask));
        for (std::size_t j = 0; j < n; ++j) {
            if ((mask >> j) & 1u || is_zero(m(row, j)))
                continue;
            // Sign of the expansion along the last row: parity of chosen
            // columns lying to the right of j.
            const bool negative = std::popcount(mask >> (j + 1)) & 1;
            T term = *minor[mask] * m(row, j);
            auto &slot = minor[mask | (std::size_t{1} << j)];
            if (!slot)
                slot = zero_like(m(0, 0));
            if (negative)
                *slot -= term;
            else
                *slot += term;
        }
    }
    const auto &full = minor.back();
    return full ? *full : zero_like(m(0, 0));
}

/// Fraction-free Gaussian elimination (Bareiss) for integer matrices. Every
/// division performed is exact.
Integer det_bareiss(const IntMatrix &m);

} // namespace hilbcert
