#pragma once

#include "hilbcert/int_poly.hpp"
#include "hilbcert/ring_matrix.hpp"

namespace hilbcert {

/// Variables {x, y} used by the symbolic determinant formulas.
const IntPoly::Variables &xy_variables();

/// n x n matrix with x on the diagonal and y elsewhere.
template <class T>
RingMatrix<T> m_matrix(std::size_t n, const T &x, const T &y) {
    return RingMatrix<T>::equivariant(n, x, y);
}

/// M_{n-1}(x, y) in the lower-right block, y along the first row and column.
template <class T>
RingMatrix<T> t_matrix(std::size_t n, const T &x, const T &y) {
    if (n < 2)
        throw DimensionError("T_n is defined for n >= 2");
    std::vector<T> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            flat.push_back(i == j && i != 0 ? x : y);
    return RingMatrix<T>(n, std::move(flat));
}

/// (x - y)^(n-1) * (x + (n-1) y), expanded.
IntPoly m_det_closed_form(unsigned n);
/// y * (x - y)^(n-1), expanded.
IntPoly t_det_closed_form(unsigned n);

/// det(M_n) by cofactor expansion over Z[x, y]. Throws InvariantViolation if
/// the expansion disagrees with the closed form.
IntPoly symbolic_det_Mn(unsigned n);
/// det(T_n) by cofactor expansion over Z[x, y], checked against the closed form.
IntPoly symbolic_det_Tn(unsigned n);

} // namespace hilbcert
