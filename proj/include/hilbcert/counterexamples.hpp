#pragma once

#include "hilbcert/errors.hpp"
#include "hilbcert/int_poly.hpp"
#include "hilbcert/pell.hpp"
#include "hilbcert/quad_int.hpp"
#include "hilbcert/ring_matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hilbcert {

/// n x n matrix with x on the diagonal and y elsewhere, over a named ring.
template <class T>
struct EquivariantMatrix {
    std::size_t n;
    T diag, offdiag;
    std::string ring;

    RingMatrix<T> matrix() const { return RingMatrix<T>::equivariant(n, diag, offdiag); }
    /// A nonzero off-diagonal entry means the automorphism does not come
    /// from an automorphism of the factor.
    bool unnatural() const { return !is_zero(offdiag); }
};

struct PellAutomorphism {
    EquivariantMatrix<QuadInt> matrix;
    QuadInt det;
};

/// [[x, y sqrt(d)], [y sqrt(d), x]] for a solution of x^2 - d y^2 = 1.
/// Throws ParameterError for y = 0 or a solution of a different equation.
PellAutomorphism pell_automorphism(const Integer &d, const PellSolution &s);

struct NilpotentAutomorphism {
    IntMatrix full;       // nm x nm, identity blocks on the diagonal, N elsewhere
    Integer det;          // by fraction-free elimination
    std::optional<Integer> det_cofactor; // independent path, when nm is small enough
    IntMatrix block_det;  // (I - N)^(n-1) (I + (n-1) N)
    IntMatrix t_factor;   // T with block_det = I + N^2 T
    bool n_squared_zero;
};

/// Throws ParameterError unless N is nonzero and strictly upper triangular.
NilpotentAutomorphism nilpotent_automorphism(std::size_t n, const IntMatrix &N);

struct CubicCertificate {
    Integer y;
    IntPoly cubic;           // x^3 - 3y^2 x + (2y^3 - 1)
    Integer discriminant;    // 108 y^3 - 27
    std::vector<Integer> root_candidates;
    std::optional<Integer> rational_root; // a root among the candidates makes the ring degenerate
    IntPoly det;             // det M_3(x, y), expanded
    IntPoly det_reduced;     // det modulo the cubic
};

inline constexpr long max_cubic_parameter = 10000;

/// M_3(alpha, y) over Z[alpha] with alpha a root of the cubic. Throws
/// ParameterError for y < 1 and ResourceLimitError above max_cubic_parameter.
CubicCertificate cubic_counterexample(const Integer &y);

/// M_n(x, y) a for a zero-sum vector a; equals (x - y) a. Throws
/// ParameterError when the entries do not sum to zero.
template <class T>
std::vector<T> kummer_fiber_action(const T &x, const T &y, const std::vector<T> &a) {
    if (a.empty())
        throw DimensionError("vector must have at least one entry");
    T sum = zero_like(a.front());
    for (const T &v : a)
        sum += v;
    if (!is_zero(sum))
        throw ParameterError("entries must sum to zero");
    const RingMatrix<T> m = RingMatrix<T>::equivariant(a.size(), x, y);
    std::vector<T> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        T acc = zero_like(a.front());
        for (std::size_t j = 0; j < a.size(); ++j)
            acc += m(i, j) * a[j];
        if (!(acc == (x - y) * a[i]))
            throw InvariantViolation("M_n a differs from (x - y) a");
        out.push_back(std::move(acc));
    }
    return out;
}

struct UnitSearch {
    unsigned n;
    Integer bound;
    std::vector<std::pair<Integer, Integer>> solutions; // sorted (x, y) with det M_n(x, y) = +-1
    /// (x, y) from x - y = s, x + (n-1) y = t, s, t in {1, -1}, n | t - s,
    /// restricted to the box.
    std::vector<std::pair<Integer, Integer>> predicted;
    std::vector<std::string> branch_proof;
    bool wide_arithmetic; // mpz evaluation was needed
    bool agrees() const { return solutions == predicted; }
};

/// Exhaustive scan of |x|, |y| <= bound for (x - y)^(n-1) (x + (n-1) y) = +-1.
UnitSearch search_unit_Mn(unsigned n, const Integer &bound);

} // namespace hilbcert
