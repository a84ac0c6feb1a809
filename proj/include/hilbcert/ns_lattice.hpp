#pragma once

#include "hilbcert/errors.hpp"
#include "hilbcert/int_poly.hpp"
#include "hilbcert/integer.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace hilbcert {

/// a*x + b*y + c*B in NS(A^[2]) where x = Theta_[2], y = Sigma^*Theta and
/// B = E/2, for an abelian surface with Theta^2 = 2k.
struct DivisorClassH2 {
    Integer a, b, c;
    Integer k;

    DivisorClassH2(Integer a_, Integer b_, Integer c_, Integer k_);

    static DivisorClassH2 x(const Integer &k) { return {1, 0, 0, k}; }
    static DivisorClassH2 y(const Integer &k) { return {0, 1, 0, k}; }
    static DivisorClassH2 B(const Integer &k) { return {0, 0, 1, k}; }

    friend DivisorClassH2 operator+(const DivisorClassH2 &u, const DivisorClassH2 &v);
    friend DivisorClassH2 operator*(const Integer &s, const DivisorClassH2 &u) {
        return {s * u.a, s * u.b, s * u.c, u.k};
    }
    friend bool operator==(const DivisorClassH2 &, const DivisorClassH2 &) = default;

    /// "2x - y + 3B" style rendering.
    std::string to_string() const;
};

/// Parses a linear combination of x, y, B such as "x", "2x-B" or "x + 3*y".
DivisorClassH2 parse_class(std::string_view text, const Integer &k);

/// t1*pi1^*Theta + t2*pi2^*Theta + lam*lambda in NS(A x A), with
/// Sigma^*Theta = (1, 1, 1).
struct DivisorClassA2 {
    Integer t1, t2, lam;
    Integer k;

    DivisorClassA2(Integer t1_, Integer t2_, Integer lam_, Integer k_);

    friend DivisorClassA2 operator+(const DivisorClassA2 &u, const DivisorClassA2 &v);
    friend DivisorClassA2 operator*(const Integer &s, const DivisorClassA2 &u) {
        return {s * u.t1, s * u.t2, s * u.lam, u.k};
    }
    friend bool operator==(const DivisorClassA2 &, const DivisorClassA2 &) = default;
};

/// Integral over A x A of (pi1^*Theta)^e1 (pi2^*Theta)^e2 (Sigma^*Theta)^es.
Integer primitive_integral(int e1, int e2, int es, const Integer &k);

/// The same integrand of degree 2, times the class of the diagonal.
Integer diagonal_pairing(int e1, int e2, int es, const Integer &k);

/// Integral of x^alpha y^beta B^gamma over A^[2], alpha + beta + gamma = 4,
/// obtained by lifting x -> pi1^*Theta + pi2^*Theta and y -> Sigma^*Theta.
Integer monomial_intersection(int alpha, int beta, int gamma, const Integer &k);

/// The six nonzero degree-4 intersection numbers on A^[2].
struct IntersectionTable {
    Integer x4, x3y, x2y2, x2B2, xyB2, y2B2;
};
IntersectionTable intersection_table(const Integer &k);

/// Coefficients (of x, y, B) of four classes with entries in a ring R that
/// admits Integer * R (Integer itself or IntPoly).
template <class R>
using QuarticArgs = std::array<std::array<R, 3>, 4>;

/// Multilinear expansion of D1.D2.D3.D4 into monomial intersections.
template <class R>
R quartic_form(const QuarticArgs<R> &args, const Integer &k) {
    R total = zero_like(args[0][0]);
    for (int i0 = 0; i0 < 3; ++i0)
        for (int i1 = 0; i1 < 3; ++i1)
            for (int i2 = 0; i2 < 3; ++i2)
                for (int i3 = 0; i3 < 3; ++i3) {
                    std::array<int, 3> counts{};
                    for (int i : {i0, i1, i2, i3})
                        ++counts[std::size_t(i)];
                    const Integer value = monomial_intersection(counts[0], counts[1], counts[2], k);
                    if (sgn(value) == 0)
                        continue;
                    R term = args[0][std::size_t(i0)] * args[1][std::size_t(i1)];
                    term = term * args[2][std::size_t(i2)];
                    term = term * args[3][std::size_t(i3)];
                    total += value * term;
                }
    return total;
}

/// D1.D2.D3.D4 on A^[2]; throws ParameterError if the classes use different k.
Integer quartic_intersection(const DivisorClassH2 &d1, const DivisorClassH2 &d2, const DivisorClassH2 &d3,
                             const DivisorClassH2 &d4);

/// Sigma^*(m Theta), both on A x A and on A^[2].
std::pair<DivisorClassA2, DivisorClassH2> sum_pullback(const Integer &m, const Integer &k);

/// Pullback along xi(p, q) = (p + q, p - q).
DivisorClassA2 wirtinger_pullback(const DivisorClassA2 &c);

} // namespace hilbcert
