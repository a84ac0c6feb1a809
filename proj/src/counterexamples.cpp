#include "hilbcert/counterexamples.hpp"
#include "hilbcert/symbolic_det.hpp"

#include <algorithm>
#include <set>

namespace hilbcert {

PellAutomorphism pell_automorphism(const Integer &d, const PellSolution &s) {
    if (s.d() != d || s.n() != 1)
        throw ParameterError("expected a solution of x^2 - " + to_string(d) + " y^2 = 1");
    if (sgn(s.y()) == 0)
        throw ParameterError("y = 0 gives a natural automorphism, not a counterexample");
    EquivariantMatrix<QuadInt> m{2, QuadInt::from_integer(s.x(), d), QuadInt(0, s.y(), d), "Z[sqrt(" + to_string(d) + ")]"};
    const QuadInt det = det_cofactor(m.matrix());
    const QuadInt direct = m.diag * m.diag - m.offdiag * m.offdiag;
    if (!(det == direct) || !(det == QuadInt::from_integer(1, d)) || QuadInt(s.x(), s.y(), d).norm() != 1)
        throw InvariantViolation("Pell matrix does not have determinant 1");
    return {std::move(m), det};
}

namespace {

IntMatrix identity(std::size_t m) {
    IntMatrix out(m, std::vector<Integer>(m * m, 0));
    for (std::size_t i = 0; i < m; ++i)
        out(i, i) = 1;
    return out;
}

IntMatrix add(const IntMatrix &a, const IntMatrix &b) {
    std::vector<Integer> e(a.entries());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += b.entries()[i];
    return IntMatrix(a.size(), std::move(e));
}

IntMatrix scale(const Integer &c, const IntMatrix &a) {
    std::vector<Integer> e(a.entries());
    for (auto &v : e)
        v *= c;
    return IntMatrix(a.size(), std::move(e));
}

bool is_zero_matrix(const IntMatrix &a) {
    return std::all_of(a.entries().begin(), a.entries().end(), [](const Integer &v) { return sgn(v) == 0; });
}

// Coefficients of (1 - t)^(n-1) (1 + (n-1) t), lowest degree first.
std::vector<Integer> block_det_polynomial(std::size_t n) {
    std::vector<Integer> p{1};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Integer> next(p.size() + 1, 0);
        for (std::size_t j = 0; j < p.size(); ++j) {
            next[j] += p[j];
            next[j + 1] -= p[j];
        }
        p = std::move(next);
    }
    std::vector<Integer> out(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
        out[j] += p[j];
        out[j + 1] += Integer(long(n - 1)) * p[j];
    }
    return out;
}

// sum coef[i] N^i by Horner's rule.
IntMatrix evaluate_at(const std::vector<Integer> &coef, const IntMatrix &N) {
    const std::size_t m = N.size();
    IntMatrix acc(m, std::vector<Integer>(m * m, 0));
    for (auto it = coef.rbegin(); it != coef.rend(); ++it)
        acc = add(acc * N, scale(*it, identity(m)));
    return acc;
}

} // namespace

NilpotentAutomorphism nilpotent_automorphism(std::size_t n, const IntMatrix &N) {
    const std::size_t m = N.size();
    if (m < 2 || n < 2)
        throw DimensionError("need m >= 2 and n >= 2");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (sgn(N(i, j)) != 0)
                throw ParameterError("N must be strictly upper triangular");
    if (is_zero_matrix(N))
        throw ParameterError("N must be nonzero");

    std::vector<Integer> flat(n * m * n * m, 0);
    const std::size_t side = n * m;
    for (std::size_t bi = 0; bi < n; ++bi)
        for (std::size_t bj = 0; bj < n; ++bj)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    flat[(bi * m + i) * side + bj * m + j] = bi == bj ? Integer(i == j ? 1 : 0) : N(i, j);
    IntMatrix full(side, std::move(flat));

    const Integer det = det_bareiss(full);
    std::optional<Integer> cofactor;
    if (side <= 16) {
        cofactor = det_cofactor(full);
        if (*cofactor != det)
            throw InvariantViolation("cofactor and Bareiss determinants disagree");
    }
    if (det != 1)
        throw InvariantViolation("block matrix determinant is " + to_string(det) + ", not 1");

    // The blocks commute, so det(full) = det(p(N)) with p the M_n determinant
    // polynomial; p(0) = 1 and p'(0) = 0, so p(t) = 1 + t^2 q(t).
    const std::vector<Integer> p = block_det_polynomial(n);
    if (p[0] != 1 || sgn(p[1]) != 0)
        throw InvariantViolation("block determinant polynomial is not 1 + O(t^2)");
    IntMatrix block(identity(m));
    for (std::size_t i = 0; i + 1 < n; ++i)
        block = block * add(identity(m), scale(-1, N));
    block = block * add(identity(m), scale(Integer(long(n - 1)), N));
    if (!(block == evaluate_at(p, N)))
        throw InvariantViolation("block determinant disagrees with its polynomial");
    const IntMatrix T = evaluate_at(std::vector<Integer>(p.begin() + 2, p.end()), N);
    const IntMatrix N2 = N * N;
    if (!(block == add(identity(m), N2 * T)))
        throw InvariantViolation("block determinant is not I + N^2 T");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (block(i, j) != (i == j ? 1 : 0))
                throw InvariantViolation("block determinant is not unitriangular");
    if (det_bareiss(block) != 1)
        throw InvariantViolation("block determinant has determinant != 1");
    const bool nil2 = is_zero_matrix(N2);
    if (nil2 && !(block == identity(m)))
        throw InvariantViolation("N^2 = 0 but the block determinant is not I");
    return {std::move(full), det, cofactor, std::move(block), T, nil2};
}

namespace {

std::vector<Integer> divisors_of(Integer v) {
    v = abs(v);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer q = 1; q * q <= v; ++q)
        if (v % q == 0) {
            small.push_back(q);
            if (q * q != v)
                large.push_back(v / q);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

CubicCertificate cubic_counterexample(const Integer &y) {
    if (y < 1)
        throw ParameterError("y must be >= 1");
    if (y > max_cubic_parameter)
        throw ResourceLimitError("y above " + std::to_string(max_cubic_parameter) + " makes the rational-root test too large");
    const IntPoly::Variables vars{"x"};
    const IntPoly alpha = IntPoly::variable(vars, "x");
    const auto C = [&](const Integer &v) { return IntPoly::constant(vars, v); };
    CubicCertificate out;
    out.y = y;
    const Integer y2 = y * y, y3 = y2 * y;
    out.cubic = pow(alpha, 3) - C(3 * y2) * alpha + C(2 * y3 - 1);
    // -4p^3 - 27q^2 for x^3 + p x + q.
    const Integer p = -3 * y2, q = 2 * y3 - 1;
    out.discriminant = -4 * p * p * p - 27 * q * q;
    if (out.discriminant != 108 * y3 - 27 || sgn(out.discriminant) <= 0)
        throw InvariantViolation("cubic discriminant is not 108 y^3 - 27 > 0");

    for (const Integer &dv : divisors_of(q))
        for (const Integer &r : {dv, Integer(-dv)}) {
            out.root_candidates.push_back(r);
            const std::vector<Integer> point{r};
            if (sgn(out.cubic.evaluate(point)) == 0 && !out.rational_root)
                out.rational_root = r;
        }

    const IntPoly direct = det_cofactor(RingMatrix<IntPoly>::equivariant(3, alpha, C(y)));
    const IntPoly closed = symbolic_det_Mn(3).substitute(1, IntPoly::constant(xy_variables(), y));
    if (direct.to_string() != closed.to_string())
        throw InvariantViolation("det M_3(alpha, y) disagrees with the closed form");
    out.det = direct;
    out.det_reduced = direct.rem_monic(0, out.cubic);
    if (!(out.det_reduced == C(1)))
        throw InvariantViolation("det M_3(alpha, y) does not reduce to 1");
    return out;
}

namespace {

__extension__ typedef __int128 wide_int;

template <class V>
V power(V base, unsigned e) {
    V r = 1;
    while (e--)
        r *= base;
    return r;
}

} // namespace

UnitSearch search_unit_Mn(unsigned n, const Integer &bound) {
    if (n < 2)
        throw DimensionError("n must be >= 2");
    if (bound < 1)
        throw ParameterError("bound must be >= 1");
    UnitSearch out;
    out.n = n;
    out.bound = bound;
    const long B = to_long(bound);
    // |det| <= (2B)^(n-1) * nB must fit with room to spare in 128 bits.
    const Integer worst = pow(Integer(2 * B), n - 1) * Integer(long(n)) * B;
    out.wide_arithmetic = worst >= pow(Integer(2), 126);
    for (long x = -B; x <= B; ++x)
        for (long y = -B; y <= B; ++y) {
            bool unit;
            if (!out.wide_arithmetic) {
                const wide_int v = power<wide_int>(x - y, n - 1) * (x + wide_int(n - 1) * y);
                unit = v == 1 || v == -1;
            } else {
                const Integer v = pow(Integer(x - y), n - 1) * (Integer(x) + Integer(long(n - 1)) * y);
                unit = abs(v) == 1;
            }
            if (unit)
                out.solutions.emplace_back(x, y);
        }

    const std::string ns = std::to_string(n);
    out.branch_proof.push_back("(x - y)^" + std::to_string(n - 1) + " (x + " + std::to_string(n - 1) +
                               " y) = +-1 forces x - y = s and x + " + std::to_string(n - 1) + " y = t with s, t in {1, -1}");
    out.branch_proof.push_back("subtracting: " + ns + " y = t - s, which lies in {-2, 0, 2}");
    std::set<std::pair<Integer, Integer>> predicted;
    for (long s : {1L, -1L})
        for (long t : {1L, -1L}) {
            if ((t - s) % long(n) != 0) {
                out.branch_proof.push_back("s = " + std::to_string(s) + ", t = " + std::to_string(t) + ": " + ns +
                                           " y = " + std::to_string(t - s) + " has no integer solution");
                continue;
            }
            const long y = (t - s) / long(n), x = s + y;
            out.branch_proof.push_back("s = " + std::to_string(s) + ", t = " + std::to_string(t) + ": (x, y) = (" +
                                       std::to_string(x) + ", " + std::to_string(y) + ")");
            if (std::abs(x) <= B && std::abs(y) <= B)
                predicted.emplace(x, y);
        }
    out.predicted.assign(predicted.begin(), predicted.end());
    return out;
}

} // namespace hilbcert
