#include "hilbcert/pell.hpp"

#include <algorithm>

namespace hilbcert {

namespace {

void require_nonsquare(const Integer &d) {
    if (d < 2 || is_perfect_square(d))
        throw ParameterError("Pell parameter d = " + to_string(d) + " must be a non-square integer >= 2");
}

void require_d2(const PellSolution &s, long n) {
    if (s.d() != 2 || s.n() != n)
        throw ParameterError("expected a solution of x^2 - 2y^2 = " + std::to_string(n));
}

} // namespace

PellSolution::PellSolution(Integer x, Integer y, Integer d, Integer n)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)), n_(std::move(n)) {
    require_nonsquare(d_);
    if (x_ * x_ - d_ * y_ * y_ != n_)
        throw ParameterError("(" + to_string(x_) + ", " + to_string(y_) + ") does not solve x^2 - " + to_string(d_) +
                             "y^2 = " + to_string(n_));
}

PellSolution fundamental_solution(const Integer &d) {
    require_nonsquare(d);
    const Integer a0 = isqrt(d);
    Integer m = 0, q = 1, a = a0;
    Integer p_prev = 1, p = a0;
    Integer y_prev = 0, y = 1;
    while (p * p - d * y * y != 1) {
        m = a * q - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        Integer p_next = a * p + p_prev;
        Integer y_next = a * y + y_prev;
        p_prev = std::exchange(p, std::move(p_next));
        y_prev = std::exchange(y, std::move(y_next));
    }
    return {p, y, d, 1};
}

std::vector<PellSolution> d2_solution_stream(std::size_t count) {
    if (count == 0)
        throw ParameterError("solution stream needs count >= 1");
    std::vector<PellSolution> out;
    out.reserve(count);
    Integer x = 3, y = 2;
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(x, y, 2, 1);
        Integer nx = 3 * x + 4 * y;
        y = 2 * x + 3 * y;
        x = std::move(nx);
    }
    return out;
}

PellSolution p1_to_pm2(const PellSolution &s) {
    require_d2(s, 1);
    return {2 * s.y(), s.x(), 2, -2};
}

PellSolution pm2_to_p1(const PellSolution &s) {
    require_d2(s, -2);
    if (mpz_odd_p(s.x().get_mpz_t()))
        throw InvariantViolation("x^2 - 2y^2 = -2 with x odd: " + to_string(s.x()));
    return {s.y(), s.x() / 2, 2, 1};
}

PellMatrixClass classify_pell_matrix(const Integer &d, const Integer &f, int target_det) {
    if (target_det != 1 && target_det != -1)
        throw ParameterError("target determinant must be +1 or -1");
    if (d * d - 2 * f * f != 1)
        throw ParameterError("(" + to_string(d) + ", " + to_string(f) + ") does not solve d^2 - 2f^2 = 1");
    const Integer t = target_det;

    // Eliminating a via a*f = d*c - t turns a^2 - 2c^2 = -2 into
    // c^2 - 2tdc + (1 + 2f^2) = 0 (using d^2 - 2f^2 = 1).
    const Integer qb = -2 * t * d, qc = 1 + 2 * f * f;
    const Integer disc = qb * qb - 4 * qc;
    if (sgn(disc) != 0)
        throw InvariantViolation("discriminant of the c-quadratic is " + to_string(disc) + ", expected 0");
    const Integer c = -qb / 2;
    Integer a;
    if (sgn(f) != 0) {
        const Integer num = d * c - t;
        if (!mpz_divisible_p(num.get_mpz_t(), f.get_mpz_t()))
            throw InvariantViolation("a = (dc - t)/f is not integral");
        a = num / f;
    } else {
        // d = +-1; a^2 = 2c^2 - 2 = 0.
        a = 0;
    }
    if (a * a - 2 * c * c != -2 || d * c - a * f != t)
        throw InvariantViolation("derived column fails the defining equations");

    // Exhaustive check: integer points of d*c - a*f = t are
    // (a, c) = (a0 + d*s, c0 + f*s) for one particular solution (a0, c0),
    // since gcd(d, f) = 1.
    const Integer box = 2 * (abs(d) + abs(f)) + 2;
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t(), f.get_mpz_t());
    if (g != 1)
        throw InvariantViolation("gcd(d, f) != 1 for a Pell solution");
    // d*u + f*v = 1, so c0 = t*u, a0 = -t*v.
    const Integer c0 = t * u, a0 = -t * v;
    // Range of s keeping both coordinates inside the box; d != 0 always.
    Integer lo = -box - abs(a0), hi = box + abs(a0);
    auto narrow = [&](const Integer &base, const Integer &step) {
        if (sgn(step) > 0) {
            lo = std::max(lo, ceil_div(-box - base, step));
            hi = std::min(hi, floor_div(box - base, step));
        } else if (sgn(step) < 0) {
            lo = std::max(lo, ceil_div(box - base, step));
            hi = std::min(hi, floor_div(-box - base, step));
        }
    };
    narrow(a0, d);
    narrow(c0, f);
    Integer checked = 0;
    std::vector<std::pair<Integer, Integer>> hits;
    for (Integer s = lo; s <= hi; ++s) {
        const Integer as = a0 + d * s, cs = c0 + f * s;
        if (abs(as) > box || abs(cs) > box)
            continue;
        ++checked;
        if (as * as - 2 * cs * cs == -2)
            hits.emplace_back(as, cs);
    }
    if (hits.size() != 1 || hits.front() != std::make_pair(a, c))
        throw InvariantViolation("line search found " + std::to_string(hits.size()) +
                                 " solutions instead of the unique derived column");
    return {a, c, checked, box};
}

std::vector<std::pair<Integer, Integer>> bounded_form_search(const Integer &p, const Integer &q, const Integer &n,
                                                             const Integer &bound) {
    if (p < 1 || q < 1)
        throw ParameterError("form coefficients must be positive");
    if (sgn(bound) < 0)
        throw ParameterError("search bound must be nonnegative");
    std::vector<std::pair<Integer, Integer>> out;
    Integer num, v;
    for (Integer u = -bound; u <= bound; ++u) {
        // q*v^2 = p*u^2 - n
        num = p * u * u - n;
        if (sgn(num) < 0 || !mpz_divisible_p(num.get_mpz_t(), q.get_mpz_t()))
            continue;
        num /= q;
        if (!is_perfect_square(num))
            continue;
        v = isqrt(num);
        if (v > bound)
            continue;
        out.emplace_back(u, -v);
        if (sgn(v) != 0)
            out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PellSolution> bounded_pell_search(const Integer &d, const Integer &n, const Integer &bound) {
    require_nonsquare(d);
    std::vector<PellSolution> out;
    for (const auto &[x, y] : bounded_form_search(1, d, n, bound))
        out.emplace_back(x, y, d, n);
    return out;
}

} // namespace hilbcert
