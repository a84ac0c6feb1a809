#include "hilbcert/ns_lattice.hpp"

#include <cctype>

namespace hilbcert {

namespace {

void require_same_k(const Integer &k1, const Integer &k2) {
    if (k1 != k2)
        throw ParameterError("divisor classes for different polarizations (k = " + to_string(k1) + " vs " +
                             to_string(k2) + ")");
}

void require_positive_k(const Integer &k) {
    if (k < 1)
        throw ParameterError("polarization half-degree k must be positive");
}

void require_degree(int e1, int e2, int es, int degree) {
    if (e1 < 0 || e2 < 0 || es < 0 || e1 + e2 + es != degree)
        throw DegreeError("exponents (" + std::to_string(e1) + "," + std::to_string(e2) + "," + std::to_string(es) +
                          ") must be nonnegative with sum " + std::to_string(degree));
}

} // namespace

DivisorClassH2::DivisorClassH2(Integer a_, Integer b_, Integer c_, Integer k_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), k(std::move(k_)) {
    require_positive_k(k);
}

DivisorClassH2 operator+(const DivisorClassH2 &u, const DivisorClassH2 &v) {
    require_same_k(u.k, v.k);
    return {u.a + v.a, u.b + v.b, u.c + v.c, u.k};
}

std::string DivisorClassH2::to_string() const {
    std::string out;
    const std::pair<const Integer *, const char *> parts[] = {{&a, "x"}, {&b, "y"}, {&c, "B"}};
    for (const auto &[coef, name] : parts) {
        if (sgn(*coef) == 0)
            continue;
        Integer mag = abs(*coef);
        if (out.empty())
            out += sgn(*coef) < 0 ? "-" : "";
        else
            out += sgn(*coef) < 0 ? " - " : " + ";
        if (mag != 1)
            out += hilbcert::to_string(mag);
        out += name;
    }
    return out.empty() ? "0" : out;
}

DivisorClassH2 parse_class(std::string_view text, const Integer &k) {
    DivisorClassH2 result(0, 0, 0, k);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto fail = [&](const std::string &why) -> DivisorClassH2 {
        throw ParameterError("cannot parse divisor class '" + std::string(text) + "': " + why);
    };
    skip();
    if (i == text.size())
        return fail("empty expression");
    bool first = true;
    while (true) {
        skip();
        if (i == text.size())
            break;
        int sign_value = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign_value = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            return fail("expected '+' or '-'");
        }
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        Integer coef = start == i ? Integer(1) : parse_integer(text.substr(start, i - start));
        skip();
        if (i < text.size() && text[i] == '*') {
            if (start == i)
                return fail("'*' without a coefficient");
            ++i;
            skip();
        }
        if (i == text.size())
            return fail("missing generator");
        coef *= sign_value;
        switch (text[i]) {
        case 'x': result.a += coef; break;
        case 'y': result.b += coef; break;
        case 'B': result.c += coef; break;
        default: return fail(std::string("unknown generator '") + text[i] + "'");
        }
        ++i;
        first = false;
    }
    return result;
}

DivisorClassA2::DivisorClassA2(Integer t1_, Integer t2_, Integer lam_, Integer k_)
    : t1(std::move(t1_)), t2(std::move(t2_)), lam(std::move(lam_)), k(std::move(k_)) {
    require_positive_k(k);
}

DivisorClassA2 operator+(const DivisorClassA2 &u, const DivisorClassA2 &v) {
    require_same_k(u.k, v.k);
    return {u.t1 + v.t1, u.t2 + v.t2, u.lam + v.lam, u.k};
}

Integer primitive_integral(int e1, int e2, int es, const Integer &k) {
    require_degree(e1, e2, es, 4);
    if (e1 > 2 || e2 > 2 || es > 2)
        return 0;
    return 4 * k * k;
}

Integer diagonal_pairing(int e1, int e2, int es, const Integer &k) {
    require_degree(e1, e2, es, 2);
    // On the diagonal pi1 = pi2 = id and Sigma = multiplication by 2, whose
    // pullback scales Theta by 4; the integrand becomes 4^es Theta^2 = 4^es 2k.
    int scale = 1;
    for (int i = 0; i < es; ++i)
        scale *= 4;
    return scale * 2 * k;
}

Integer monomial_intersection(int alpha, int beta, int gamma, const Integer &k) {
    require_degree(alpha, beta, gamma, 4);
    require_positive_k(k);
    if (gamma == 0) {
        Integer sum = 0;
        for (int i = 0; i <= alpha; ++i)
            sum += binomial(alpha, unsigned(i)) * primitive_integral(i, alpha - i, beta, k);
        return sum / 2;
    }
    if (gamma == 2) {
        Integer sum = 0;
        for (int i = 0; i <= alpha; ++i)
            sum += binomial(alpha, unsigned(i)) * diagonal_pairing(i, alpha - i, beta, k);
        return -sum / 2;
    }
    return 0;
}

IntersectionTable intersection_table(const Integer &k) {
    return {monomial_intersection(4, 0, 0, k), monomial_intersection(3, 1, 0, k),
            monomial_intersection(2, 2, 0, k), monomial_intersection(2, 0, 2, k),
            monomial_intersection(1, 1, 2, k), monomial_intersection(0, 2, 2, k)};
}

Integer quartic_intersection(const DivisorClassH2 &d1, const DivisorClassH2 &d2, const DivisorClassH2 &d3,
                             const DivisorClassH2 &d4) {
    for (const auto *d : {&d2, &d3, &d4})
        require_same_k(d1.k, d->k);
    QuarticArgs<Integer> args;
    const DivisorClassH2 *ds[] = {&d1, &d2, &d3, &d4};
    for (std::size_t i = 0; i < 4; ++i)
        args[i] = {ds[i]->a, ds[i]->b, ds[i]->c};
    return quartic_form(args, d1.k);
}

std::pair<DivisorClassA2, DivisorClassH2> sum_pullback(const Integer &m, const Integer &k) {
    return {DivisorClassA2(m, m, m, k), DivisorClassH2(0, m, 0, k)};
}

DivisorClassA2 wirtinger_pullback(const DivisorClassA2 &c) {
    // Images of the basis: Theta1 -> (1,1,1), Theta2 -> (1,1,-1), lambda -> (2,-2,0).
    DivisorClassA2 out(c.t1 + c.t2 + 2 * c.lam, c.t1 + c.t2 - 2 * c.lam, c.t1 - c.t2, c.k);
    if (c.t1 == c.t2) {
        const Integer b = c.lam, a = c.t1 - c.lam;
        if (!(out == DivisorClassA2(2 * a + 4 * b, 2 * a, 0, c.k)))
            throw InvariantViolation("Wirtinger pullback of (a,a,0) + b(1,1,1) is not (2a+4b, 2a, 0)");
    }
    return out;
}

} // namespace hilbcert
