#include "hilbcert/sections.hpp"

#include <vector>

namespace hilbcert {

namespace {

void require_positive(const Integer &m, const char *what) {
    if (m < 1)
        throw ParameterError(std::string(what) + " must be >= 1, got " + to_string(m));
}

} // namespace

std::string to_string(Torsion t) {
    switch (t) {
    case Torsion::trivial: return "trivial";
    case Torsion::two_torsion: return "two-torsion";
    case Torsion::generic: return "generic";
    }
    return "?";
}

Torsion parse_torsion(const std::string &text) {
    if (text == "trivial")
        return Torsion::trivial;
    if (text == "two-torsion")
        return Torsion::two_torsion;
    if (text == "generic")
        return Torsion::generic;
    throw ParameterError("unknown torsion type '" + text + "' (trivial, two-torsion, generic)");
}

H0Value h0_symmetric_product(const SectionClass &c) {
    const Integer total = c.k + 2 * c.ell;
    if (sgn(c.k) < 0 || sgn(total) < 0)
        return Integer(0);
    if (sgn(total) == 0)
        return c.torsion == Torsion::generic ? H0Value(Integer(0)) : H0Value(Indeterminate{});
    if (sgn(c.k) == 0)
        return Integer(c.ell * c.ell);
    const Integer num = (c.k * c.k + 1) * total * total;
    if (mpz_odd_p(num.get_mpz_t()))
        throw InvariantViolation("(k^2+1)(k+2l)^2 is odd");
    return Integer(num / 2);
}

Integer chi_theta_power(const Integer &m, const Integer &k_pol) {
    require_positive(k_pol, "k_pol");
    return m * m * k_pol;
}

Integer chi_hilb2(const Integer &m) {
    require_positive(m, "m");
    return binomial(m * m + 1, 2);
}

Integer dim_Vk(const Integer &m) {
    require_positive(m, "m");
    const Integer dim = 2 * (m * m + 1);
    if (m * m * dim != 4 * chi_hilb2(m))
        throw InvariantViolation("m^2 dim V / 4 != chi");
    return dim;
}

Integer even_theta_dim(unsigned g, const Integer &m) {
    if (g < 1)
        throw ParameterError("genus must be >= 1");
    require_positive(m, "m");
    const Integer mg = pow(m, g);
    return mpz_even_p(m.get_mpz_t()) ? Integer((mg + pow(Integer(2), g)) / 2) : Integer((mg + 1) / 2);
}

Integer even_theta_dim_bruteforce(unsigned g, const Integer &m) {
    if (g < 1)
        throw ParameterError("genus must be >= 1");
    require_positive(m, "m");
    if (pow(m, g) > 10'000'000)
        throw ResourceLimitError("m^g = " + to_string(pow(m, g)) + " exceeds the enumeration cap 10^7");
    const unsigned long mod = m.get_ui();
    std::vector<unsigned long> v(g, 0);
    unsigned long fixed = 0, total = 0;
    while (true) {
        bool is_fixed = true;
        for (unsigned long c : v)
            is_fixed = is_fixed && (2 * c) % mod == 0;
        fixed += is_fixed;
        ++total;
        std::size_t i = 0;
        while (i < g && ++v[i] == mod)
            v[i++] = 0;
        if (i == g)
            break;
    }
    if ((total - fixed) % 2 != 0)
        throw InvariantViolation("negation has an odd number of moving points");
    return Integer(fixed) + Integer((total - fixed) / 2);
}

unsigned promote_vanishing_order(unsigned order) { return order + (order % 2); }

VanishingBound h0_even_vanishing_bound(const Integer &m, unsigned order) {
    const unsigned effective = promote_vanishing_order(order);
    const Integer v = effective / 2;
    Integer bound = even_theta_dim(2, m) - v * v;
    if (sgn(bound) < 0)
        bound = 0;
    return {order, effective, bound};
}

Integer seshadri_max_multiplicity(const Integer &m) {
    require_positive(m, "m");
    return floor_div(3 * m, 2);
}

} // namespace hilbcert
