#include "hilbcert/kummer.hpp"
#include "hilbcert/sections.hpp"

namespace hilbcert {

KummerClass::KummerClass(Integer h_, Integer e_, Integer k_pol_)
    : h(std::move(h_)), e(std::move(e_)), k_pol(std::move(k_pol_)) {
    if (k_pol < 1)
        throw ParameterError("k_pol must be >= 1");
}

Integer kummer_form(const KummerClass &c1, const KummerClass &c2) {
    if (c1.k_pol != c2.k_pol)
        throw ParameterError("Kummer classes for different polarizations");
    return 4 * c1.k_pol * c1.h * c2.h - 8 * c1.e * c2.e;
}

Integer node_degree(const KummerClass &c) { return -c.e; }

namespace {

KummerClass apply_switch(const KummerClass &c) { return {3 * c.h + 4 * c.e, -2 * c.h - 3 * c.e, c.k_pol}; }

} // namespace

KummerClass switch_pullback(const KummerClass &c) {
    if (c.k_pol != 1)
        throw ParameterError("switch involution is only available for k_pol = 1");
    KummerClass image = apply_switch(c);
    if (!(apply_switch(image) == c))
        throw InvariantViolation("switch pullback is not an involution");
    if (kummer_form(image, image) != kummer_form(c, c))
        throw InvariantViolation("switch pullback does not preserve the intersection form");
    return image;
}

Integer rr_chi(const KummerClass &c) {
    const Integer self = kummer_form(c, c);
    if (mpz_odd_p(self.get_mpz_t()))
        throw InvariantViolation("odd self-intersection on an even lattice");
    return self / 2 + 2;
}

MuTildePullback mu_tilde_pullback(const DivisorClassH2 &c) {
    return {2 * c.a + 4 * c.b, KummerClass(c.a, c.c, c.k)};
}

SubcaseChain subcase_ii_h0_chain(const Integer &d1, const Integer &f1) {
    if (d1 * d1 - 2 * f1 * f1 != 1 || sgn(f1) <= 0)
        throw ParameterError("(" + to_string(d1) + ", " + to_string(f1) + ") is not a positive solution of d^2 - 2f^2 = 1");
    if (d1 < 17)
        throw ParameterError("the chain argument needs d1 >= 17");
    SubcaseChain out;
    out.d1 = d1;
    out.f1 = f1;
    out.d0 = 3 * d1 - 4 * f1;
    out.f0 = -2 * d1 + 3 * f1;
    if (3 * out.d0 + 4 * out.f0 != d1 || 2 * out.d0 + 3 * out.f0 != f1)
        throw InvariantViolation("previous solution does not map forward");
    if (out.d0 < 3 || out.f0 < 2)
        throw InvariantViolation("previous solution is not positive");

    const KummerClass source(out.d0, out.f0);
    if (!(switch_pullback(source) == KummerClass(d1, -f1)))
        throw InvariantViolation("switch image is not d1 H - f1/2 sum E");
    out.node_degree = node_degree(source);
    if (out.node_degree != -out.f0)
        throw InvariantViolation("restriction to a node is not O(-f0)");
    // Negative degree on every node: the restriction has no sections, so
    // h0(d0 H + f0/2 sum E) = h0(d0 H) = chi(d0 H).
    out.h0_kummer = rr_chi(KummerClass(out.d0, 0));
    if (out.h0_kummer != 2 * (out.d0 * out.d0 + 1))
        throw InvariantViolation("chi(d0 H) != 2(d0^2 + 1)");
    const auto abelian = mu_tilde_pullback(DivisorClassH2(d1, (1 - d1) / 2, -f1, 1));
    if (abelian.abelian_exponent != 2)
        throw InvariantViolation("abelian factor of the pullback is not Theta^2");
    out.h0_abelian = chi_theta_power(abelian.abelian_exponent, 1);
    out.total = out.h0_abelian * out.h0_kummer;
    out.pigeonhole = ceil_div(out.total, 16);
    return out;
}

} // namespace hilbcert
