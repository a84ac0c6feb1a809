#pragma once

#include "hilbcert/errors.hpp"
#include "hilbcert/integer.hpp"
#include "hilbcert/ns_lattice.hpp"

namespace hilbcert {

/// h*H + e*(1/2 sum E_i) on a Kummer surface with H^2 = 4*k_pol.
struct KummerClass {
    Integer h, e;
    Integer k_pol;

    KummerClass(Integer h_, Integer e_, Integer k_pol_ = 1);
    friend bool operator==(const KummerClass &, const KummerClass &) = default;
};

/// 4*k_pol*h1*h2 - 8*e1*e2.
Integer kummer_form(const KummerClass &c1, const KummerClass &c2);

/// Degree of c on each exceptional curve E_i: e * (1/2)(E_i . E_i) = -e.
Integer node_degree(const KummerClass &c);

/// Switch involution: H -> 3H - sum E_i, (1/2) sum E_i -> 4H - (3/2) sum E_i.
/// Only defined for k_pol = 1.
KummerClass switch_pullback(const KummerClass &c);

/// Riemann-Roch on a K3 surface: c^2/2 + 2.
Integer rr_chi(const KummerClass &c);

struct MuTildePullback {
    Integer abelian_exponent; // power of Theta on the A factor
    KummerClass kummer;
};

/// Pullback of kx + ly + mB to A x Km(A).
MuTildePullback mu_tilde_pullback(const DivisorClassH2 &c);

struct SubcaseChain {
    Integer d1, f1;
    Integer d0, f0;               // previous solution
    Integer node_degree;          // of d0 H + f0/2 sum E on each E_i, equals -f0
    Integer h0_kummer;            // h0(d0 H) = chi = 2(d0^2 + 1)
    Integer h0_abelian;           // h0(A, Theta^2) = 4
    Integer total;                // h0_abelian * h0_kummer
    Integer pigeonhole;           // ceil(total / 16)
};

/// Sections of the 16 twists of d1 x + e1 y - f1 B (d1 = 1 - 2 e1), counted
/// on A x Km(A) through the switch involution. Requires d1^2 - 2 f1^2 = 1
/// with d1 >= 17, f1 > 0.
SubcaseChain subcase_ii_h0_chain(const Integer &d1, const Integer &f1);

} // namespace hilbcert
