#pragma once

#include "hilbcert/errors.hpp"
#include "hilbcert/integer.hpp"

#include <string>
#include <variant>

namespace hilbcert {

// Every formula here assumes a principal polarization (Theta^2 = 2).

/// Type of the Pic^0 twist L0.
enum class Torsion { trivial, two_torsion, generic };

std::string to_string(Torsion t);
/// Accepts "trivial", "two-torsion", "generic".
Torsion parse_torsion(const std::string &text);

/// The line bundle Theta_(2)^k (x) Sigma^*Theta^ell (x) L0 on A^(2).
struct SectionClass {
    Integer k, ell;
    Torsion torsion = Torsion::trivial;
};

/// Returned where only estimates are available (k >= 0, k + 2 ell = 0 with
/// L0 trivial or 2-torsion).
struct Indeterminate {
    friend bool operator==(Indeterminate, Indeterminate) { return true; }
};

using H0Value = std::variant<Integer, Indeterminate>;

H0Value h0_symmetric_product(const SectionClass &c);

/// chi(A, Theta^m) = m^2 * Theta^2 / 2 for Theta^2 = 2*k_pol.
Integer chi_theta_power(const Integer &m, const Integer &k_pol);

/// chi of Theta_[2]^m on A^[2]: binomial(m^2 + 1, 2).
Integer chi_hilb2(const Integer &m);

/// 2(m^2 + 1); checks m^2 * dim / 4 = chi_hilb2(m).
Integer dim_Vk(const Integer &m);

/// Number of even theta functions of level m in genus g.
Integer even_theta_dim(unsigned g, const Integer &m);

/// Orbit count of v -> -v on (Z/m)^g: fixed points plus half the moving
/// points. Throws ResourceLimitError when m^g > 10^7.
Integer even_theta_dim_bruteforce(unsigned g, const Integer &m);

/// An even section vanishing to odd order 2v - 1 vanishes to order 2v.
unsigned promote_vanishing_order(unsigned order);

struct VanishingBound {
    unsigned requested_order;
    unsigned effective_order; // after parity promotion
    Integer bound;            // lower bound on the dimension
};

/// max(0, even_theta_dim(2, m) - v^2) for sections of Theta^m vanishing to
/// order 2v at the origin.
VanishingBound h0_even_vanishing_bound(const Integer &m, unsigned order);

/// floor(3m/2): maximal multiplicity at a point of a curve numerically
/// m*Theta, from the Seshadri constant 4/3.
Integer seshadri_max_multiplicity(const Integer &m);

} // namespace hilbcert
