#pragma once

#include "hilbcert/int_poly.hpp"
#include "hilbcert/ns_lattice.hpp"
#include "hilbcert/report.hpp"
#include "hilbcert/ring_matrix.hpp"

#include <string>
#include <vector>

namespace hilbcert {

/// Variables a, b, c, d, e, f of a candidate matrix.
const IntPoly::Variables &candidate_variables();

/// One relation obtained by applying g^* to a degree-4 monomial and equating
/// with its intersection number.
struct DerivedRelation {
    std::string name;      // e.g. "y^2 B^2"
    Integer invariant;     // the intersection number of the monomial
    IntPoly difference;    // (g^* monomial) - invariant, expanded
    Integer divisor;       // the k-factor divided out
    IntPoly reduced;       // difference / divisor
    IntPoly stated;        // the relation as usually written, lhs - rhs
    std::string stated_text;
};

/// The relations forced by intersection numbers, plus det = +-1:
///   k a^2 - 2c^2 = -2,   c (a + 2b)^2 = 0 (so a + 2b = 0),
///   k d^2 - 2f^2 = k,    (k d^2 - 2f^2)(d + 2e)^2 = k (so (d + 2e)^2 = 1).
struct ConstraintSystem {
    Integer k_pol;
    std::vector<DerivedRelation> relations;

    /// All four relations and |det| = 1.
    bool satisfied_by(const CandidateMatrix &m) const;
};

/// Expands the four monomials symbolically through quartic_form and checks
/// each reduced polynomial against its stated form (InvariantViolation if
/// they differ).
ConstraintSystem derive_constraints(const Integer &k_pol);

inline constexpr long default_search_bound = 1000;

/// k_pol = 2 ell^2.
EliminationReport eliminate_perfect_square(const Integer &ell, const Integer &bound = default_search_bound);

/// k_pol = 1.
EliminationReport eliminate_principal(const Integer &bound = default_search_bound);

/// Any k_pol >= 1; delegates to the two proved cases and otherwise uses
/// only polarization-independent rules.
EliminationReport eliminate_general(const Integer &k_pol, const Integer &bound = default_search_bound);

/// The 2x2 matrices [[h1, h2], [h2, h1]] over Z with h1^2 - h2^2 = +-1:
/// +-identity and +-swap.
std::vector<IntMatrix> classify_equivariant_2x2_units();

} // namespace hilbcert
