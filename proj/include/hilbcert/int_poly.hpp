#pragma once

#include "hilbcert/integer.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hilbcert {

/// Multivariate polynomial with integer coefficients over a declared, ordered
/// set of variables.
///
/// Terms are kept canonical: zero coefficients are never stored, so two
/// polynomials over the same variables are equal iff their term maps are.
/// Iteration order is graded lexicographic, highest monomial first, which is
/// also the printing order.
///
/// A polynomial whose variable list is empty is a plain integer and may be
/// combined with a polynomial over any variable set.
class IntPoly {
  public:
    using Exponents = std::vector<unsigned>;
    using Variables = std::vector<std::string>;

    struct GrlexGreater {
        bool operator()(const Exponents &lhs, const Exponents &rhs) const;
    };
    using Terms = std::map<Exponents, Integer, GrlexGreater>;

    /// The zero polynomial with no variables.
    IntPoly();
    /// The zero polynomial over `vars` (names must be distinct).
    explicit IntPoly(Variables vars);

    static IntPoly constant(const Variables &vars, const Integer &c);
    static IntPoly variable(const Variables &vars, std::string_view name);
    static IntPoly monomial(const Variables &vars, Exponents exps, const Integer &c);

    const Variables &variables() const { return *vars_; }
    const Terms &terms() const { return terms_; }
    std::size_t variable_index(std::string_view name) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (0 if absent).
    Integer constant_term() const;
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    /// Coefficient of var^e as a polynomial over the same variables.
    IntPoly coefficient_in(std::size_t var, unsigned e) const;

    Integer evaluate(std::span<const Integer> point) const;
    /// Replaces variable `var` by `value` (over the same variables).
    IntPoly substitute(std::size_t var, const IntPoly &value) const;
    /// Divides every coefficient by `divisor`; throws ParameterError if any
    /// coefficient is not divisible.
    IntPoly divexact(const Integer &divisor) const;
    /// Remainder after division by `modulus`, which must have leading
    /// coefficient 1 as a polynomial in `var`.
    IntPoly rem_monic(std::size_t var, const IntPoly &modulus) const;
    /// The same polynomial written over a superset of its variables.
    IntPoly extend_to(const Variables &vars) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly &p, const IntPoly &q);
    friend IntPoly operator-(const IntPoly &p, const IntPoly &q);
    friend IntPoly operator*(const IntPoly &p, const IntPoly &q);
    friend IntPoly operator*(const Integer &c, const IntPoly &p);
    IntPoly &operator+=(const IntPoly &q);
    IntPoly &operator-=(const IntPoly &q);
    IntPoly &operator*=(const IntPoly &q) { return *this = *this * q; }
    friend bool operator==(const IntPoly &p, const IntPoly &q);

    /// Human-readable form, e.g. "x^3 - 3*x*y^2 + 2*y^3".
    std::string to_string() const;

  private:
    std::shared_ptr<const Variables> vars_;
    Terms terms_;

    void add_term(const Exponents &e, const Integer &c);
    // Variables shared by p and q, promoting a variable-free operand.
    static std::shared_ptr<const Variables> common_vars(const IntPoly &p, const IntPoly &q);
    Exponents zero_exponents() const { return Exponents(vars_->size(), 0u); }
};

IntPoly pow(const IntPoly &p, unsigned exponent);

inline IntPoly zero_like(const IntPoly &p) { return IntPoly(p.variables()); }
inline IntPoly one_like(const IntPoly &p) { return IntPoly::constant(p.variables(), 1); }
inline bool same_ring(const IntPoly &p, const IntPoly &q) {
    return p.variables().empty() || q.variables().empty() || p.variables() == q.variables();
}
inline bool is_zero(const IntPoly &p) { return p.is_zero(); }

} // namespace hilbcert
