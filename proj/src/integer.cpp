#include "hilbcert/integer.hpp"

#include "hilbcert/errors.hpp"

namespace hilbcert {

Integer pow(const Integer &base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Integer isqrt(const Integer &n) {
    if (sgn(n) < 0)
        throw ParameterError("isqrt of a negative integer");
    Integer out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

bool is_perfect_square(const Integer &n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer binomial(const Integer &n, unsigned long k) {
    if (sgn(n) < 0)
        throw ParameterError("binomial with negative upper index");
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

Integer ceil_div(const Integer &a, const Integer &b) {
    if (sgn(b) == 0)
        throw ParameterError("division by zero");
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer floor_div(const Integer &a, const Integer &b) {
    if (sgn(b) == 0)
        throw ParameterError("division by zero");
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::string to_string(const Integer &n) { return n.get_str(10); }

Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    const bool neg = !s.empty() && s.front() == '-';
    if (s.size() == std::size_t(neg) ||
        s.find_first_not_of("0123456789", neg ? 1 : 0) != std::string::npos)
        throw ParameterError("not an integer: '" + std::string(text) + "'");
    return Integer(s, 10);
}

long to_long(const Integer &n) {
    if (!n.fits_slong_p())
        throw ParameterError("integer " + to_string(n) + " out of machine range");
    return n.get_si();
}

} // namespace hilbcert
