#pragma once

#include "hilbcert/errors.hpp"
#include "hilbcert/integer.hpp"

#include <string>

namespace hilbcert {

/// Residue class in Z/mZ, m >= 2, stored in canonical form 0 <= value < m.
class ZMod {
  public:
    ZMod(const Integer &value, Integer modulus) : modulus_(std::move(modulus)) {
        if (modulus_ < 2)
            throw ParameterError("Z/mZ needs m >= 2");
        value_ = reduce(value);
    }

    const Integer &value() const { return value_; }
    const Integer &modulus() const { return modulus_; }

    ZMod operator-() const { return {-value_, modulus_}; }
    friend ZMod operator+(const ZMod &u, const ZMod &v) { return {u.value_ + check(u, v).value_, u.modulus_}; }
    friend ZMod operator-(const ZMod &u, const ZMod &v) { return {u.value_ - check(u, v).value_, u.modulus_}; }
    friend ZMod operator*(const ZMod &u, const ZMod &v) { return {u.value_ * check(u, v).value_, u.modulus_}; }
    ZMod &operator+=(const ZMod &v) { return *this = *this + v; }
    ZMod &operator-=(const ZMod &v) { return *this = *this - v; }
    ZMod &operator*=(const ZMod &v) { return *this = *this * v; }
    friend bool operator==(const ZMod &u, const ZMod &v) {
        return u.modulus_ == v.modulus_ && u.value_ == v.value_;
    }

    std::string to_string() const { return hilbcert::to_string(value_) + " mod " + hilbcert::to_string(modulus_); }

  private:
    Integer reduce(const Integer &v) const {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
        return r;
    }
    static const ZMod &check(const ZMod &u, const ZMod &v) {
        if (u.modulus_ != v.modulus_)
            throw ParameterError("Z/mZ operands with different moduli");
        return v;
    }

    Integer value_;
    Integer modulus_;
};

inline ZMod zero_like(const ZMod &x) { return {0, x.modulus()}; }
inline ZMod one_like(const ZMod &x) { return {1, x.modulus()}; }
inline bool same_ring(const ZMod &x, const ZMod &y) { return x.modulus() == y.modulus(); }
inline bool is_zero(const ZMod &x) { return sgn(x.value()) == 0; }

} // namespace hilbcert
