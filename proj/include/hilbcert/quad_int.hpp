#pragma once

#include "hilbcert/integer.hpp"

#include <string>

namespace hilbcert {

/// Element a + b*sqrt(d) of the real quadratic order Z[sqrt(d)], with d >= 2
/// not a perfect square. Binary operations require both operands to carry the
/// same d.
class QuadInt {
  public:
    QuadInt(Integer a, Integer b, Integer d);

    /// The rational integer n embedded in Z[sqrt(d)].
    static QuadInt from_integer(const Integer &n, const Integer &d) { return {n, 0, d}; }
    static QuadInt sqrt_d(const Integer &d) { return {0, 1, d}; }

    const Integer &rational() const { return a_; }
    const Integer &irrational() const { return b_; }
    const Integer &discriminant_parameter() const { return d_; }

    /// a^2 - d*b^2; multiplicative.
    Integer norm() const;
    QuadInt conjugate() const { return {a_, -b_, d_}; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_unit() const;

    QuadInt operator-() const { return {-a_, -b_, d_}; }
    friend QuadInt operator+(const QuadInt &u, const QuadInt &v);
    friend QuadInt operator-(const QuadInt &u, const QuadInt &v);
    friend QuadInt operator*(const QuadInt &u, const QuadInt &v);
    QuadInt &operator+=(const QuadInt &v) { return *this = *this + v; }
    QuadInt &operator-=(const QuadInt &v) { return *this = *this - v; }
    QuadInt &operator*=(const QuadInt &v) { return *this = *this * v; }
    friend bool operator==(const QuadInt &u, const QuadInt &v) {
        return u.d_ == v.d_ && u.a_ == v.a_ && u.b_ == v.b_;
    }

    std::string to_string() const;

  private:
    // Skips validation; d is already known to be valid.
    struct Trusted {};
    QuadInt(Trusted, Integer a, Integer b, Integer d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    Integer a_;
    Integer b_;
    Integer d_;
};

inline QuadInt zero_like(const QuadInt &x) { return QuadInt::from_integer(0, x.discriminant_parameter()); }
inline QuadInt one_like(const QuadInt &x) { return QuadInt::from_integer(1, x.discriminant_parameter()); }
inline bool same_ring(const QuadInt &x, const QuadInt &y) {
    return x.discriminant_parameter() == y.discriminant_parameter();
}
inline bool is_zero(const QuadInt &x) { return x.is_zero(); }

} // namespace hilbcert
