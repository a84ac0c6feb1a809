#include "hilbcert/quad_int.hpp"

#include "hilbcert/errors.hpp"

namespace hilbcert {

namespace {

void require_same_order(const QuadInt &u, const QuadInt &v) {
    if (u.discriminant_parameter() != v.discriminant_parameter())
        throw ParameterError("QuadInt operands live in different orders: d=" +
                             to_string(u.discriminant_parameter()) + " vs d=" +
                             to_string(v.discriminant_parameter()));
}

} // namespace

QuadInt::QuadInt(Integer a, Integer b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 2 || is_perfect_square(d_))
        throw ParameterError("Z[sqrt(d)] needs d >= 2 not a perfect square, got d=" + hilbcert::to_string(d_));
}

Integer QuadInt::norm() const { return a_ * a_ - d_ * b_ * b_; }

bool QuadInt::is_unit() const {
    const Integer n = norm();
    return n == 1 || n == -1;
}

QuadInt operator+(const QuadInt &u, const QuadInt &v) {
    require_same_order(u, v);
    return {QuadInt::Trusted{}, u.a_ + v.a_, u.b_ + v.b_, u.d_};
}

QuadInt operator-(const QuadInt &u, const QuadInt &v) {
    require_same_order(u, v);
    return {QuadInt::Trusted{}, u.a_ - v.a_, u.b_ - v.b_, u.d_};
}

QuadInt operator*(const QuadInt &u, const QuadInt &v) {
    require_same_order(u, v);
    return {QuadInt::Trusted{}, u.a_ * v.a_ + u.d_ * u.b_ * v.b_, u.a_ * v.b_ + v.a_ * u.b_, u.d_};
}

std::string QuadInt::to_string() const {
    const std::string root = "sqrt(" + hilbcert::to_string(d_) + ")";
    if (sgn(b_) == 0)
        return hilbcert::to_string(a_);
    std::string irr = (b_ == 1 ? root : (b_ == -1 ? "-" + root : hilbcert::to_string(b_) + "*" + root));
    if (sgn(a_) == 0)
        return irr;
    if (sgn(b_) < 0)
        return hilbcert::to_string(a_) + " - " + irr.substr(1);
    return hilbcert::to_string(a_) + " + " + irr;
}

} // namespace hilbcert
