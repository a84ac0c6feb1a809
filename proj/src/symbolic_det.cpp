#include "hilbcert/symbolic_det.hpp"

namespace hilbcert {

namespace {

IntPoly var(const char *name) { return IntPoly::variable(xy_variables(), name); }
IntPoly cst(long c) { return IntPoly::constant(xy_variables(), c); }

} // namespace

const IntPoly::Variables &xy_variables() {
    static const IntPoly::Variables vars{"x", "y"};
    return vars;
}

IntPoly m_det_closed_form(unsigned n) {
    if (n < 1)
        throw DimensionError("M_n is defined for n >= 1");
    const IntPoly x = var("x"), y = var("y");
    return pow(x - y, n - 1) * (x + cst(long(n) - 1) * y);
}

IntPoly t_det_closed_form(unsigned n) {
    if (n < 2)
        throw DimensionError("T_n is defined for n >= 2");
    const IntPoly x = var("x"), y = var("y");
    return y * pow(x - y, n - 1);
}

IntPoly symbolic_det_Mn(unsigned n) {
    if (n < 1)
        throw DimensionError("M_n is defined for n >= 1");
    const IntPoly det = det_cofactor(m_matrix(n, var("x"), var("y")));
    if (!(det == m_det_closed_form(n)))
        throw InvariantViolation("det(M_" + std::to_string(n) + ") expansion " + det.to_string() +
                                 " differs from the closed form");
    return det;
}

IntPoly symbolic_det_Tn(unsigned n) {
    if (n < 2)
        throw DimensionError("T_n is defined for n >= 2");
    const IntPoly det = det_cofactor(t_matrix(n, var("x"), var("y")));
    if (!(det == t_det_closed_form(n)))
        throw InvariantViolation("det(T_" + std::to_string(n) + ") expansion " + det.to_string() +
                                 " differs from the closed form");
    return det;
}

} // namespace hilbcert
