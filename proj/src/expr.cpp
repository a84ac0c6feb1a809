#include "hilbcert/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hilbcert {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_function(std::string_view name) { return name == "ceildiv" || name == "floordiv"; }

void collect_identifiers(std::string_view text, std::set<std::string> &out) {
    for (std::size_t i = 0; i < text.size();) {
        if (is_ident_start(text[i])) {
            const std::size_t start = i;
            while (i < text.size() && is_ident_char(text[i]))
                ++i;
            const std::string_view name = text.substr(start, i - start);
            if (!is_function(name))
                out.emplace(name);
        } else {
            ++i;
        }
    }
}

class Parser {
  public:
    Parser(std::string_view text, const IntPoly::Variables &vars) : text_(text), vars_(vars) {}

    IntPoly parse() {
        IntPoly value = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

  private:
    std::string_view text_;
    const IntPoly::Variables &vars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &why) const {
        throw ParameterError("expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    Integer constant_of(const IntPoly &p, const char *what) const {
        if (!p.is_constant())
            fail(std::string(what) + " must be a constant");
        return p.constant_term();
    }

    IntPoly expr() {
        IntPoly value = term();
        while (true) {
            if (accept('+'))
                value += term();
            else if (accept('-'))
                value -= term();
            else
                return value;
        }
    }

    IntPoly term() {
        IntPoly value = unary();
        while (true) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                const Integer divisor = constant_of(unary(), "divisor");
                if (sgn(divisor) == 0)
                    fail("division by zero");
                try {
                    value = value.divexact(divisor);
                } catch (const ParameterError &) {
                    fail("division by " + to_string(divisor) + " is not exact");
                }
            } else {
                return value;
            }
        }
    }

    IntPoly unary() {
        if (accept('-'))
            return -unary();
        return power();
    }

    IntPoly power() {
        IntPoly base = atom();
        if (accept('^')) {
            const Integer e = constant_of(unary(), "exponent");
            if (sgn(e) < 0 || e > 256)
                fail("exponent out of range");
            return pow(base, unsigned(e.get_ui()));
        }
        return base;
    }

    IntPoly atom() {
        skip();
        if (pos_ == text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            IntPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return IntPoly::constant(vars_, parse_integer(text_.substr(start, pos_ - start)));
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (is_function(name)) {
                expect('(');
                const Integer a = constant_of(expr(), "function argument");
                expect(',');
                const Integer b = constant_of(expr(), "function argument");
                expect(')');
                if (sgn(b) == 0)
                    fail("division by zero");
                return IntPoly::constant(vars_, name == "ceildiv" ? ceil_div(a, b) : floor_div(a, b));
            }
            return IntPoly::variable(vars_, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

IntPoly::Variables variables_of(std::initializer_list<std::string_view> texts) {
    std::set<std::string> names;
    for (std::string_view t : texts)
        collect_identifiers(t, names);
    return {names.begin(), names.end()};
}

bool all_coefficients_nonnegative(const IntPoly &p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto &term) { return sgn(term.second) >= 0; });
}

} // namespace

IntPoly parse_expression(std::string_view text) {
    const IntPoly::Variables vars = variables_of({text});
    return Parser(text, vars).parse();
}

std::pair<IntPoly, IntPoly> parse_expression_pair(std::string_view lhs, std::string_view rhs) {
    const IntPoly::Variables vars = variables_of({lhs, rhs});
    return {Parser(lhs, vars).parse(), Parser(rhs, vars).parse()};
}

EquationCheck check_equation(const Equation &eq) {
    static const std::set<std::string> relations{"=", "!=", "<", "<=", ">", ">="};
    if (!relations.count(eq.rel))
        return {false, "unknown relation '" + eq.rel + "'"};
    IntPoly lhs, rhs;
    try {
        std::tie(lhs, rhs) = parse_expression_pair(eq.lhs, eq.rhs);
    } catch (const ParameterError &err) {
        return {false, err.what()};
    }
    IntPoly diff = lhs - rhs;

    if (eq.forall) {
        const auto &vars = diff.variables();
        for (const auto &v : vars)
            if (v != eq.forall->var)
                return {false, "variable '" + v + "' is not the quantified one"};
        if (!vars.empty()) {
            const std::size_t idx = diff.variable_index(eq.forall->var);
            const IntPoly t = IntPoly::variable(vars, eq.forall->var);
            const IntPoly shift = IntPoly::constant(vars, eq.forall->bound);
            diff = diff.substitute(idx, eq.forall->lower ? shift + t : shift - t);
        }
        const IntPoly one = IntPoly::constant(diff.variables(), 1);
        bool ok = false;
        if (eq.rel == "=")
            ok = diff.is_zero();
        else if (eq.rel == ">=")
            ok = all_coefficients_nonnegative(diff);
        else if (eq.rel == ">")
            ok = all_coefficients_nonnegative(diff - one);
        else if (eq.rel == "<=")
            ok = all_coefficients_nonnegative(-diff);
        else if (eq.rel == "<")
            ok = all_coefficients_nonnegative(-diff - one);
        else
            return {false, "'!=' cannot be quantified"};
        return {ok, ok ? "" : "shifted difference " + diff.to_string() + " has a coefficient of the wrong sign"};
    }

    if (!diff.is_constant()) {
        if (eq.rel != "=")
            return {false, "non-constant sides need '=' or a quantifier"};
        return {diff.is_zero(), diff.is_zero() ? "" : "sides differ by " + diff.to_string()};
    }
    const int s = sgn(diff.constant_term());
    bool ok = false;
    if (eq.rel == "=")
        ok = s == 0;
    else if (eq.rel == "!=")
        ok = s != 0;
    else if (eq.rel == "<")
        ok = s < 0;
    else if (eq.rel == "<=")
        ok = s <= 0;
    else if (eq.rel == ">")
        ok = s > 0;
    else
        ok = s >= 0;
    return {ok, ok ? "" : to_string(lhs.constant_term()) + " " + eq.rel + " " + to_string(rhs.constant_term()) + " is false"};
}

std::string to_string(const Equation &eq) {
    std::string out = eq.lhs + " " + eq.rel + " " + eq.rhs;
    if (eq.forall)
        out += " for all " + eq.forall->var + (eq.forall->lower ? " >= " : " <= ") + to_string(eq.forall->bound);
    return out;
}

} // namespace hilbcert
