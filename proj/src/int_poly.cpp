#include "hilbcert/int_poly.hpp"

#include "hilbcert/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hilbcert {

namespace {

unsigned degree(const IntPoly::Exponents &e) { return std::accumulate(e.begin(), e.end(), 0u); }

const std::shared_ptr<const IntPoly::Variables> &no_variables() {
    static const auto empty = std::make_shared<const IntPoly::Variables>();
    return empty;
}

} // namespace

bool IntPoly::GrlexGreater::operator()(const Exponents &lhs, const Exponents &rhs) const {
    const unsigned dl = degree(lhs), dr = degree(rhs);
    if (dl != dr)
        return dl > dr;
    return lhs > rhs;
}

IntPoly::IntPoly() : vars_(no_variables()) {}

IntPoly::IntPoly(Variables vars) {
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw ParameterError("IntPoly variables must be distinct");
    vars_ = vars.empty() ? no_variables() : std::make_shared<const Variables>(std::move(vars));
}

IntPoly IntPoly::constant(const Variables &vars, const Integer &c) {
    IntPoly p(vars);
    p.add_term(p.zero_exponents(), c);
    return p;
}

IntPoly IntPoly::variable(const Variables &vars, std::string_view name) {
    IntPoly p(vars);
    Exponents e = p.zero_exponents();
    e[p.variable_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

IntPoly IntPoly::monomial(const Variables &vars, Exponents exps, const Integer &c) {
    IntPoly p(vars);
    if (exps.size() != vars.size())
        throw ParameterError("exponent vector length does not match the variable count");
    p.add_term(exps, c);
    return p;
}

std::size_t IntPoly::variable_index(std::string_view name) const {
    const auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end())
        throw ParameterError("unknown polynomial variable '" + std::string(name) + "'");
    return std::size_t(it - vars_->begin());
}

void IntPoly::add_term(const Exponents &e, const Integer &c) {
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

bool IntPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

Integer IntPoly::constant_term() const {
    const auto it = terms_.find(zero_exponents());
    return it == terms_.end() ? Integer(0) : it->second;
}

unsigned IntPoly::total_degree() const { return terms_.empty() ? 0 : degree(terms_.begin()->first); }

unsigned IntPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto &[e, c] : terms_)
        d = std::max(d, e.at(var));
    return d;
}

IntPoly IntPoly::coefficient_in(std::size_t var, unsigned e) const {
    IntPoly out(*this);
    out.terms_.clear();
    for (const auto &[exps, c] : terms_) {
        if (exps.at(var) != e)
            continue;
        Exponents rest = exps;
        rest[var] = 0;
        out.add_term(rest, c);
    }
    return out;
}

Integer IntPoly::evaluate(std::span<const Integer> point) const {
    if (point.size() != vars_->size())
        throw ParameterError("evaluation point has the wrong number of coordinates");
    Integer total = 0;
    for (const auto &[e, c] : terms_) {
        Integer term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term *= hilbcert::pow(point[i], e[i]);
        total += term;
    }
    return total;
}

IntPoly IntPoly::substitute(std::size_t var, const IntPoly &value) const {
    if (var >= vars_->size())
        throw ParameterError("substitution variable out of range");
    const IntPoly v = value.extend_to(*vars_);
    IntPoly out(*this);
    out.terms_.clear();
    std::vector<IntPoly> powers{IntPoly::constant(*vars_, 1)};
    for (const auto &[e, c] : terms_) {
        while (powers.size() <= e[var])
            powers.push_back(powers.back() * v);
        Exponents rest = e;
        rest[var] = 0;
        out += IntPoly::monomial(*vars_, rest, c) * powers[e[var]];
    }
    return out;
}

IntPoly IntPoly::divexact(const Integer &divisor) const {
    if (sgn(divisor) == 0)
        throw ParameterError("polynomial division by zero");
    IntPoly out(*this);
    for (auto &[e, c] : out.terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
            throw ParameterError("coefficient " + hilbcert::to_string(c) + " not divisible by " +
                                 hilbcert::to_string(divisor));
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    }
    return out;
}

IntPoly IntPoly::rem_monic(std::size_t var, const IntPoly &modulus) const {
    const IntPoly m = modulus.extend_to(*vars_);
    const unsigned dm = m.degree_in(var);
    if (dm == 0 || !(m.coefficient_in(var, dm) == IntPoly::constant(*vars_, 1)))
        throw ParameterError("rem_monic needs a modulus monic of positive degree");
    IntPoly r(*this);
    for (unsigned dr = r.degree_in(var); !r.is_zero() && dr >= dm; dr = r.degree_in(var)) {
        Exponents shift = zero_exponents();
        shift[var] = dr - dm;
        r -= r.coefficient_in(var, dr) * IntPoly::monomial(*vars_, shift, 1) * m;
    }
    return r;
}

IntPoly IntPoly::extend_to(const Variables &vars) const {
    if (*vars_ == vars)
        return *this;
    IntPoly out(vars);
    std::vector<std::size_t> where(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i)
        where[i] = out.variable_index((*vars_)[i]);
    for (const auto &[e, c] : terms_) {
        Exponents f = out.zero_exponents();
        for (std::size_t i = 0; i < e.size(); ++i)
            f[where[i]] = e[i];
        out.add_term(f, c);
    }
    return out;
}

std::shared_ptr<const IntPoly::Variables> IntPoly::common_vars(const IntPoly &p, const IntPoly &q) {
    if (p.vars_ == q.vars_ || *p.vars_ == *q.vars_)
        return p.vars_;
    if (p.vars_->empty())
        return q.vars_;
    if (q.vars_->empty())
        return p.vars_;
    throw ParameterError("IntPoly operands declared over different variables");
}

IntPoly IntPoly::operator-() const {
    IntPoly out(*this);
    for (auto &[e, c] : out.terms_)
        c = -c;
    return out;
}

IntPoly &IntPoly::operator+=(const IntPoly &q) {
    auto vars = common_vars(*this, q);
    if (vars != vars_)
        *this = extend_to(*vars);
    const IntPoly rhs = q.extend_to(*vars_);
    for (const auto &[e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

IntPoly &IntPoly::operator-=(const IntPoly &q) { return *this += -q; }

IntPoly operator+(const IntPoly &p, const IntPoly &q) {
    IntPoly out(p);
    out += q;
    return out;
}

IntPoly operator-(const IntPoly &p, const IntPoly &q) {
    IntPoly out(p);
    out -= q;
    return out;
}

IntPoly operator*(const IntPoly &p, const IntPoly &q) {
    const auto vars = IntPoly::common_vars(p, q);
    const IntPoly lhs = p.extend_to(*vars), rhs = q.extend_to(*vars);
    IntPoly out(lhs);
    out.terms_.clear();
    IntPoly::Exponents e(vars->size());
    for (const auto &[el, cl] : lhs.terms_)
        for (const auto &[er, cr] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = el[i] + er[i];
            out.add_term(e, cl * cr);
        }
    return out;
}

IntPoly operator*(const Integer &c, const IntPoly &p) {
    if (sgn(c) == 0)
        return IntPoly(p.variables());
    IntPoly out(p);
    for (auto &[e, v] : out.terms_)
        v *= c;
    return out;
}

bool operator==(const IntPoly &p, const IntPoly &q) {
    if (p.vars_ == q.vars_ || *p.vars_ == *q.vars_)
        return p.terms_ == q.terms_;
    if (p.vars_->empty() || q.vars_->empty())
        return p.is_constant() && q.is_constant() && p.constant_term() == q.constant_term();
    return false;
}

std::string IntPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        const bool neg = sgn(c) < 0;
        const Integer mag = abs(c);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += (*vars_)[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += hilbcert::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += hilbcert::to_string(mag) + "*" + mono;
    }
    return out;
}

IntPoly pow(const IntPoly &p, unsigned exponent) {
    IntPoly result = IntPoly::constant(p.variables(), 1);
    IntPoly base = p;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

} // namespace hilbcert
