#include "hilbcert/report.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcert {

using nlohmann::json;

bool CandidateMatrix::is_identity() const {
    return d == 1 && sgn(e) == 0 && sgn(f) == 0 && sgn(a) == 0 && sgn(b) == 0 && c == 1;
}

std::string CandidateMatrix::to_string() const {
    auto s = [](const Integer &v) { return hilbcert::to_string(v); };
    return "[[" + s(d) + ", 0, " + s(a) + "], [" + s(e) + ", 1, " + s(b) + "], [" + s(f) + ", 0, " + s(c) + "]]";
}

bool operator<(const CandidateMatrix &u, const CandidateMatrix &v) {
    auto key = [](const CandidateMatrix &m) { return std::tie(m.k_pol, m.d, m.e, m.f, m.a, m.b, m.c); };
    return key(u) < key(v);
}

CandidateMatrix identity_candidate(const Integer &k_pol) { return {1, 0, 0, 0, 0, 1, k_pol}; }

std::string to_string(Applicability a) {
    switch (a) {
    case Applicability::general: return "general";
    case Applicability::principal_only: return "principal-only";
    case Applicability::perfect_square_only: return "perfect-square-only";
    }
    return "?";
}

Applicability parse_applicability(const std::string &text) {
    for (Applicability a : {Applicability::general, Applicability::principal_only, Applicability::perfect_square_only})
        if (to_string(a) == text)
            return a;
    throw ParameterError("unknown applicability '" + text + "'");
}

bool applies_to(Applicability a, const Integer &k_pol) {
    switch (a) {
    case Applicability::general: return true;
    case Applicability::principal_only: return k_pol == 1;
    case Applicability::perfect_square_only:
        return mpz_even_p(k_pol.get_mpz_t()) && sgn(k_pol) > 0 && is_perfect_square(k_pol / 2);
    }
    return false;
}

std::string to_string(Verdict v) { return v == Verdict::AllNatural ? "AllNatural" : "Inconclusive"; }

namespace {

json equation_json(const Equation &eq) {
    json j{{"lhs", eq.lhs}, {"rel", eq.rel}, {"rhs", eq.rhs}};
    if (eq.forall)
        j["forall"] = {{"var", eq.forall->var},
                       {"bound", to_string(eq.forall->bound)},
                       {"side", eq.forall->lower ? ">=" : "<="}};
    return j;
}

template <class T>
T field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        throw ParameterError(std::string("report is missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &err) {
        throw ParameterError(std::string("report field '") + key + "': " + err.what());
    }
}

Integer integer_field(const json &j, const char *key) { return parse_integer(field<std::string>(j, key)); }

Equation equation_from_json(const json &j) {
    Equation eq{field<std::string>(j, "lhs"), field<std::string>(j, "rel"), field<std::string>(j, "rhs"), {}};
    if (j.contains("forall")) {
        const json &q = j.at("forall");
        const std::string side = field<std::string>(q, "side");
        if (side != ">=" && side != "<=")
            throw ParameterError("quantifier side must be '>=' or '<='");
        eq.forall = Quantifier{field<std::string>(q, "var"), integer_field(q, "bound"), side == ">="};
    }
    return eq;
}

json equations_json(const std::vector<Equation> &eqs) {
    json out = json::array();
    for (const auto &eq : eqs)
        out.push_back(equation_json(eq));
    return out;
}

std::vector<Equation> equations_from_json(const json &j) {
    if (!j.is_array())
        throw ParameterError("equations must be an array");
    std::vector<Equation> out;
    for (const auto &e : j)
        out.push_back(equation_from_json(e));
    return out;
}

} // namespace

json to_json(const CandidateMatrix &m) {
    auto s = [](const Integer &v) { return to_string(v); };
    return {{"d", s(m.d)}, {"e", s(m.e)}, {"f", s(m.f)}, {"a", s(m.a)},
            {"b", s(m.b)}, {"c", s(m.c)}, {"k_pol", s(m.k_pol)}, {"det", s(m.det())}};
}

CandidateMatrix candidate_from_json(const json &j) {
    CandidateMatrix m{integer_field(j, "d"), integer_field(j, "e"), integer_field(j, "f"), integer_field(j, "a"),
                      integer_field(j, "b"), integer_field(j, "c"), integer_field(j, "k_pol")};
    if (j.contains("det") && integer_field(j, "det") != m.det())
        throw ParameterError("recorded determinant does not match the entries");
    return m;
}

json to_json(const EliminationReport &r) {
    json steps = json::array();
    for (const auto &s : r.steps) {
        json eliminated = json::array();
        for (const auto &e : s.eliminated) {
            json item{{"family", e.family}, {"reason", e.reason}, {"equations", equations_json(e.equations)}};
            if (e.matrix)
                item["matrix"] = to_json(*e.matrix);
            eliminated.push_back(std::move(item));
        }
        steps.push_back({{"name", s.name},
                         {"anchor", s.anchor},
                         {"applicability", to_string(s.applicability)},
                         {"proof", s.proof},
                         {"rule", s.rule},
                         {"before", s.before},
                         {"after", s.after},
                         {"candidates_before", s.candidates_before},
                         {"candidates_after", s.candidates_after},
                         {"eliminated", std::move(eliminated)},
                         {"equations", equations_json(s.equations)},
                         {"notes", s.notes}});
    }
    json survivors = json::array();
    for (const auto &m : r.survivors)
        survivors.push_back(to_json(m));
    return {{"k_pol", to_string(r.k_pol)},
            {"search_bound", to_string(r.search_bound)},
            {"complete", r.complete},
            {"verdict", to_string(r.verdict)},
            {"steps", std::move(steps)},
            {"survivors", std::move(survivors)}};
}

EliminationReport report_from_json(const json &j) {
    EliminationReport r;
    r.k_pol = integer_field(j, "k_pol");
    r.search_bound = integer_field(j, "search_bound");
    r.complete = field<bool>(j, "complete");
    const std::string verdict = field<std::string>(j, "verdict");
    if (verdict == "AllNatural")
        r.verdict = Verdict::AllNatural;
    else if (verdict == "Inconclusive")
        r.verdict = Verdict::Inconclusive;
    else
        throw ParameterError("unknown verdict '" + verdict + "'");
    for (const auto &sj : field<json>(j, "steps")) {
        Step s;
        s.name = field<std::string>(sj, "name");
        s.anchor = field<std::string>(sj, "anchor");
        s.applicability = parse_applicability(field<std::string>(sj, "applicability"));
        s.proof = field<bool>(sj, "proof");
        s.rule = field<std::string>(sj, "rule");
        s.before = field<std::string>(sj, "before");
        s.after = field<std::string>(sj, "after");
        s.candidates_before = field<std::size_t>(sj, "candidates_before");
        s.candidates_after = field<std::size_t>(sj, "candidates_after");
        s.equations = equations_from_json(field<json>(sj, "equations"));
        s.notes = field<std::vector<std::string>>(sj, "notes");
        for (const auto &ej : field<json>(sj, "eliminated")) {
            Elimination e;
            e.family = field<std::string>(ej, "family");
            e.reason = field<std::string>(ej, "reason");
            e.equations = equations_from_json(field<json>(ej, "equations"));
            if (ej.contains("matrix"))
                e.matrix = candidate_from_json(ej.at("matrix"));
            s.eliminated.push_back(std::move(e));
        }
        r.steps.push_back(std::move(s));
    }
    for (const auto &mj : field<json>(j, "survivors"))
        r.survivors.push_back(candidate_from_json(mj));
    return r;
}

ReplayResult replay(const EliminationReport &r) {
    ReplayResult out;
    auto fail = [&](const std::string &msg) { out.failures.push_back(msg); };
    auto check_all = [&](const std::vector<Equation> &eqs, const std::string &where) {
        for (const auto &eq : eqs) {
            ++out.equations_checked;
            const EquationCheck res = check_equation(eq);
            if (!res.ok)
                fail(where + ": " + to_string(eq) + " (" + res.detail + ")");
        }
    };

    std::optional<std::size_t> previous_after;
    for (const auto &s : r.steps) {
        const std::string where = "step '" + s.name + "'";
        if (!applies_to(s.applicability, r.k_pol))
            fail(where + " is " + to_string(s.applicability) + " but k_pol = " + to_string(r.k_pol));
        if (!s.proof && !s.eliminated.empty())
            fail(where + " is heuristic but eliminates candidates");
        check_all(s.equations, where);
        std::size_t concrete = 0;
        for (const auto &e : s.eliminated) {
            check_all(e.equations, where + " / " + e.family);
            if (e.matrix) {
                ++concrete;
                if (e.matrix->k_pol != r.k_pol)
                    fail(where + ": eliminated matrix has k_pol " + to_string(e.matrix->k_pol));
                if (e.matrix->is_identity())
                    fail(where + ": eliminates the identity");
            }
        }
        if (previous_after && s.candidates_before != *previous_after)
            fail(where + ": candidate count does not continue from the previous step");
        if (previous_after && s.candidates_before != s.candidates_after + concrete)
            fail(where + ": candidate counts do not account for the eliminated matrices");
        previous_after = s.candidates_after;
    }
    if (previous_after && *previous_after != r.survivors.size())
        fail("final candidate count differs from the survivor list");

    for (const auto &m : r.survivors) {
        const std::string where = "survivor " + m.to_string();
        const Integer &k = r.k_pol;
        if (m.k_pol != k)
            fail(where + " has a different k_pol");
        if (k * m.a * m.a - 2 * m.c * m.c != -2)
            fail(where + " violates k a^2 - 2c^2 = -2");
        if (m.a + 2 * m.b != 0)
            fail(where + " violates a + 2b = 0");
        if (k * m.d * m.d - 2 * m.f * m.f != k)
            fail(where + " violates k d^2 - 2f^2 = k");
        const Integer s = m.d + 2 * m.e;
        if (s * s != 1)
            fail(where + " violates (d + 2e)^2 = 1");
        if (abs(m.det()) != 1)
            fail(where + " has determinant " + to_string(m.det()));
    }
    const bool only_identity = r.survivors.size() == 1 && r.survivors.front().is_identity();
    const bool has_identity =
        std::any_of(r.survivors.begin(), r.survivors.end(), [](const CandidateMatrix &m) { return m.is_identity(); });
    if (!has_identity)
        fail("the identity is missing from the survivors");
    if ((r.verdict == Verdict::AllNatural) != (r.complete && only_identity))
        fail("verdict " + to_string(r.verdict) + " does not match the survivors (complete = " +
             (r.complete ? "true" : "false") + ")");
    return out;
}

std::string to_markdown(const EliminationReport &r) {
    std::ostringstream md;
    md << "# Elimination certificate, k = " << r.k_pol << "\n\n";
    md << "- verdict: **" << to_string(r.verdict) << "**\n";
    md << "- search bound: " << r.search_bound << "\n";
    md << "- complete: " << (r.complete ? "yes" : "no") << "\n\n";
    std::size_t index = 1;
    for (const auto &s : r.steps) {
        md << "## " << index++ << ". " << s.name << "\n\n";
        md << "*" << s.anchor << "* (" << to_string(s.applicability) << (s.proof ? "" : ", heuristic") << ")\n\n";
        md << s.rule << "\n\n";
        md << "- before: " << s.before << " (" << s.candidates_before << " enumerated)\n";
        md << "- after: " << s.after << " (" << s.candidates_after << " enumerated)\n";
        for (const auto &note : s.notes)
            md << "- note: " << note << "\n";
        if (!s.equations.empty()) {
            md << "\nChecked relations:\n\n";
            for (const auto &eq : s.equations)
                md << "    " << to_string(eq) << "\n";
        }
        if (!s.eliminated.empty()) {
            md << "\nEliminated:\n\n";
            for (const auto &e : s.eliminated) {
                md << "- " << e.family;
                if (e.matrix)
                    md << " `" << e.matrix->to_string() << "`";
                md << ": " << e.reason << "\n";
                for (const auto &eq : e.equations)
                    md << "    - `" << to_string(eq) << "`\n";
            }
        }
        md << "\n";
    }
    md << "## Survivors\n\n";
    for (const auto &m : r.survivors)
        md << "- `" << m.to_string() << "`" << (m.is_identity() ? " (identity)" : "") << "\n";
    return md.str();
}

} // namespace hilbcert
