#include "hilbcert/cli.hpp"
#include "hilbcert/counterexamples.hpp"
#include "hilbcert/eliminate.hpp"
#include "hilbcert/equivariance.hpp"
#include "hilbcert/kummer.hpp"
#include "hilbcert/ns_lattice.hpp"
#include "hilbcert/pell.hpp"
#include "hilbcert/report.hpp"
#include "hilbcert/sections.hpp"
#include "hilbcert/symbolic_det.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace hilbcert {

namespace {

using nlohmann::json;

std::string s(const Integer &v) { return to_string(v); }

enum class Status { verified, inconclusive };

struct Outcome {
    json parameters = json::object();
    json result = json::object();
    std::vector<std::pair<std::string, bool>> invariants;
    Status status = Status::verified;
    std::string markdown_body; // subcommand-specific markdown, optional

    void check(std::string name, bool passed) { invariants.emplace_back(std::move(name), passed); }
};

// Flags shared by the subcommands; unused ones are ignored.
struct Flags {
    std::string k = "1", n, d, f, bound, seed = "1", m, r, x, y, ell, g, kind, classes, torsion = "trivial", samples,
                count = "10", in;
};

Integer integer_flag(const std::string &text, const char *name) {
    if (text.empty())
        throw ParameterError(std::string("--") + name + " is required");
    return parse_integer(text);
}

Integer integer_flag(const std::string &text, const char *name, long fallback) {
    return text.empty() ? Integer(fallback) : integer_flag(text, name);
}

json solution_json(const PellSolution &p) { return {{"x", s(p.x())}, {"y", s(p.y())}}; }

json matrix_json(const IntMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back(s(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json pairs_json(const std::vector<std::pair<Integer, Integer>> &v) {
    json out = json::array();
    for (const auto &[x, y] : v)
        out.push_back({s(x), s(y)});
    return out;
}

json pairs_json(const std::vector<std::pair<long, long>> &v) {
    json out = json::array();
    for (const auto &[x, y] : v)
        out.push_back({std::to_string(x), std::to_string(y)});
    return out;
}

// Subcommands.

Outcome intersect(const Flags &fl) {
    Outcome o;
    const Integer k = integer_flag(fl.k, "k");
    if (k < 1)
        throw ParameterError("--k must be >= 1");
    o.parameters["k"] = s(k);
    if (!fl.classes.empty()) {
        o.parameters["classes"] = fl.classes;
        std::vector<DivisorClassH2> cls;
        std::stringstream ss(fl.classes);
        for (std::string item; std::getline(ss, item, ',');)
            cls.push_back(parse_class(item, k));
        if (cls.size() != 4)
            throw ParameterError("--classes needs four comma-separated classes");
        const Integer v = quartic_intersection(cls[0], cls[1], cls[2], cls[3]);
        QuarticArgs<Integer> args;
        for (std::size_t i = 0; i < 4; ++i)
            args[i] = {cls[i].a, cls[i].b, cls[i].c};
        o.result["value"] = s(v);
        o.check("multilinear expansion agrees", quartic_form(args, k) == v);
        o.markdown_body = "D1.D2.D3.D4 = **" + s(v) + "**\n";
        return o;
    }
    const IntersectionTable t = intersection_table(k);
    const std::vector<std::tuple<const char *, Integer, Integer, std::array<int, 3>>> rows{
        {"x^4", t.x4, 12 * k * k, {4, 0, 0}},   {"x^3 y", t.x3y, 12 * k * k, {3, 1, 0}},
        {"x^2 y^2", t.x2y2, 8 * k * k, {2, 2, 0}}, {"x^2 B^2", t.x2B2, -4 * k, {2, 0, 2}},
        {"x y B^2", t.xyB2, -8 * k, {1, 1, 2}},   {"y^2 B^2", t.y2B2, -16 * k, {0, 2, 2}},
    };
    json table = json::object();
    for (const auto &[name, value, expected, e] : rows) {
        table[name] = s(value);
        o.check(std::string(name) + " = " + s(expected), value == expected &&
                                                              monomial_intersection(e[0], e[1], e[2], k) == value);
        o.markdown_body += std::string("| ") + name + " | " + s(value) + " |\n";
    }
    o.markdown_body = "| monomial | value |\n|---|---|\n" + o.markdown_body;
    o.result["table"] = std::move(table);
    return o;
}

Outcome pell(const Flags &fl) {
    Outcome o;
    const Integer d = integer_flag(fl.d, "d", 2);
    const long count = to_long(integer_flag(fl.count, "count"));
    if (count < 1 || count > 1000)
        throw ParameterError("--count must be in 1..1000");
    o.parameters = {{"d", s(d)}, {"count", std::to_string(count)}};
    const PellSolution fund = fundamental_solution(d);
    o.result["fundamental"] = solution_json(fund);
    json sols = json::array();
    PellSolution cur = fund;
    std::vector<PellSolution> listed;
    bool all_ok = true;
    std::ostringstream md;
    md << "| # | x | y |\n|---|---|---|\n";
    for (long i = 0; i < count; ++i) {
        sols.push_back(solution_json(cur));
        listed.push_back(cur);
        all_ok = all_ok && cur.x() * cur.x() - d * cur.y() * cur.y() == 1;
        md << "| " << i + 1 << " | " << cur.x() << " | " << cur.y() << " |\n";
        // Multiply by the fundamental unit.
        cur = PellSolution(cur.x() * fund.x() + d * cur.y() * fund.y(), cur.x() * fund.y() + cur.y() * fund.x(), d, 1);
    }
    o.result["solutions"] = std::move(sols);
    o.check("x^2 - d y^2 = 1 for every listed solution", all_ok);
    if (d == 2) {
        const auto stream = d2_solution_stream(std::size_t(count));
        bool stream_ok = true;
        json classes = json::array();
        for (std::size_t i = 0; i < stream.size(); ++i) {
            stream_ok = stream_ok && stream[i] == listed[i];
            for (int t : {1, -1}) {
                const PellMatrixClass c = classify_pell_matrix(stream[i].x(), stream[i].y(), t);
                classes.push_back({{"d", s(stream[i].x())}, {"f", s(stream[i].y())}, {"det", std::to_string(t)},
                                   {"a", s(c.a)}, {"c", s(c.c)}});
            }
        }
        o.result["matrix_completions"] = std::move(classes);
        o.check("recurrence stream matches powers of the fundamental unit", stream_ok);
    }
    o.markdown_body = md.str();
    return o;
}

json h0_json(const H0Value &v) {
    if (std::holds_alternative<Indeterminate>(v))
        return "indeterminate";
    return s(std::get<Integer>(v));
}

Outcome sections(const Flags &fl) {
    Outcome o;
    const Integer k = integer_flag(fl.k, "k"), ell = integer_flag(fl.ell, "ell", 0);
    const Torsion t = parse_torsion(fl.torsion);
    o.parameters = {{"k", s(k)}, {"ell", s(ell)}, {"torsion", to_string(t)}};
    const H0Value v = h0_symmetric_product({k, ell, t});
    o.result["h0"] = h0_json(v);
    if (std::holds_alternative<Indeterminate>(v)) {
        o.status = Status::inconclusive;
        o.markdown_body = "h0 is not determined by the available formulas for this class.\n";
    } else {
        o.markdown_body = "h0 = **" + s(std::get<Integer>(v)) + "**\n";
        o.check("h0 is nonnegative", sgn(std::get<Integer>(v)) >= 0);
    }
    return o;
}

Outcome theta_dim(const Flags &fl) {
    Outcome o;
    const Integer g = integer_flag(fl.g, "g", 2), m = integer_flag(fl.m, "m");
    if (g < 1 || g > 64)
        throw ParameterError("--g must be in 1..64");
    o.parameters = {{"g", s(g)}, {"m", s(m)}};
    const Integer v = even_theta_dim(unsigned(g.get_ui()), m);
    o.result["even_theta_dim"] = s(v);
    try {
        const Integer brute = even_theta_dim_bruteforce(unsigned(g.get_ui()), m);
        o.result["orbit_count"] = s(brute);
        o.check("closed form equals orbit count", brute == v);
    } catch (const ResourceLimitError &) {
        o.result["orbit_count"] = "skipped";
    }
    o.markdown_body = "even theta functions: **" + s(v) + "**\n";
    return o;
}

Outcome kummer(const Flags &fl) {
    Outcome o;
    const Integer d1 = integer_flag(fl.d, "d", 17), f1 = integer_flag(fl.f, "f", 12);
    o.parameters = {{"d", s(d1)}, {"f", s(f1)}};
    const SubcaseChain c = subcase_ii_h0_chain(d1, f1);
    o.result = {{"d0", s(c.d0)},         {"f0", s(c.f0)},           {"node_degree", s(c.node_degree)},
                {"h0_kummer", s(c.h0_kummer)}, {"h0_abelian", s(c.h0_abelian)}, {"total", s(c.total)},
                {"pigeonhole", s(c.pigeonhole)}};
    o.check("previous solution solves d^2 - 2f^2 = 1", c.d0 * c.d0 - 2 * c.f0 * c.f0 == 1);
    o.check("total = h0(Theta^2) * h0(d0 H)", c.total == c.h0_abelian * c.h0_kummer);
    o.check("some twist has more than one section", c.pigeonhole > 1);
    const KummerClass prev(c.d0, c.f0);
    const KummerClass sw = switch_pullback(prev);
    o.check("switch involution sends (d0, f0) to (d1, -f1)", sw == KummerClass(d1, -f1));
    o.markdown_body = "16 twists carry " + s(c.total) + " sections; one has at least **" + s(c.pigeonhole) + "**\n";
    return o;
}

Outcome eliminate(const Flags &fl) {
    Outcome o;
    const Integer k = integer_flag(fl.k, "k");
    const Integer bound = integer_flag(fl.bound, "bound", default_search_bound);
    o.parameters = {{"k", s(k)}, {"bound", s(bound)}};
    const EliminationReport r = eliminate_general(k, bound);
    const ReplayResult rp = replay(r);
    o.result["report"] = to_json(r);
    o.result["replay"] = {{"equations_checked", rp.equations_checked}, {"failures", rp.failures}};
    o.check("every recorded equation re-verifies", rp.ok());
    o.check("identity survives",
            std::find(r.survivors.begin(), r.survivors.end(), identity_candidate(k)) != r.survivors.end());
    o.status = r.verdict == Verdict::AllNatural ? Status::verified : Status::inconclusive;
    o.markdown_body = to_markdown(r);
    return o;
}

Outcome replay_file(const Flags &fl) {
    Outcome o;
    if (fl.in.empty())
        throw ParameterError("--in is required");
    o.parameters["in"] = fl.in;
    std::ifstream file(fl.in);
    if (!file)
        throw ParameterError("cannot read " + fl.in);
    json doc;
    try {
        doc = json::parse(file);
    } catch (const json::parse_error &e) {
        throw ParameterError(std::string("malformed JSON: ") + e.what());
    }
    if (doc.contains("result") && doc["result"].contains("report"))
        doc = doc["result"]["report"];
    const EliminationReport r = report_from_json(doc);
    const ReplayResult rp = replay(r);
    o.result = {{"verdict", to_string(r.verdict)},
                {"k_pol", s(r.k_pol)},
                {"equations_checked", rp.equations_checked},
                {"failures", rp.failures}};
    o.check("every recorded equation re-verifies", rp.ok());
    o.status = r.verdict == Verdict::AllNatural ? Status::verified : Status::inconclusive;
    o.markdown_body = "Replayed " + std::to_string(rp.equations_checked) + " equations; " +
                      std::to_string(rp.failures.size()) + " failures.\n";
    for (const auto &f : rp.failures)
        o.markdown_body += "- " + f + "\n";
    return o;
}

Outcome counterexample(const Flags &fl) {
    Outcome o;
    o.parameters["kind"] = fl.kind;
    if (fl.kind == "pell") {
        const Integer d = integer_flag(fl.d, "d", 2);
        o.parameters["d"] = s(d);
        const PellSolution sol = fl.x.empty() ? fundamental_solution(d)
                                              : PellSolution(integer_flag(fl.x, "x"), integer_flag(fl.y, "y"), d, 1);
        const PellAutomorphism p = pell_automorphism(d, sol);
        o.result = {{"diag", p.matrix.diag.to_string()},
                    {"offdiag", p.matrix.offdiag.to_string()},
                    {"det", p.det.to_string()},
                    {"unnatural", p.matrix.unnatural()}};
        o.check("determinant is 1", p.det == QuadInt::from_integer(1, d));
        o.check("off-diagonal entry is nonzero", p.matrix.unnatural());
        o.markdown_body = "M = [[" + p.matrix.diag.to_string() + ", " + p.matrix.offdiag.to_string() + "], [" +
                          p.matrix.offdiag.to_string() + ", " + p.matrix.diag.to_string() + "]], det = " +
                          p.det.to_string() + "\n";
    } else if (fl.kind == "nilpotent") {
        const long m = to_long(integer_flag(fl.m, "m", 2)), n = to_long(integer_flag(fl.n, "n", 2));
        if (m < 2 || m > 32 || n < 2 || n > 32)
            throw ParameterError("--m and --n must be in 2..32");
        o.parameters["m"] = std::to_string(m);
        o.parameters["n"] = std::to_string(n);
        // N = the m x m nilpotent Jordan block.
        IntMatrix N(std::size_t(m), std::vector<Integer>(std::size_t(m * m), 0));
        for (long i = 0; i + 1 < m; ++i)
            N(std::size_t(i), std::size_t(i + 1)) = 1;
        const NilpotentAutomorphism a = nilpotent_automorphism(std::size_t(n), N);
        o.result = {{"N", matrix_json(N)},
                    {"dimension", std::to_string(a.full.size())},
                    {"det", s(a.det)},
                    {"block_det", matrix_json(a.block_det)},
                    {"T", matrix_json(a.t_factor)},
                    {"N_squared_zero", a.n_squared_zero}};
        o.check("determinant is 1", a.det == 1);
        if (a.det_cofactor)
            o.check("cofactor expansion agrees", *a.det_cofactor == a.det);
        o.markdown_body = std::to_string(a.full.size()) + "x" + std::to_string(a.full.size()) +
                          " block matrix with determinant " + s(a.det) + "\n";
    } else if (fl.kind == "cubic") {
        const Integer y = integer_flag(fl.y, "y", 1);
        o.parameters["y"] = s(y);
        const CubicCertificate c = cubic_counterexample(y);
        json candidates = json::array();
        for (const auto &r : c.root_candidates)
            candidates.push_back(s(r));
        o.result = {{"cubic", c.cubic.to_string()},
                    {"discriminant", s(c.discriminant)},
                    {"root_candidates", std::move(candidates)},
                    {"rational_root", c.rational_root ? json(s(*c.rational_root)) : json(nullptr)},
                    {"det", c.det.to_string()},
                    {"det_reduced", c.det_reduced.to_string()}};
        o.check("discriminant is positive", sgn(c.discriminant) > 0);
        o.check("no rational root", !c.rational_root);
        o.check("det reduces to 1 modulo the cubic", c.det_reduced.to_string() == "1");
        if (c.rational_root)
            o.status = Status::inconclusive;
        o.markdown_body = "cubic " + c.cubic.to_string() + ", discriminant " + s(c.discriminant) +
                          ", det M_3 reduces to " + c.det_reduced.to_string() + "\n";
    } else {
        throw ParameterError("--kind must be pell, nilpotent or cubic");
    }
    return o;
}

Outcome search_units(const Flags &fl) {
    Outcome o;
    const long n = to_long(integer_flag(fl.n, "n", 3));
    const Integer bound = integer_flag(fl.bound, "bound", 100);
    if (n < 2 || n > 1000)
        throw ParameterError("--n must be in 2..1000");
    if (bound > 5000)
        throw ResourceLimitError("--bound above 5000");
    o.parameters = {{"n", std::to_string(n)}, {"bound", s(bound)}};
    const UnitSearch u = search_unit_Mn(unsigned(n), bound);
    o.result = {{"solutions", pairs_json(u.solutions)},
                {"predicted", pairs_json(u.predicted)},
                {"branch_proof", u.branch_proof}};
    o.check("scan agrees with the factor argument", u.agrees());
    if (n >= 3)
        o.check("only y = 0 solutions", std::all_of(u.solutions.begin(), u.solutions.end(),
                                                     [](const auto &p) { return sgn(p.second) == 0; }));
    for (const auto &line : u.branch_proof)
        o.markdown_body += "- " + line + "\n";
    return o;
}

Outcome equivariance(const Flags &fl) {
    Outcome o;
    const long m = to_long(integer_flag(fl.m, "m", 3));
    const long r = to_long(integer_flag(fl.r, "r", 1));
    const long n = to_long(integer_flag(fl.n, "n", 3));
    const long x = to_long(integer_flag(fl.x, "x", 1)), y = to_long(integer_flag(fl.y, "y", 0));
    if (r < 1 || r > 64 || n < 2 || n > 64)
        throw ParameterError("--r must be in 1..64 and --n in 2..64");
    o.parameters = {{"m", std::to_string(m)}, {"r", std::to_string(r)}, {"n", std::to_string(n)},
                    {"x", std::to_string(x)}, {"y", std::to_string(y)}};
    const FiniteModel model(m, unsigned(r), unsigned(n), x, y);
    std::optional<Sampling> sampling;
    if (!fl.samples.empty()) {
        sampling = Sampling{integer_flag(fl.samples, "samples").get_ui(), integer_flag(fl.seed, "seed").get_ui()};
        o.parameters["samples"] = fl.samples;
        o.parameters["seed"] = fl.seed;
    }
    const PreservationResult pr = check_multiplicity_preservation(model, sampling);
    o.result["mode"] = sampling ? "sampled" : "exhaustive";
    o.result["points_checked"] = std::to_string(pr.points_checked);
    o.result["determinant"] = std::to_string(model.determinant());
    o.check("multiplicity partitions preserved", pr.preserved);
    if (pr.counterexample)
        o.result["counterexample"] = *pr.counterexample;
    try {
        const KernelResult kr = kernel_triviality_check(m, unsigned(r), unsigned(n));
        o.result["kernel"] = {{"valid_pairs", pairs_json(kr.valid_pairs)},
                              {"identity_inducing", pairs_json(kr.identity_inducing)}};
        o.check("only the expected pairs act trivially on multisets", kr.trivial());
    } catch (const ResourceLimitError &) {
        o.result["kernel"] = "skipped";
    }
    o.markdown_body = model.to_string() + ": " + std::to_string(pr.points_checked) + " points checked, " +
                      (pr.preserved ? "multiplicities preserved" : "violation found") + "\n";
    return o;
}

std::string markdown(const std::string &sub, const Outcome &o) {
    std::ostringstream md;
    if (sub != "eliminate")
        md << "# " << tool_name << " " << sub << "\n\n";
    md << o.markdown_body << "\n";
    if (!o.parameters.empty()) {
        md << "Parameters:";
        for (const auto &[key, value] : o.parameters.items())
            md << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
        md << "\n\n";
    }
    for (const auto &[name, passed] : o.invariants)
        md << "- [" << (passed ? "pass" : "FAIL") << "] " << name << "\n";
    return md.str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact certificates for automorphisms of Hilbert squares of abelian surfaces", tool_name};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    std::string format = "md", out_path;
    app.add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    Flags fl;

    using Handler = std::function<Outcome(const Flags &)>;
    std::vector<std::pair<CLI::App *, Handler>> subs;
    auto sub = [&](const char *name, const char *help, Handler h) {
        CLI::App *s = app.add_subcommand(name, help);
        s->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
        s->add_option("--out", out_path, "write the report to a file instead of stdout");
        subs.emplace_back(s, std::move(h));
        return s;
    };
    auto *c_int = sub("intersect", "intersection numbers on A^[2]", intersect);
    c_int->add_option("--k", fl.k, "half the self-intersection of Theta");
    c_int->add_option("--classes", fl.classes, "four classes, e.g. \"x,x,y,B\"");
    auto *c_pell = sub("pell", "solutions of x^2 - d y^2 = 1", pell);
    c_pell->add_option("--d", fl.d);
    c_pell->add_option("--count", fl.count);
    auto *c_sec = sub("sections", "h0 of line bundles on A^(2)", sections);
    c_sec->add_option("--k", fl.k);
    c_sec->add_option("--ell", fl.ell);
    c_sec->add_option("--torsion", fl.torsion, "trivial, two-torsion or generic");
    auto *c_theta = sub("theta-dim", "even theta functions of level m", theta_dim);
    c_theta->add_option("--g", fl.g);
    c_theta->add_option("--m", fl.m);
    auto *c_kum = sub("kummer", "section count through the switch involution", kummer);
    c_kum->add_option("--d", fl.d);
    c_kum->add_option("--f", fl.f);
    auto *c_elim = sub("eliminate", "classify the action of an automorphism on NS(A^[2])", eliminate);
    c_elim->add_option("--k", fl.k);
    c_elim->add_option("--bound", fl.bound);
    auto *c_ce = sub("counterexample", "unit-determinant equivariant matrices", counterexample);
    c_ce->add_option("--kind", fl.kind, "pell, nilpotent or cubic")->required();
    c_ce->add_option("--d", fl.d);
    c_ce->add_option("--x", fl.x);
    c_ce->add_option("--y", fl.y);
    c_ce->add_option("--m", fl.m);
    c_ce->add_option("--n", fl.n);
    auto *c_su = sub("search-units", "integer x, y with det M_n(x, y) = +-1", search_units);
    c_su->add_option("--n", fl.n);
    c_su->add_option("--bound", fl.bound);
    auto *c_eq = sub("equivariance", "finite-group model of equivariant automorphisms", equivariance);
    c_eq->add_option("--m", fl.m);
    c_eq->add_option("--r", fl.r);
    c_eq->add_option("--n", fl.n);
    c_eq->add_option("--x", fl.x);
    c_eq->add_option("--y", fl.y);
    c_eq->add_option("--samples", fl.samples);
    c_eq->add_option("--seed", fl.seed);
    auto *c_rep = sub("replay", "re-verify a saved elimination report", replay_file);
    c_rep->add_option("--in", fl.in)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return verified;
    } catch (const CLI::CallForVersion &) {
        out << tool_version << "\n";
        return verified;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return invalid_input;
    }

    for (const auto &[cmd, handler] : subs) {
        if (!cmd->parsed())
            continue;
        const std::string name = cmd->get_name();
        Outcome o;
        try {
            o = handler(fl);
        } catch (const InvariantViolation &e) {
            err << "check failed: " << e.what() << "\n";
            return check_failed;
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << "\n";
            return invalid_input;
        } catch (const ResourceLimitError &e) {
            err << "error: " << e.what() << "\n";
            return invalid_input;
        }
        json invariants = json::array();
        bool all_passed = true;
        for (const auto &[iname, passed] : o.invariants) {
            invariants.push_back({{"name", iname}, {"passed", passed}});
            all_passed = all_passed && passed;
        }
        const int code = !all_passed ? check_failed : o.status == Status::inconclusive ? inconclusive : verified;
        std::string text;
        if (format == "json") {
            const json envelope{{"tool", tool_name},       {"version", tool_version},
                                {"subcommand", name},      {"parameters", o.parameters},
                                {"result", o.result},      {"invariants", std::move(invariants)}};
            text = envelope.dump(2) + "\n";
        } else {
            text = markdown(name, o);
        }
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(out_path);
            if (!(file << text)) {
                err << "error: cannot write " << out_path << "\n";
                return invalid_input;
            }
        }
        return code;
    }
    return invalid_input;
}

} // namespace hilbcert
