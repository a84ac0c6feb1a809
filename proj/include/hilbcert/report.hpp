#pragma once

#include "hilbcert/expr.hpp"
#include "hilbcert/integer.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hilbcert {

/// g^* on NS(A^[2]) in the basis (x, y, B):
///   g^*x = d x + e y + f B,  g^*y = y,  g^*B = a x + b y + c B.
struct CandidateMatrix {
    Integer d, e, f, a, b, c;
    Integer k_pol;

    /// det [[d, 0, a], [e, 1, b], [f, 0, c]] = d c - a f.
    Integer det() const { return d * c - a * f; }
    bool is_identity() const;
    std::string to_string() const;
    friend bool operator==(const CandidateMatrix &, const CandidateMatrix &) = default;
    friend bool operator<(const CandidateMatrix &u, const CandidateMatrix &v);
};

CandidateMatrix identity_candidate(const Integer &k_pol);

/// Which polarizations a rule is proved for.
enum class Applicability { general, principal_only, perfect_square_only };

std::string to_string(Applicability a);
Applicability parse_applicability(const std::string &text);

/// True when a rule with applicability `a` may be used for this k_pol.
bool applies_to(Applicability a, const Integer &k_pol);

struct Elimination {
    std::string family;                     // description of the excluded set
    std::optional<CandidateMatrix> matrix;  // set when a concrete candidate is removed
    std::string reason;
    std::vector<Equation> equations;
};

struct Step {
    std::string name;
    std::string anchor; // the argument this step reproduces
    Applicability applicability = Applicability::general;
    bool proof = true;  // heuristic steps may annotate but never eliminate
    std::string rule;
    std::string before, after;
    std::size_t candidates_before = 0, candidates_after = 0;
    std::vector<Elimination> eliminated;
    std::vector<Equation> equations;
    std::vector<std::string> notes;
};

enum class Verdict { AllNatural, Inconclusive };

std::string to_string(Verdict v);

struct EliminationReport {
    Integer k_pol;
    Integer search_bound;
    /// True when the steps exclude every candidate outside the survivor list,
    /// not only those within the search bound.
    bool complete = false;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Step> steps;
    std::vector<CandidateMatrix> survivors;
};

nlohmann::json to_json(const EliminationReport &r);
/// Throws ParameterError on a malformed document.
EliminationReport report_from_json(const nlohmann::json &j);

nlohmann::json to_json(const CandidateMatrix &m);
CandidateMatrix candidate_from_json(const nlohmann::json &j);

struct ReplayResult {
    std::size_t equations_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Re-evaluates every recorded equation and checks the structural rules:
/// heuristic steps eliminate nothing, rules are only used where they apply,
/// survivors satisfy the constraint relations and the verdict matches them.
ReplayResult replay(const EliminationReport &r);

std::string to_markdown(const EliminationReport &r);

} // namespace hilbcert
