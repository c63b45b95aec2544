#pragma once

#include "qquat/algebra.hpp"
#include "qquat/report.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qquat {

/// Letter of the two-copy algebra: copy 1 carries the generators of h, copy 2
/// those of h'. Copy-2 letters sort first, so normal words list the copy-2
/// part before the copy-1 part.
Letter pair_letter(int copy, Gen g);

/// A term c * w of a cross rule; w is a word of (copy, generator) letters.
struct CrossTerm {
    QScalar coeff;
    std::vector<std::pair<int, Gen>> word;
};

/// Right sides of the rules g1^1 g2^2 -> ..., keyed by (g1, g2).
using CrossRules = std::map<std::pair<Gen, Gen>, std::vector<CrossTerm>>;

/// The cross relations between two copies as printed with the addition law.
const CrossRules& printed_cross_rules();

/// A labeled alternative rule set used only in the correction experiment.
struct CrossVariant {
    std::string name;
    std::string change;
    CrossRules rules;
};

/// Candidate corrections of the printed set, each differing from it in the
/// rules named by `change`.
const std::vector<CrossVariant>& candidate_cross_rules();

/// Rewrite system on eight letters: the GL rules within each copy plus the
/// given cross rules oriented copy-1 letter * copy-2 letter -> copy-2 first.
SystemPtr pair_system(const CrossRules& cross, const std::string& name);
const SystemPtr& printed_pair_system();

/// GL-mode element moved into copy 1 or copy 2.
Element embed_copy(const Element& e, const SystemPtr& pair, int copy);

/// Normalized residual of one defining relation evaluated on the sums
/// c_k = a_k + b_k.
struct ClosureResult {
    std::string relation;
    Element residual;
    Element q1_residual;

    nlohmann::json to_json() const;
};

std::vector<ClosureResult> check_sum_closure(const SystemPtr& pair);

/// Report-only suite: closure residuals (status report), their q = 1 values
/// (asserted zero), copy-embedding checks and the overlap screen of the
/// printed system, followed by the correction experiment.
SuiteReport check_addition();

/// [{relation, residual_terms, q1_residual}, ...] per rule set.
nlohmann::json addition_report_json();

}  // namespace qquat
