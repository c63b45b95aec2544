#pragma once

#include "qquat/report.hpp"
#include "qquat/sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qquat {

struct SuiteOptions {
    Mode mode = Mode::GL;
    std::uint64_t seed = kDefaultSeed;
    /// Worker threads used when several suites run together; 0 picks the
    /// hardware concurrency.
    unsigned workers = 0;
};

/// Every suite name accepted by run_suites, in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite ("all" is not accepted here).
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

/// Runs the named suites ("all" expands to every suite) on a bounded worker
/// pool. Results come back in request order regardless of completion order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& opt);

SuiteReport check_confluence_suite(Mode mode);
/// Defining relations in both bases. The star/unstar exchange relations are
/// asserted in the form implied by the defining relations; the
/// opposite-exponent variant is recorded as a finding.
SuiteReport check_relations(Mode mode);
SuiteReport check_star(Mode mode, std::uint64_t seed, int samples = 200);
SuiteReport check_centrality(Mode mode);
/// `count` random products compared at q = 1 with the commutative oracle.
SuiteReport check_classical_limit(Mode mode, std::uint64_t seed, int count = 100);

/// Exchange relation x+- a_k^* = q^{-+1} a_k^* x+- (k = 2, 3) exactly as
/// written with the star structure; returns the four normalized residuals.
std::vector<std::pair<std::string, Element>> printed_star_exchange_residuals(Mode mode);

}  // namespace qquat
