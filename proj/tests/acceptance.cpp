// Acceptance gate: one PASS/FAIL line per criterion.
//
// Tolerances: every algebraic comparison is exact (a residual passes only if
// it normalizes to the zero element; no numeric slack). Sample counts and the
// wall-clock budget are pinned below.

#include "qquat/braided.hpp"
#include "qquat/hopf.hpp"
#include "qquat/parser.hpp"
#include "qquat/quaternion.hpp"
#include "qquat/suites.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sys/wait.h>

using namespace qquat;

namespace {

constexpr int kStarSamples = 200;
constexpr int kCoassocSamples = 50;
constexpr int kClassicalProducts = 100;
constexpr int kRoundTrips = 500;
constexpr int kMaxOverlaps = 20;
constexpr double kWallBudgetSeconds = 60.0;

int failures = 0;

void line(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << "[" << (ok ? "PASS" : "FAIL") << "] criterion " << id << " " << name << " :: " << detail << "\n";
    if (!ok) ++failures;
}

/// Failing assertion ids of a report, or "" when it passed.
std::string failed_cases(const SuiteReport& r) {
    std::string s;
    for (const auto& c : r.cases)
        if (c.status == CaseStatus::Fail) s += (s.empty() ? "" : "; ") + r.suite + "/" + to_string(r.mode) + ": " + c.id;
    return s;
}

struct Tally {
    bool ok = true;
    std::size_t cases = 0;
    std::string failed;
    void add(const SuiteReport& r) {
        cases += r.count(CaseStatus::Pass) + r.count(CaseStatus::Fail);
        if (!r.passed()) {
            ok = false;
            failed += (failed.empty() ? "" : "; ") + failed_cases(r);
        }
    }
    std::string detail(const std::string& what) const {
        return ok ? std::to_string(cases) + " " + what + " exact" : "failed: " + failed;
    }
};

std::vector<Element> samples(Mode mode, std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::vector<Element> v;
    for (int k = 0; k < n; ++k) v.push_back(random_element(quaternion_system(mode), rng, 2, 2));
    return v;
}

}  // namespace

int main() {
    std::cout << "tolerance: exact symbolic zero for every residual; wall-clock budget " << kWallBudgetSeconds
              << " s\n";

    {
        Tally t;
        std::string counts;
        for (Mode m : {Mode::GL, Mode::SP}) {
            t.add(check_confluence_suite(m));
            std::size_t n = check_confluence(quaternion_system(m)).overlaps.size();
            counts += (counts.empty() ? "" : ", ") + to_string(m) + " " + std::to_string(n) + " overlaps";
            if (n > static_cast<std::size_t>(kMaxOverlaps)) t.ok = false;
        }
        line(1, "confluence", t.ok, t.ok ? counts + ", all resolved" : t.failed);
    }

    {
        Tally rel, st;
        for (Mode m : {Mode::GL, Mode::SP}) {
            rel.add(check_relations(m));
            st.add(check_star(m, kDefaultSeed, kStarSamples));
        }
        std::size_t nonzero = 0;
        std::string first;
        for (Mode m : {Mode::GL, Mode::SP})
            for (const auto& [id, res] : printed_star_exchange_residuals(m))
                if (!res.is_zero() && nonzero++ == 0) first = to_string(m) + ": " + id + " = " + res.str();
        bool printed_ok = nonzero == 0;
        std::string detail = "defining relations " + std::string(rel.ok ? "exact" : "FAILED (" + rel.failed + ")") +
                             "; star involution on generators and " + std::to_string(kStarSamples) +
                             " random elements " + (st.ok ? "exact" : "FAILED (" + st.failed + ")") +
                             "; star exchange x+- a_k* = q^-+1 a_k* x+- as written: " +
                             (printed_ok ? "exact" : std::to_string(nonzero) + " nonzero residuals across gl and sp, e.g. " + first);
        line(2, "defining identities", rel.ok && st.ok && printed_ok, detail);
    }

    {
        Tally t;
        for (Mode m : {Mode::GL, Mode::SP}) t.add(check_centrality(m));
        line(3, "centrality of N", t.ok, t.detail("commutators"));
    }

    {
        Tally t;
        for (Mode m : {Mode::GL, Mode::SP}) t.add(check_norm_mult(m));
        line(4, "norm", t.ok, t.detail("norm / conjugation / multiplicativity identities"));
    }

    {
        Tally t;
        for (Mode m : {Mode::GL, Mode::SP}) {
            t.add(check_coproduct_homomorphism(m));
            t.add(check_coassociativity(m, samples(m, kDefaultSeed + 1, kCoassocSamples)));
            t.add(check_counit_axiom(m, samples(m, kDefaultSeed + 2, 20)));
            t.add(check_antipode_axiom(m, samples(m, kDefaultSeed + 3, 20)));
        }
        line(5, "Hopf structure", t.ok,
             t.detail("identities (coassociativity on generators + " + std::to_string(kCoassocSamples) +
                      " samples per mode; antipode localized in gl)"));
    }

    {
        Tally t;
        for (Mode m : {Mode::GL, Mode::SP}) {
            t.add(check_glq2(m));
            t.add(check_det_norm(m));
        }
        t.add(check_suq2(Mode::SP));
        line(6, "isomorphism evidence", t.ok, t.detail("matrix identities"));
    }

    {
        Tally t;
        for (Mode m : {Mode::GL, Mode::SP}) t.add(check_classical_limit(m, kDefaultSeed + 4, kClassicalProducts));
        line(7, "classical limit", t.ok,
             t.ok ? std::to_string(kClassicalProducts) + " random products per mode match the commutative oracle"
                  : t.failed);
    }

    {
        SuiteReport r = check_addition();
        const std::string path = QQUAT_ARTIFACT_DIR "/addition_report.json";
        std::ofstream out(path);
        out << addition_report_json().dump(2) << "\n";
        bool archived = static_cast<bool>(out);
        std::size_t zero = 0;
        for (const auto& c : check_sum_closure(printed_pair_system())) zero += c.residual.is_zero();
        line(8, "braided addition", r.passed() && archived,
             std::string(r.passed() ? "q=1 residuals zero" : "FAILED (" + failed_cases(r) + ")") +
                 "; generic-q closure residuals zero for " + std::to_string(zero) +
                 " of 6 relations (reported, not asserted); archived " + path);
    }

    {
        std::mt19937_64 rng(kDefaultSeed + 40);
        int bad = 0;
        for (int n = 0; n < kRoundTrips; ++n) {
            const SystemPtr& sys = quaternion_system(n % 2 ? Mode::SP : Mode::GL);
            Element e = random_element(sys, rng, 3, 3);
            try {
                if (!(parse_element(e.str(), sys) == e)) ++bad;
            } catch (const std::exception&) {
                ++bad;
            }
        }
        auto t0 = std::chrono::steady_clock::now();
        int status = std::system(QQUAT_CLI " --mode sp suite all > /dev/null 2>&1");
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", secs);
        line(9, "command line", bad == 0 && code == 0 && secs < kWallBudgetSeconds,
             std::to_string(kRoundTrips - bad) + "/" + std::to_string(kRoundTrips) +
                 " round trips; `suite all --mode sp` exit " + std::to_string(code) + " in " + buf + " s");
    }

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria pass") << "\n";
    return failures ? 1 : 0;
}
