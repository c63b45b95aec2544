#pragma once

#include "qquat/algebra.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace qquat {

/// `report` marks findings that are recorded but never asserted.
enum class CaseStatus { Pass, Fail, Report, Skip };

std::string to_string(CaseStatus s);

struct CaseResult {
    std::string id;
    CaseStatus status;
    std::string residual;
};

/// Result of one verification suite. Cases are kept in insertion order,
/// which callers make deterministic.
struct SuiteReport {
    SuiteReport() = default;
    SuiteReport(std::string name, Mode m) : suite(std::move(name)), mode(m) {}

    std::string suite;
    Mode mode = Mode::GL;
    std::string q = "formal";
    std::vector<CaseResult> cases;

    /// No case failed (report and skip cases never fail a suite).
    bool passed() const;
    std::size_t count(CaseStatus s) const;

    void expect_zero(const std::string& id, bool zero, const std::string& residual);
    template <class T>
    void expect_zero(const std::string& id, const T& residual) {
        expect_zero(id, residual.is_zero(), residual.str());
    }
    void expect_true(const std::string& id, bool ok, const std::string& detail = "");
    void record(const std::string& id, const std::string& finding);

    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace qquat
