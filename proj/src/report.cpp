#include "qquat/report.hpp"

#include <algorithm>
#include <sstream>

namespace qquat {

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Fail: return "fail";
        case CaseStatus::Report: return "report";
        case CaseStatus::Skip: return "skip";
    }
    return "?";
}

bool SuiteReport::passed() const { return count(CaseStatus::Fail) == 0; }

std::size_t SuiteReport::count(CaseStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

void SuiteReport::expect_zero(const std::string& id, bool zero, const std::string& residual) {
    cases.push_back({id, zero ? CaseStatus::Pass : CaseStatus::Fail, residual});
}

void SuiteReport::expect_true(const std::string& id, bool ok, const std::string& detail) {
    cases.push_back({id, ok ? CaseStatus::Pass : CaseStatus::Fail, detail});
}

void SuiteReport::record(const std::string& id, const std::string& finding) {
    cases.push_back({id, CaseStatus::Report, finding});
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["mode"] = to_string(mode);
    j["q"] = q;
    j["cases"] = nlohmann::json::array();
    for (const auto& c : cases)
        j["cases"].push_back({{"id", c.id}, {"status", to_string(c.status)}, {"residual", c.residual}});
    j["summary"] = {{"pass", count(CaseStatus::Pass)},
                    {"fail", count(CaseStatus::Fail)},
                    {"report", count(CaseStatus::Report)},
                    {"skip", count(CaseStatus::Skip)},
                    {"status", passed() ? "pass" : "fail"}};
    return j;
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " [mode " << to_string(mode) << ", q " << q << "]\n";
    for (const auto& c : cases) {
        os << "  " << to_string(c.status) << "  " << c.id;
        if (c.status != CaseStatus::Pass || c.residual != "0") os << "  :: " << c.residual;
        os << "\n";
    }
    os << "  => " << (passed() ? "PASS" : "FAIL") << " (" << count(CaseStatus::Pass) << " pass, "
       << count(CaseStatus::Fail) << " fail, " << count(CaseStatus::Report) << " report, " << count(CaseStatus::Skip)
       << " skip)\n";
    return os.str();
}

}  // namespace qquat
