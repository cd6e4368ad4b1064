#include <z2c/report.hpp>

#include <sstream>

namespace z2c {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["check_id"] = check_id;
    j["status"] = status_name(status);
    j["expected"] = expected;
    j["computed"] = computed;
    if (witness.empty())
        j["witness"] = nullptr;
    else
        j["witness"] = witness;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string VerificationReport::to_text_line() const {
    std::ostringstream os;
    os << '[' << status_name(status) << "] " << check_id;
    if (!expected.empty()) os << ": expected " << expected << ", computed " << computed;
    if (!witness.empty()) os << " -- " << witness;
    os << " (" << elapsed_ms << " ms)";
    return os.str();
}

nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr;
}

} // namespace z2c
