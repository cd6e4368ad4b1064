#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace z2c {

enum class CheckStatus { Pass, Fail, Skipped };

std::string status_name(CheckStatus s);

// One verification result, serializable as text or JSON with a stable field order.
struct VerificationReport {
    std::string check_id;
    CheckStatus status = CheckStatus::Fail;
    std::string expected;
    std::string computed;
    std::string witness; // empty = none (serialized as null)
    std::int64_t elapsed_ms = 0;

    nlohmann::ordered_json to_json() const;
    std::string to_text_line() const; // "[PASS] check_id: expected ... computed ..."
};

nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& reports);

} // namespace z2c
