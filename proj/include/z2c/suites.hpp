#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <z2c/report.hpp>

namespace z2c {

// Thrown when a request targets content the underlying results do not cover
// (the symplectic family); the CLI maps it to its own exit code.
struct ConjecturalRequest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    int gl_n = 3, gl_m = 3;
    int so_n = 6, so_m = 3;
    int nregular = 3;  // largest n for the explicit generator family
    int uslovie = 12;  // largest even number whose partitions are scanned
};

// Parse "--cap key=value" overrides: gl=N,M so=N,M nregular=N uslovie=2N.
Caps parse_caps(const std::vector<std::string>& overrides);

struct SuiteOptions {
    std::string suite = "all"; // tables good-gens index nregular f4 dimstab uslovie all
    std::optional<std::string> family;
    std::optional<int> n, m;
    std::uint64_t seed = 0;
    Caps caps;
};

struct Check {
    std::string id;
    std::function<VerificationReport()> run; // fills everything except elapsed_ms
};

// Construct the deterministic check list for the options. Throws
// std::invalid_argument on unusable parameters and ConjecturalRequest for the
// symplectic family.
std::vector<Check> build_checks(const SuiteOptions& opts);

// Execute checks (optionally in parallel); reports keep construction order.
// elapsed_ms is measured per check, or zeroed when deterministic is set.
std::vector<VerificationReport> run_checks(const std::vector<Check>& checks, bool parallel,
                                           bool deterministic);

// Structure-constant export: one line "i j k c" per bracket entry, 0-based.
std::string dump_structure_constants(const std::string& family, std::optional<int> n,
                                     std::optional<int> m, bool contracted);

} // namespace z2c
