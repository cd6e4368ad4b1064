#include <CLI11.hpp>

#include <z2c/suites.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for semidirect contractions of classical Lie algebras"};
    app.name("verify");

    std::string suite = "all";
    std::string family;
    int n = -1, m = -1;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool parallel = false;
    bool deterministic = false;
    std::vector<std::string> cap_overrides;

    app.add_option("--suite", suite,
                   "tables, good-gens, index, nregular, f4, dimstab, uslovie, all")
        ->capture_default_str();
    app.add_option("--family", family, "gl, so, sp or heisenberg");
    app.add_option("--n", n, "first size parameter");
    app.add_option("--m", m, "second size parameter");
    app.add_option("--seed", seed, "master random seed")->capture_default_str();
    app.add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--parallel", parallel, "run independent checks concurrently");
    app.add_flag("--deterministic", deterministic, "zero elapsed_ms fields for golden output");
    app.add_option("--cap", cap_overrides,
                   "size cap override, repeatable: gl=N,M so=N,M nregular=N uslovie=2N");

    CLI::App* dump = app.add_subcommand("dump", "print structure constants, one 'i j k c' line each");
    std::string dump_family;
    int dump_n = -1, dump_m = -1;
    bool dump_contract = false;
    dump->add_option("--family", dump_family, "gl, so or heisenberg")->required();
    dump->add_option("--n", dump_n, "matrix size, or first pair size with --m");
    dump->add_option("--m", dump_m, "second pair size");
    dump->add_flag("--contract", dump_contract, "dump the contraction of the pair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (dump->parsed()) {
            std::cout << z2c::dump_structure_constants(
                dump_family, dump_n >= 0 ? std::optional<int>(dump_n) : std::nullopt,
                dump_m >= 0 ? std::optional<int>(dump_m) : std::nullopt, dump_contract);
            return 0;
        }

        z2c::SuiteOptions opts;
        opts.suite = suite;
        if (!family.empty()) opts.family = family;
        if (n >= 0) opts.n = n;
        if (m >= 0) opts.m = m;
        opts.seed = seed;
        opts.caps = z2c::parse_caps(cap_overrides);

        std::vector<z2c::Check> checks = z2c::build_checks(opts);
        std::vector<z2c::VerificationReport> reports =
            z2c::run_checks(checks, parallel, deterministic);

        if (format == "json") {
            std::cout << z2c::reports_to_json(reports).dump(2) << "\n";
        } else {
            for (const auto& r : reports) std::cout << r.to_text_line() << "\n";
        }
        for (const auto& r : reports)
            if (r.status == z2c::CheckStatus::Fail) return 1;
        return 0;
    } catch (const z2c::ConjecturalRequest& e) {
        std::cerr << "conjectural: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
