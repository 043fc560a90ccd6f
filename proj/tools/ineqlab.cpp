// ineqlab: run inequality suites, check single inputs, compute numerical radii.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ineqlab/harness.hpp"
#include "ineqlab/json_io.hpp"
#include "ineqlab/operator_quantities.hpp"

namespace {

using namespace ineqlab;

struct RunArgs {
    std::string config;
    std::string suite;
    std::string family;
    std::int64_t dim = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string csv;
    unsigned threads = 1;
};

// Flags go through the same validation as a config file.
RunConfig config_from_flags(const RunArgs& a) {
    nlohmann::json doc = {
        {"master_seed", a.seed},
        {"threads", a.threads},
        {"output", a.out},
        {"suites", {{{"suite", a.suite}, {"family", a.family}, {"dim", a.dim}, {"trials", a.trials}}}}};
    if (!a.csv.empty()) doc["csv"] = a.csv;
    return parse_run_config(doc);
}

int run_command(const RunArgs& a) {
    if (!a.config.empty()) return run_all(a.config, std::cerr);
    try {
        const RunConfig cfg = config_from_flags(a);
        const std::vector<SuiteReport> reports = run_config(cfg);
        write_text_file(cfg.output, to_json(reports).dump(2) + "\n");
        if (cfg.csv) write_text_file(*cfg.csv, to_csv(reports));
        for (const SuiteReport& r : reports) {
            std::cout << r.suite_name << " " << r.family << " d" << r.dim << ": " << r.trials << " trials, "
                      << r.violations << " violations, " << r.errors << " errors, min slack "
                      << nlohmann::json(r.min_slack).dump() << "\n";
        }
        return exit_code_for(reports);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int omega_command(const std::string& path) {
    try {
        const ComplexMatrix t = matrix_from_json(read_json_file(path));
        if (!t.is_square()) {
            std::cerr << "dimension mismatch: numerical radius needs a square matrix\n";
            return kExitDimension;
        }
        const RadiusResult r = numerical_radius(t);
        nlohmann::json out = {{"omega", r.omega},
                              {"argmax_angle", r.argmax_angle},
                              {"operator_norm", operator_norm(t)},
                              {"witness_vector", vector_to_json(r.witness_vector)}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of Cauchy-Schwarz, Buzano and numerical radius inequalities"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run suites from a config file or from flags");
    auto* config_opt = run->add_option("--config", run_args.config, "Config JSON");
    auto* suite_opt = run->add_option("--suite", run_args.suite, "Suite name");
    run->add_option("--family", run_args.family, "Ensemble family");
    run->add_option("--dim", run_args.dim, "Dimension");
    run->add_option("--trials", run_args.trials, "Number of trials");
    run->add_option("--seed", run_args.seed, "Master seed");
    run->add_option("--out", run_args.out, "Report path (JSON)");
    run->add_option("--csv", run_args.csv, "Optional CSV export path");
    run->add_option("--threads", run_args.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    config_opt->excludes(suite_opt);
    run->callback([&] {
        if (run_args.config.empty()) {
            for (const char* flag : {"--suite", "--family", "--dim", "--trials", "--out"}) {
                if (run->count(flag) == 0) throw CLI::RequiredError(std::string(flag) + " (without --config)");
            }
        }
    });

    std::string check_name;
    std::vector<std::string> check_inputs;
    CLI::App* check = app.add_subcommand("check", "Evaluate one check on operands from JSON files");
    check->add_option("name", check_name, "Check name")->required();
    check->add_option("--in", check_inputs, "Operand files in signature order")->required();

    std::string omega_input;
    CLI::App* omega = app.add_subcommand("omega", "Numerical radius of a matrix");
    omega->add_option("--in", omega_input, "Matrix JSON")->required();

    CLI::App* list = app.add_subcommand("list", "List registered suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    if (*run) return run_command(run_args);
    if (*check) {
        const std::vector<std::filesystem::path> files(check_inputs.begin(), check_inputs.end());
        return check_single(check_name, files, ToleranceConfig{}, std::cout, std::cerr);
    }
    if (*omega) return omega_command(omega_input);
    if (*list) {
        for (const SuiteSpec& s : suite_registry()) {
            std::cout << s.name << " [";
            for (std::size_t k = 0; k < s.families.size(); ++k) {
                std::cout << (k ? "," : "") << family_name(s.families[k]);
            }
            std::cout << "]" << (s.omega_bearing ? " omega" : "") << (s.expected_violation ? " expected-violation" : "")
                      << "\n";
        }
        return kExitOk;
    }
    return kExitInputError;
}
