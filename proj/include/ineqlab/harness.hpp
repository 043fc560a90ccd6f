#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ineqlab/chain.hpp"
#include "ineqlab/ensembles.hpp"

namespace ineqlab {

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitInputError = 2,
    kExitPrecondition = 3,
    kExitDimension = 4,
};

struct ToleranceConfig {
    double eps_abs = 1e-12;
    double eps_rel = 1e-9;
    double eps_rel_omega = 1e-8;
};

/// Throws InputError unless every field is positive and finite.
void validate(const ToleranceConfig& tol);

ChainTolerance chain_tolerance(const ToleranceConfig& tol, bool omega_bearing);

enum class OperandKind { matrix, vector };

/// Operands of one check, in the order of SuiteSpec::signature.
using Operands = std::vector<Sample>;

struct SuiteSpec {
    std::string name;
    std::vector<Family> families;  // accepted families for the primary operand
    std::vector<OperandKind> signature;
    bool omega_bearing = false;
    bool expected_violation = false;  // passes iff every trial violates
    std::function<ChainResult(const Operands&, const ChainTolerance&)> evaluate;
    std::function<Operands(const EnsembleConfig&, std::int64_t)> draw;

    bool accepts(Family f) const;
};

/// All registered suites, in report order.
const std::vector<SuiteSpec>& suite_registry();
const SuiteSpec* find_suite(std::string_view name);

struct TightInstance {
    std::string digest;  // family:dN:sSEED:tTRIAL
    std::int64_t trial = 0;
    double slack = 0.0;
};

struct SuiteReport {
    int schema_version = 1;
    std::string suite_name;
    std::string family;
    std::size_t dim = 0;
    std::uint64_t master_seed = 0;
    std::int64_t trials = 0;
    std::int64_t violations = 0;
    std::int64_t errors = 0;  // trials whose evaluation threw
    double min_slack = 0.0;
    double mean_slack = 0.0;
    std::vector<TightInstance> tightest_instances;  // up to 5, ascending slack
    bool expected_violation = false;
    std::int64_t runtime_ms = 0;

    /// Zero violations and errors, or, for an expected violation, every trial violating.
    bool ok() const;
};

inline constexpr std::size_t kTightestKept = 5;

/// Throws InputError for an unknown suite, an incompatible family or an
/// invalid ensemble. `threads` = 0 means one.
SuiteReport run_suite(std::string_view suite_name, const EnsembleConfig& ensemble, const ToleranceConfig& tol,
                      unsigned threads = 1);

struct SuiteEntry {
    std::string suite;
    Family family = Family::ginibre;
    std::size_t dim = 2;
    std::int64_t trials = 1;
    std::optional<std::uint64_t> seed;
};

struct RunConfig {
    ToleranceConfig tolerance;
    std::uint64_t master_seed = 0;
    unsigned threads = 1;
    std::string output;
    std::optional<std::string> csv;
    std::vector<SuiteEntry> suites;
};

/// Parses and validates a config document. Throws InputError.
RunConfig parse_run_config(const nlohmann::json& doc);

/// Runs every entry in order.
std::vector<SuiteReport> run_config(const RunConfig& cfg);

/// Loads the config, runs it, writes the JSON report (and CSV if requested).
/// Returns kExitOk, kExitViolation or kExitInputError; diagnostics go to `err`.
int run_all(const std::filesystem::path& config_path, std::ostream& err);

int exit_code_for(const std::vector<SuiteReport>& reports);

nlohmann::json to_json(const SuiteReport& report);
nlohmann::json to_json(const std::vector<SuiteReport>& reports);
nlohmann::json to_json(const ChainResult& result);
std::string to_csv(const std::vector<SuiteReport>& reports);

/// Evaluates `check_name` on operands read from JSON files (matrix/vector
/// format), prints the ChainResult as JSON to `out`, and returns the exit code:
/// 0 pass, 1 violation, 2 unknown check, wrong operand count or unreadable
/// input, 3 precondition failure, 4 operand shape mismatch.
int check_single(std::string_view check_name, const std::vector<std::filesystem::path>& input_files,
                 const ToleranceConfig& tol, std::ostream& out, std::ostream& err);

}  // namespace ineqlab
