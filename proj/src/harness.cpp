#include "ineqlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "ineqlab/json_io.hpp"
#include "ineqlab/operator_inequalities.hpp"
#include "ineqlab/operator_quantities.hpp"
#include "ineqlab/random.hpp"
#include "ineqlab/vector_inequalities.hpp"

namespace ineqlab {

namespace {

using nlohmann::json;

constexpr int kPsiGrid = 3600;
constexpr std::int64_t kOracleSamples = 1000;
constexpr std::uint64_t kOracleSeed = 0x6f6d656761ULL;

const std::vector<Family> kVectorFamilies{Family::unit_vector, Family::ginibre};
const std::vector<Family> kMatrixFamilies{Family::ginibre, Family::hermitian, Family::psd,
                                          Family::positive_contraction, Family::projection, Family::unitary};
const std::vector<Family> kNonzeroFamilies{Family::ginibre, Family::hermitian, Family::psd,
                                           Family::positive_contraction, Family::unitary};
const std::vector<Family> kContractionFamilies{Family::positive_contraction, Family::projection};
const std::vector<Family> kPsdFamilies{Family::psd, Family::positive_contraction, Family::projection};
const std::vector<Family> kNonzeroPsdFamilies{Family::psd, Family::positive_contraction};

const ComplexMatrix& mat(const Operands& ops, std::size_t i) { return std::get<ComplexMatrix>(ops[i]); }
const ComplexVector& vec(const Operands& ops, std::size_t i) { return std::get<ComplexVector>(ops[i]); }

// Vector checks: every operand comes from the configured family.
std::function<Operands(const EnsembleConfig&, std::int64_t)> vectors_from_family(std::size_t count) {
    return [count](const EnsembleConfig& cfg, std::int64_t trial) {
        Operands ops;
        for (std::size_t s = 0; s < count; ++s) {
            ops.emplace_back(draw_vector(cfg.family, cfg.dim, cfg.master_seed, trial, s));
        }
        return ops;
    };
}

// Primary matrix from the family, then auxiliaries from fixed families on streams 1, 2, ...
std::function<Operands(const EnsembleConfig&, std::int64_t)> matrix_then(std::vector<OperandKind> aux,
                                                                         std::vector<Family> aux_families) {
    return [aux = std::move(aux), aux_families = std::move(aux_families)](const EnsembleConfig& cfg,
                                                                          std::int64_t trial) {
        Operands ops;
        ops.push_back(sample(cfg, trial));
        for (std::size_t k = 0; k < aux.size(); ++k) {
            const std::uint64_t stream = k + 1;
            if (aux[k] == OperandKind::vector) {
                ops.emplace_back(draw_vector(aux_families[k], cfg.dim, cfg.master_seed, trial, stream));
            } else {
                ops.emplace_back(draw_matrix(aux_families[k], cfg.dim, cfg.master_seed, trial, stream));
            }
        }
        return ops;
    };
}

using Vec3Fn = ChainResult (*)(const ComplexVector&, const ComplexVector&, const ComplexVector&,
                               const ChainTolerance&);
using MatVecFn = ChainResult (*)(const ComplexMatrix&, const ComplexVector&, const ComplexVector&,
                                 const ChainTolerance&);
using Mat3Fn = ChainResult (*)(const ComplexMatrix&, const ComplexMatrix&, const ComplexMatrix&,
                               const ChainTolerance&);

constexpr auto M = OperandKind::matrix;
constexpr auto V = OperandKind::vector;

SuiteSpec vector3_suite(std::string name, Vec3Fn fn) {
    return {std::move(name), kVectorFamilies, {V, V, V}, false, false,
            [fn](const Operands& o, const ChainTolerance& t) { return fn(vec(o, 0), vec(o, 1), vec(o, 2), t); },
            vectors_from_family(3)};
}

SuiteSpec matvec_suite(std::string name, std::vector<Family> families, MatVecFn fn) {
    return {std::move(name), std::move(families), {M, V, V}, false, false,
            [fn](const Operands& o, const ChainTolerance& t) { return fn(mat(o, 0), vec(o, 1), vec(o, 2), t); },
            matrix_then({V, V}, {Family::ginibre, Family::ginibre})};
}

SuiteSpec mat3_suite(std::string name, bool omega_bearing, Mat3Fn fn) {
    return {std::move(name), kContractionFamilies, {M, M, M}, omega_bearing, false,
            [fn](const Operands& o, const ChainTolerance& t) { return fn(mat(o, 0), mat(o, 1), mat(o, 2), t); },
            matrix_then({M, M}, {Family::ginibre, Family::ginibre})};
}

SuiteSpec power_suite(int r) {
    return {"power_r" + std::to_string(r), kContractionFamilies, {M, M, M}, true, false,
            [r](const Operands& o, const ChainTolerance& t) {
                return power_chain(mat(o, 0), mat(o, 1), mat(o, 2), PowerParams{static_cast<double>(r)}, t);
            },
            matrix_then({M, M}, {Family::ginibre, Family::ginibre})};
}

SuiteSpec bourin_suite(int r) {
    return {"bourin_r" + std::to_string(r), kPsdFamilies, {M, M}, false, false,
            [r](const Operands& o, const ChainTolerance& t) {
                return bourin_property(mat(o, 0), mat(o, 1), PowerParams{static_cast<double>(r)}, t);
            },
            matrix_then({M}, {Family::psd})};
}

// A = [[0,1],[0,0]], x = (0,1), y = (1,0): the non-positive operator for which
// the scaled bound fails.
Operands counterexample_operands() {
    return {ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), ComplexVector{0.0, 1.0}, ComplexVector{1.0, 0.0}};
}

std::vector<SuiteSpec> build_registry() {
    std::vector<SuiteSpec> r;
    r.push_back(vector3_suite("buzano", [](const ComplexVector& x, const ComplexVector& y, const ComplexVector& z,
                                           const ChainTolerance& t) {
        ChainResult out = buzano_chain(x, y, z, t);
#ifdef INEQLAB_FAULT_INJECTION
        out.terms[0].value += 1.0;
        out = make_chain(out.check_name, out.terms, t);
#endif
        return out;
    }));
    r.push_back(vector3_suite("lemma21", &lemma21_chain));
    r.push_back(vector3_suite("cs_refinement", &cs_refinement_chain));
    r.push_back(vector3_suite("krein_triangle", &krein_triangle));
    r.push_back(vector3_suite("lin_triangle_refined", &lin_triangle_refined));
    r.push_back({"psi_infimum", kVectorFamilies, {V, V}, false, false,
                 [](const Operands& o, const ChainTolerance& t) {
                     return psi_infimum_property(vec(o, 0), vec(o, 1), kPsiGrid, t);
                 },
                 vectors_from_family(2)});
    r.push_back(matvec_suite("projection_buzano", {Family::projection}, &projection_buzano));
    r.push_back(matvec_suite("lemma_2A", kPsdFamilies, &lemma_2A_chain));
    r.push_back(matvec_suite("theorem_gap", kContractionFamilies, &theorem_gap_chain));
    r.push_back(matvec_suite("corollary33", kContractionFamilies,
                             [](const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                                const ChainTolerance& t) { return corollary33_chain(a, x, y, false, t); }));
    r.push_back(matvec_suite("corollary33_scaled", kNonzeroPsdFamilies,
                             [](const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y,
                                const ChainTolerance& t) { return corollary33_chain(a, x, y, true, t); }));
    r.push_back(matvec_suite("corollary35", kContractionFamilies, &corollary35_chain));
    r.push_back(matvec_suite("remark36_scaled", kNonzeroPsdFamilies, &remark36_scaled));
    r.push_back(matvec_suite("remark36_polar", kNonzeroFamilies, &remark36_polar_chain));
    r.push_back({"corollary37", kMatrixFamilies, {M, M}, true, false,
                 [](const Operands& o, const ChainTolerance& t) { return corollary37_chain(mat(o, 0), mat(o, 1), t); },
                 matrix_then({M}, {Family::psd})});
    r.push_back(mat3_suite("corollary38_omega", true, &corollary38_omega_chain));
    r.push_back(mat3_suite("corollary38_norm", false, &corollary38_norm_chain));
    for (int k = 1; k <= 3; ++k) r.push_back(power_suite(k));
    for (int k = 1; k <= 2; ++k) r.push_back(bourin_suite(k));
    r.push_back({"final_omega_refinement", kMatrixFamilies, {M}, true, false,
                 [](const Operands& o, const ChainTolerance& t) { return final_omega_refinement_chain(mat(o, 0), t); },
                 matrix_then({}, {})});
    r.push_back({"omega_oracle", kMatrixFamilies, {M}, true, false,
                 [](const Operands& o, const ChainTolerance& t) {
                     const ComplexMatrix& m = mat(o, 0);
                     const double omega = numerical_radius(m).omega;
                     return make_chain("omega_oracle",
                                       {{"sampled max |<Tx,x>|/<x,x>",
                                         numerical_radius_sampling_oracle(m, kOracleSamples, kOracleSeed)},
                                        {"w(T)", omega},
                                        {"|T|", operator_norm(m)},
                                        {"2 w(T)", 2.0 * omega}},
                                       t);
                 },
                 matrix_then({}, {})});
    r.push_back({"remark36_counterexample",
                 {Family::ginibre, Family::hermitian, Family::psd, Family::positive_contraction, Family::projection,
                  Family::unitary, Family::unit_vector},
                 {M, V, V},
                 false,
                 true,
                 [](const Operands& o, const ChainTolerance& t) {
                     return remark36_scaled_unchecked(mat(o, 0), vec(o, 1), vec(o, 2), t);
                 },
                 [](const EnsembleConfig&, std::int64_t) { return counterexample_operands(); }});
    return r;
}

double sanitize(double v) { return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v; }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string digest(std::string_view family, std::size_t dim, std::uint64_t seed, std::int64_t trial) {
    std::ostringstream out;
    out << family << ":d" << dim << ":s" << seed << ":t" << trial;
    return out.str();
}

struct TrialOutcome {
    bool error = false;
    bool passed = true;
    double slack = 0.0;
};

template <class T>
T required(const json& obj, const char* key, const char* where) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InputError(std::string(where) + ": missing '" + key + "'");
    try {
        return it->get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string(where) + ": bad '" + key + "': " + e.what());
    }
}

std::int64_t read_int(const json& obj, const char* key, const char* where) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InputError(std::string(where) + ": missing '" + key + "'");
    if (!it->is_number_integer()) throw InputError(std::string(where) + ": '" + key + "' must be an integer");
    return it->get<std::int64_t>();
}

std::uint64_t read_seed(const json& value, const char* where) {
    if (value.is_number_unsigned()) return value.get<std::uint64_t>();
    if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(value.get<std::int64_t>());
    }
    throw InputError(std::string(where) + ": seed must be a non-negative integer");
}

}  // namespace

bool SuiteSpec::accepts(Family f) const { return std::find(families.begin(), families.end(), f) != families.end(); }

const std::vector<SuiteSpec>& suite_registry() {
    static const std::vector<SuiteSpec> registry = build_registry();
    return registry;
}

const SuiteSpec* find_suite(std::string_view name) {
    for (const SuiteSpec& s : suite_registry()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

void validate(const ToleranceConfig& tol) {
    for (double v : {tol.eps_abs, tol.eps_rel, tol.eps_rel_omega}) {
        if (!(v > 0.0) || !std::isfinite(v)) throw InputError("tolerance values must be positive and finite");
    }
}

ChainTolerance chain_tolerance(const ToleranceConfig& tol, bool omega_bearing) {
    return {tol.eps_abs, omega_bearing ? tol.eps_rel_omega : tol.eps_rel};
}

bool SuiteReport::ok() const {
    if (errors > 0) return false;
    return expected_violation ? violations == trials : violations == 0;
}

SuiteReport run_suite(std::string_view suite_name, const EnsembleConfig& ensemble, const ToleranceConfig& tol,
                      unsigned threads) {
    const SuiteSpec* spec = find_suite(suite_name);
    if (spec == nullptr) throw InputError("unknown suite '" + std::string(suite_name) + "'");
    if (!spec->accepts(ensemble.family)) {
        throw InputError("suite '" + spec->name + "' does not accept family '" +
                         std::string(family_name(ensemble.family)) + "'");
    }
    validate(tol);
    try {
        validate(ensemble);
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    }

    const auto start = std::chrono::steady_clock::now();
    const ChainTolerance chain_tol = chain_tolerance(tol, spec->omega_bearing);
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(ensemble.trials));
    std::atomic<std::int64_t> next{0};
    auto worker = [&]() {
        for (std::int64_t i = next++; i < ensemble.trials; i = next++) {
            TrialOutcome& o = outcomes[static_cast<std::size_t>(i)];
            try {
                const ChainResult r = spec->evaluate(spec->draw(ensemble, i), chain_tol);
                o.passed = r.passed;
                o.slack = sanitize(r.min_slack());
            } catch (const std::exception&) {
                o.error = true;
            }
        }
    };
    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::int64_t>(ensemble.trials, 256))));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    }

    SuiteReport report;
    report.suite_name = spec->name;
    report.family = spec->expected_violation ? "fixed" : std::string(family_name(ensemble.family));
    report.dim = spec->expected_violation ? 2 : ensemble.dim;
    report.master_seed = ensemble.master_seed;
    report.trials = ensemble.trials;
    report.expected_violation = spec->expected_violation;

    std::vector<std::pair<double, std::int64_t>> ranked;
    double sum = 0.0;
    std::int64_t counted = 0;
    for (std::int64_t i = 0; i < ensemble.trials; ++i) {
        const TrialOutcome& o = outcomes[static_cast<std::size_t>(i)];
        if (o.error) {
            ++report.errors;
            continue;
        }
        if (!o.passed) ++report.violations;
        if (std::isfinite(o.slack)) {
            sum += o.slack;
            ++counted;
        }
        ranked.emplace_back(o.slack, i);
    }
    const std::size_t keep = std::min(kTightestKept, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep), ranked.end());
    for (std::size_t k = 0; k < keep; ++k) {
        report.tightest_instances.push_back(
            {digest(report.family, report.dim, report.master_seed, ranked[k].second), ranked[k].second,
             ranked[k].first});
    }
    report.min_slack = keep > 0 ? ranked.front().first : std::numeric_limits<double>::quiet_NaN();
    report.mean_slack = counted > 0 ? sum / static_cast<double>(counted) : std::numeric_limits<double>::quiet_NaN();
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

RunConfig parse_run_config(const json& doc) {
    if (!doc.is_object()) throw InputError("config: expected a JSON object");
    RunConfig cfg;
    if (const auto tol = doc.find("tolerance"); tol != doc.end()) {
        if (!tol->is_object()) throw InputError("config: 'tolerance' must be an object");
        cfg.tolerance.eps_abs = tol->value("eps_abs", cfg.tolerance.eps_abs);
        cfg.tolerance.eps_rel = tol->value("eps_rel", cfg.tolerance.eps_rel);
        cfg.tolerance.eps_rel_omega = tol->value("eps_rel_omega", cfg.tolerance.eps_rel_omega);
    }
    validate(cfg.tolerance);
    if (const auto seed = doc.find("master_seed"); seed != doc.end()) cfg.master_seed = read_seed(*seed, "config");
    if (doc.contains("threads")) {
        const std::int64_t threads = read_int(doc, "threads", "config");
        if (threads < 1 || threads > 1024) throw InputError("config: 'threads' must be in [1, 1024]");
        cfg.threads = static_cast<unsigned>(threads);
    }
    cfg.output = required<std::string>(doc, "output", "config");
    if (cfg.output.empty()) throw InputError("config: 'output' must not be empty");
    if (const auto csv = doc.find("csv"); csv != doc.end() && !csv->is_null()) {
        if (!csv->is_string()) throw InputError("config: 'csv' must be a string");
        cfg.csv = csv->get<std::string>();
    }
    const auto suites = doc.find("suites");
    if (suites == doc.end() || !suites->is_array() || suites->empty()) {
        throw InputError("config: 'suites' must be a non-empty array");
    }
    for (const json& entry : *suites) {
        if (!entry.is_object()) throw InputError("config: suite entries must be objects");
        SuiteEntry s;
        s.suite = required<std::string>(entry, "suite", "config suite");
        const SuiteSpec* spec = find_suite(s.suite);
        if (spec == nullptr) throw InputError("config: unknown suite '" + s.suite + "'");
        const std::string family = required<std::string>(entry, "family", s.suite.c_str());
        const std::optional<Family> f = parse_family(family);
        if (!f) throw InputError("config: unknown family '" + family + "'");
        if (!spec->accepts(*f)) throw InputError("config: suite '" + s.suite + "' does not accept '" + family + "'");
        s.family = *f;
        const std::int64_t dim = read_int(entry, "dim", s.suite.c_str());
        if (dim < 1 || dim > static_cast<std::int64_t>(kMaxEnsembleDim)) {
            throw InputError("config: " + s.suite + ": dim must be in [1, 64]");
        }
        s.dim = static_cast<std::size_t>(dim);
        s.trials = read_int(entry, "trials", s.suite.c_str());
        if (s.trials < 1) throw InputError("config: " + s.suite + ": trials must be positive");
        if (const auto seed = entry.find("seed"); seed != entry.end()) s.seed = read_seed(*seed, s.suite.c_str());
        cfg.suites.push_back(std::move(s));
    }
    return cfg;
}

std::vector<SuiteReport> run_config(const RunConfig& cfg) {
    std::vector<SuiteReport> reports;
    for (const SuiteEntry& s : cfg.suites) {
        const EnsembleConfig ensemble{s.family, s.dim, s.seed.value_or(cfg.master_seed), s.trials};
        reports.push_back(run_suite(s.suite, ensemble, cfg.tolerance, cfg.threads));
    }
    return reports;
}

int exit_code_for(const std::vector<SuiteReport>& reports) {
    for (const SuiteReport& r : reports) {
        if (!r.ok()) return kExitViolation;
    }
    return kExitOk;
}

int run_all(const std::filesystem::path& config_path, std::ostream& err) {
    try {
        const RunConfig cfg = parse_run_config(read_json_file(config_path));
        const std::vector<SuiteReport> reports = run_config(cfg);
        write_text_file(cfg.output, to_json(reports).dump(2) + "\n");
        if (cfg.csv) write_text_file(*cfg.csv, to_csv(reports));
        for (const SuiteReport& r : reports) {
            if (!r.ok()) {
                err << "suite " << r.suite_name << " (" << r.family << ", d" << r.dim << "): " << r.violations
                    << " violations, " << r.errors << " errors\n";
            }
        }
        return exit_code_for(reports);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

json to_json(const SuiteReport& r) {
    json tight = json::array();
    for (const TightInstance& t : r.tightest_instances) {
        tight.push_back({{"digest", t.digest}, {"trial", t.trial}, {"slack", number_or_null(t.slack)}});
    }
    return {{"schema_version", r.schema_version},
            {"suite_name", r.suite_name},
            {"family", r.family},
            {"dim", r.dim},
            {"master_seed", r.master_seed},
            {"trials", r.trials},
            {"violations", r.violations},
            {"errors", r.errors},
            {"min_slack", number_or_null(r.min_slack)},
            {"mean_slack", number_or_null(r.mean_slack)},
            {"tightest_instances", std::move(tight)},
            {"expected_violation", r.expected_violation},
            {"ok", r.ok()},
            {"runtime_ms", r.runtime_ms}};
}

json to_json(const std::vector<SuiteReport>& reports) {
    json out = json::array();
    for (const SuiteReport& r : reports) out.push_back(to_json(r));
    return out;
}

json to_json(const ChainResult& result) {
    json terms = json::array();
    for (const ChainTerm& t : result.terms) terms.push_back({{"label", t.label}, {"value", number_or_null(t.value)}});
    json slacks = json::array();
    for (double s : result.slacks) slacks.push_back(number_or_null(s));
    return {{"check", result.check_name},
            {"terms", std::move(terms)},
            {"slacks", std::move(slacks)},
            {"min_slack", number_or_null(result.min_slack())},
            {"tolerance_used", result.tolerance_used},
            {"passed", result.passed}};
}

std::string to_csv(const std::vector<SuiteReport>& reports) {
    std::ostringstream out;
    out << "suite_name,family,dim,master_seed,trials,violations,errors,min_slack,mean_slack,expected_violation,ok,"
           "runtime_ms\n";
    for (const SuiteReport& r : reports) {
        out << r.suite_name << ',' << r.family << ',' << r.dim << ',' << r.master_seed << ',' << r.trials << ','
            << r.violations << ',' << r.errors << ',' << number_or_null(r.min_slack).dump() << ','
            << number_or_null(r.mean_slack).dump() << ',' << (r.expected_violation ? "true" : "false") << ','
            << (r.ok() ? "true" : "false") << ',' << r.runtime_ms << '\n';
    }
    return out.str();
}

int check_single(std::string_view check_name, const std::vector<std::filesystem::path>& input_files,
                 const ToleranceConfig& tol, std::ostream& out, std::ostream& err) {
    const SuiteSpec* spec = find_suite(check_name);
    if (spec == nullptr) {
        err << "error: unknown check '" << check_name << "'\n";
        return kExitInputError;
    }
    if (input_files.size() != spec->signature.size()) {
        err << "error: " << spec->name << " takes " << spec->signature.size() << " operand files, got "
            << input_files.size() << "\n";
        return kExitInputError;
    }
    try {
        validate(tol);
        Operands ops;
        for (std::size_t k = 0; k < input_files.size(); ++k) {
            const ComplexMatrix m = matrix_from_json(read_json_file(input_files[k]));
            if (spec->signature[k] == OperandKind::vector) {
                if (m.cols() != 1) throw DimensionError(input_files[k].string() + ": expected a vector (cols = 1)");
                ops.emplace_back(m.column(0));
            } else {
                if (!m.is_square()) throw DimensionError(input_files[k].string() + ": expected a square matrix");
                ops.emplace_back(m);
            }
        }
        const ChainResult result = spec->evaluate(ops, chain_tolerance(tol, spec->omega_bearing));
        out << to_json(result).dump(2) << "\n";
        return result.passed ? kExitOk : kExitViolation;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DimensionError& e) {
        err << "dimension mismatch: " << e.what() << "\n";
        return kExitDimension;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace ineqlab
