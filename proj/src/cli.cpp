#include "qhc/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qhc/json_io.hpp"

namespace qhc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitDomain = 2;

struct MapSpec {
    std::string dims;             // e.g. "2x2x2"
    std::string convention = "row-major";
    std::string file;             // JSON file, for explicit tables
};

std::vector<int> parse_dims(const std::string& spec) {
    std::vector<int> out;
    std::string token;
    for (char ch : spec + "x") {
        if (ch == 'x' || ch == 'X') {
            if (token.empty()) throw ArgumentError("bad map spec \"" + spec + "\"");
            out.push_back(std::stoi(token));
            token.clear();
        } else if (ch >= '0' && ch <= '9') {
            token += ch;
        } else {
            throw ArgumentError("bad map spec \"" + spec + "\": unexpected '" +
                                std::string(1, ch) + "'");
        }
    }
    return out;
}

IndexMap make_map(const MapSpec& spec) {
    if (!spec.file.empty()) return map_from_json(load_json_file(spec.file));
    if (spec.dims.empty()) throw ArgumentError("no --map given");
    Convention conv;
    if (spec.convention == "row-major") {
        conv = Convention::RowMajor;
    } else if (spec.convention == "col-major") {
        conv = Convention::ColMajor;
    } else {
        throw ArgumentError("unknown convention \"" + spec.convention + "\"");
    }
    return IndexMap(DimensionFactorization(parse_dims(spec.dims)), conv);
}

void emit(const Json& j, const std::string& output_path, std::ostream& out) {
    const std::string text = dump_json(j);
    if (output_path.empty()) {
        out << text;
    } else {
        std::ofstream file(output_path);
        if (!file) throw IoError("cannot open output file: " + output_path);
        file << text;
    }
}

enum class InputKind { State, Density, ClassicalObs, QuantumObs, Unknown };

InputKind sniff(const Json& j) {
    if (!j.is_object()) return InputKind::Unknown;
    if (j.contains("probs")) return InputKind::State;
    if (j.contains("values")) return InputKind::ClassicalObs;
    if (j.contains("dim") && j.contains("entries")) return InputKind::Density;
    return InputKind::Unknown;
}

// --- validate ---------------------------------------------------------------

Json classical_state_verdict(const Json& j) {
    Json verdict;
    verdict["kind"] = "probability-state";
    Json violations = Json::array();
    std::vector<double> probs;
    for (const auto& x : j.at("probs")) {
        if (!x.is_number()) throw ParseError("probs must contain only numbers");
        probs.push_back(x.get<double>());
    }
    double sum = 0.0, worst_negative = 0.0;
    bool finite = true;
    for (double p : probs) {
        if (!std::isfinite(p)) finite = false;
        if (p < worst_negative) worst_negative = p;
        sum += p;
    }
    if (!finite) violations.push_back(Json{{"invariant", "finite"}, {"magnitude", 0.0}});
    if (finite && worst_negative < -1e-12) {
        violations.push_back(Json{{"invariant", "nonnegative"}, {"magnitude", -worst_negative}});
    }
    if (finite && std::abs(sum - 1.0) > 1e-9) {
        violations.push_back(Json{{"invariant", "normalized"}, {"magnitude", std::abs(sum - 1.0)}});
    }
    verdict["valid"] = violations.empty();
    verdict["violations"] = std::move(violations);
    return verdict;
}

Json observable_verdict(const Json& j) {
    Json verdict;
    verdict["kind"] = "classical-observable";
    Json violations = Json::array();
    bool finite = true;
    for (const auto& x : j.at("values")) {
        if (!x.is_number()) throw ParseError("values must contain only numbers");
        if (!std::isfinite(x.get<double>())) finite = false;
    }
    if (!finite) violations.push_back(Json{{"invariant", "finite"}, {"magnitude", 0.0}});
    verdict["valid"] = violations.empty();
    verdict["violations"] = std::move(violations);
    return verdict;
}

Json density_verdict(const Json& j) {
    Json verdict;
    verdict["kind"] = "density-matrix";
    const ComplexMatrix m = matrix_from_json(j);
    const DensityValidationReport report = validate_density_report(m);
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        violations.push_back(Json{{"invariant", v.invariant}, {"magnitude", v.magnitude}});
    }
    verdict["valid"] = report.valid;
    verdict["violations"] = std::move(violations);
    return verdict;
}

int cmd_validate(const std::string& path, const std::string& output_path, std::ostream& out) {
    const Json input = load_json_file(path);
    Json verdict;
    switch (sniff(input)) {
        case InputKind::State:
            verdict = classical_state_verdict(input);
            break;
        case InputKind::ClassicalObs:
            verdict = observable_verdict(input);
            break;
        case InputKind::Density:
            verdict = density_verdict(input);
            break;
        default:
            throw ParseError("unrecognized input: expected \"probs\", \"values\", or "
                             "\"dim\"+\"entries\"");
    }
    emit(verdict, output_path, out);
    return verdict.at("valid").get<bool>() ? kExitOk : kExitDomain;
}

// --- analyze ----------------------------------------------------------------

Json analyze_classical_one(const ProbabilityState& state, const IndexMap& map) {
    Json j;
    j["map"] = map_to_json(map);
    j["entropy"] = shannon_entropy(state);
    const MarginalSet m = marginals(state, map);
    Json marg = Json::array();
    Json marg_h = Json::array();
    for (const ProbabilityState& p : m.marginals) {
        marg.push_back(p.probs());
        marg_h.push_back(shannon_entropy(p));
    }
    j["marginals"] = std::move(marg);
    j["marginal_entropies"] = std::move(marg_h);
    if (map.rank() == 2) {
        j["mutual_information"] = mutual_information(state, map);
        j["subadditivity"] = report_to_json(check_subadditivity(state, map));
    } else if (map.rank() == 3) {
        j["strong_subadditivity"] = report_to_json(check_strong_subadditivity(state, map));
    }
    return j;
}

Json analyze_density_one(const DensityMatrix& rho, const IndexMap& map) {
    Json j;
    j["map"] = map_to_json(map);
    j["entropy"] = von_neumann_entropy(rho);
    Json reduced = Json::array();
    for (int p = 1; p <= map.rank(); ++p) {
        reduced.push_back(von_neumann_entropy(partial_trace(rho, map, {p})));
    }
    j["reduced_entropies"] = std::move(reduced);
    if (map.rank() == 2) {
        j["subadditivity"] = report_to_json(check_quantum_subadditivity(rho, map));
    } else if (map.rank() == 3) {
        j["ssa"] = report_to_json(check_quantum_ssa(rho, map));
    }
    return j;
}

int cmd_analyze(const std::string& path, const MapSpec& map_spec, bool all_partitions,
                int parts, const std::string& output_path, std::ostream& out) {
    const Json input = load_json_file(path);
    const InputKind kind = sniff(input);

    std::optional<ProbabilityState> state;
    std::optional<DensityMatrix> rho;
    std::int64_t n = 0;
    if (kind == InputKind::State) {
        state = state_from_json(input);
        n = state->size();
    } else if (kind == InputKind::Density) {
        rho = validate_density(matrix_from_json(input));
        n = rho->dim();
    } else {
        throw ParseError("analyze expects a probability state or a density matrix");
    }

    Json j;
    j["n"] = n;
    j["kind"] = (kind == InputKind::State) ? "probability-state" : "density-matrix";

    auto analyze_one = [&](const IndexMap& map) {
        return state ? analyze_classical_one(*state, map) : analyze_density_one(*rho, map);
    };

    if (all_partitions) {
        j["parts"] = parts;
        Json reports = Json::array();
        for (const DimensionFactorization& dims : enumerate_factorizations(n, parts)) {
            reports.push_back(analyze_one(IndexMap(dims, Convention::RowMajor)));
        }
        if (reports.empty()) j["note"] = "no nontrivial partitions";
        j["reports"] = std::move(reports);
    } else {
        const IndexMap map = make_map(map_spec);
        j.update(analyze_one(map), true);
    }
    emit(j, output_path, out);
    return kExitOk;
}

// --- hidden -----------------------------------------------------------------

int cmd_hidden(const std::string& state_path, const std::string& obs_path,
               const MapSpec& map_spec, double tol, const std::string& output_path,
               std::ostream& out) {
    const ProbabilityState state = state_from_json(load_json_file(state_path));
    const ClassicalObservable obs = observable_from_json(load_json_file(obs_path));
    const IndexMap map = make_map(map_spec);
    if (map.total() != state.size() || state.size() != obs.size()) {
        throw DimensionError("state, observable, and map must agree on N");
    }

    const ClassicalFactorization fact =
        (map.rank() == 2) ? factor_classical(obs, map, tol)
                          : factor_classical_multi(obs, map, tol);

    Json j;
    j["map"] = map_to_json(map);
    j["factorization"] = report_to_json(fact);
    if (fact.success) {
        std::vector<ClassicalObservable> factors;
        Json lifted = Json::array();
        for (int p = 0; p < map.rank(); ++p) {
            factors.emplace_back(fact.factors[static_cast<std::size_t>(p)]);
            lifted.push_back(lift_factor(map, p + 1, factors.back()).values());
        }
        const double direct = mean(state, obs);
        const double corr = mean_as_correlation(state, map, factors);
        j["lifted_observables"] = std::move(lifted);
        j["mean_direct"] = direct;
        j["mean_as_correlation"] = corr;
        j["difference"] = std::abs(direct - corr);
    } else {
        j["verdict"] = "not product-form under this map";
    }
    emit(j, output_path, out);
    return kExitOk;
}

// --- quantum ----------------------------------------------------------------

int cmd_quantum(const std::string& rho_path, const std::vector<std::string>& factor_paths,
                const MapSpec& map_spec, const std::string& output_path, std::ostream& out) {
    const DensityMatrix rho = validate_density(matrix_from_json(load_json_file(rho_path)));
    const IndexMap map = make_map(map_spec);
    if (static_cast<int>(factor_paths.size()) != map.rank()) {
        throw DimensionError("expected " + std::to_string(map.rank()) +
                             " factor observables, got " + std::to_string(factor_paths.size()));
    }
    std::vector<QuantumObservable> factors;
    for (const std::string& p : factor_paths) {
        factors.emplace_back(matrix_from_json(load_json_file(p)));
    }

    const double via_kron = expectation(rho, kron(factors));
    const double via_lifts = mean_as_quantum_correlation(rho, map, factors);

    std::vector<QuantumObservable> lifts;
    for (int p = 1; p <= map.rank(); ++p) {
        lifts.push_back(lift_observable(map, p, factors[static_cast<std::size_t>(p - 1)]));
    }
    Json commutators = Json::array();
    for (std::size_t a = 0; a < lifts.size(); ++a) {
        for (std::size_t b = a + 1; b < lifts.size(); ++b) {
            const ComplexMatrix ab = matmul(lifts[a].matrix(), lifts[b].matrix());
            const ComplexMatrix ba = matmul(lifts[b].matrix(), lifts[a].matrix());
            commutators.push_back((ab - ba).max_abs());
        }
    }

    Json j;
    j["map"] = map_to_json(map);
    j["expectation_kron"] = via_kron;
    j["expectation_lifted"] = via_lifts;
    j["difference"] = std::abs(via_kron - via_lifts);
    j["commutator_max_abs"] = std::move(commutators);
    j["entropy"] = von_neumann_entropy(rho);
    Json reduced = Json::array();
    for (int p = 1; p <= map.rank(); ++p) {
        reduced.push_back(von_neumann_entropy(partial_trace(rho, map, {p})));
    }
    j["reduced_entropies"] = std::move(reduced);
    if (map.rank() == 2) {
        j["subadditivity"] = report_to_json(check_quantum_subadditivity(rho, map));
    } else if (map.rank() == 3) {
        j["ssa"] = report_to_json(check_quantum_ssa(rho, map));
    }
    emit(j, output_path, out);
    return kExitOk;
}

// --- sample -----------------------------------------------------------------

int cmd_sample(const std::string& state_path, const std::string& obs_path, std::int64_t count,
               std::uint64_t seed, const std::string& output_path, std::ostream& out) {
    const Json state_json = load_json_file(state_path);
    const Json obs_json = load_json_file(obs_path);

    SampleReport report;
    if (sniff(state_json) == InputKind::State) {
        report = sample_classical(state_from_json(state_json),
                                  observable_from_json(obs_json), count, seed);
    } else if (sniff(state_json) == InputKind::Density) {
        const DensityMatrix rho = validate_density(matrix_from_json(state_json));
        QuantumObservable obs = [&] {
            if (sniff(obs_json) == InputKind::ClassicalObs) {
                // a plain values file measures the diagonal observable diag(values)
                const ClassicalObservable values = observable_from_json(obs_json);
                ComplexMatrix m(values.size(), values.size());
                for (int i = 0; i < values.size(); ++i) m(i, i) = values[i];
                return QuantumObservable(std::move(m));
            }
            return QuantumObservable(matrix_from_json(obs_json));
        }();
        report = sample_diagonal_quantum(rho, obs, count, seed);
    } else {
        throw ParseError("sample expects a probability state or a density matrix");
    }
    emit(report_to_json(report), output_path, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"single-qudit hidden-correlation toolkit"};
    app.require_subcommand(1);
    // parent options (--output) remain reachable after the subcommand name
    app.fallthrough();

    std::string output_path;
    app.add_option("--output", output_path, "write the JSON report here instead of stdout")
        ->capture_default_str();

    MapSpec map_spec;
    auto add_map_options = [&map_spec](CLI::App* cmd) {
        cmd->add_option("--map", map_spec.dims, "dimension factorization, e.g. 2x2 or 2x2x2");
        cmd->add_option("--convention", map_spec.convention,
                        "index convention: row-major (default) or col-major")
            ->check(CLI::IsMember({"row-major", "col-major"}));
        cmd->add_option("--map-file", map_spec.file,
                        "JSON index map (supports explicit tables); overrides --map");
    };

    // validate
    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check a state or observable file");
    validate->add_option("file", validate_path, "input JSON file")->required();

    // analyze
    std::string analyze_path;
    bool all_partitions = false;
    int parts = 2;
    CLI::App* analyze =
        app.add_subcommand("analyze", "entropies, marginals, and entropic inequalities");
    analyze->add_option("state", analyze_path, "probability state or density matrix JSON")
        ->required();
    add_map_options(analyze);
    analyze->add_flag("--all-partitions", all_partitions,
                      "sweep every factorization with the given number of parts");
    analyze->add_option("--parts", parts, "parts for --all-partitions (default 2)")
        ->check(CLI::Range(2, 8));

    // hidden
    std::string hidden_state_path, hidden_obs_path;
    double hidden_tol = kFactorTol;
    CLI::App* hidden =
        app.add_subcommand("hidden", "factor an observable and expose hidden correlations");
    hidden->add_option("state", hidden_state_path, "probability state JSON")->required();
    hidden->add_option("observable", hidden_obs_path, "observable JSON")->required();
    add_map_options(hidden);
    hidden->add_option("--tol", hidden_tol, "factorization tolerance (relative)")
        ->check(CLI::PositiveNumber);

    // quantum
    std::string quantum_rho_path;
    std::vector<std::string> factor_paths;
    CLI::App* quantum =
        app.add_subcommand("quantum", "correlation function of lifted commuting observables");
    quantum->add_option("rho", quantum_rho_path, "density matrix JSON")->required();
    quantum->add_option("--factors", factor_paths, "per-subsystem observable JSON files")
        ->required()
        ->expected(-1);
    add_map_options(quantum);

    // sample
    std::string sample_state_path, sample_obs_path;
    std::int64_t sample_count = 0;
    std::uint64_t sample_seed = 0;
    CLI::App* sample = app.add_subcommand("sample", "simulate repeated measurements");
    sample->add_option("state", sample_state_path, "probability state or density matrix JSON")
        ->required();
    sample->add_option("observable", sample_obs_path, "observable JSON")->required();
    sample->add_option("--count,-L", sample_count, "number of measurements")->required();
    sample->add_option("--seed", sample_seed, "PRNG seed")->envname("QHC_SEED");

    std::vector<std::string> argv_copy = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("qhc");
        for (const std::string& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_path, output_path, out);
        if (analyze->parsed()) {
            return cmd_analyze(analyze_path, map_spec, all_partitions, parts, output_path, out);
        }
        if (hidden->parsed()) {
            return cmd_hidden(hidden_state_path, hidden_obs_path, map_spec, hidden_tol,
                              output_path, out);
        }
        if (quantum->parsed()) {
            return cmd_quantum(quantum_rho_path, factor_paths, map_spec, output_path, out);
        }
        if (sample->parsed()) {
            return cmd_sample(sample_state_path, sample_obs_path, sample_count, sample_seed,
                              output_path, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitIo;
}

}  // namespace qhc
