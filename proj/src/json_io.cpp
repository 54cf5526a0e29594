#include "qhc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qhc {

namespace {

void write_double(std::ostream& out, double x) {
    if (!std::isfinite(x)) throw Error("refusing to serialize a non-finite number");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out << buf;
}

void write_json(std::ostream& out, const Json& j, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
    switch (j.type()) {
        case nlohmann::detail::value_t::object: {
            if (j.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out << ",\n";
                first = false;
                out << pad << Json(key).dump() << ": ";
                write_json(out, value, indent, depth + 1);
            }
            out << "\n" << close_pad << "}";
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (j.empty()) {
                out << "[]";
                return;
            }
            out << "[\n";
            bool first = true;
            for (const auto& value : j) {
                if (!first) out << ",\n";
                first = false;
                out << pad;
                write_json(out, value, indent, depth + 1);
            }
            out << "\n" << close_pad << "]";
            return;
        }
        case nlohmann::detail::value_t::number_float:
            write_double(out, j.get<double>());
            return;
        default:
            out << j.dump();
            return;
    }
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex entries must be [re, im] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> number_array(const Json& j, const char* what) {
    if (!j.is_array() || j.empty()) {
        throw ParseError(std::string(what) + " must be a nonempty array of numbers");
    }
    std::vector<double> v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) {
            throw ParseError(std::string(what) + " must contain only numbers");
        }
        v.push_back(x.get<double>());
    }
    return v;
}

bool has_number(const Json& j, const char* key) {
    return j.contains(key) && j.at(key).is_number();
}

bool has_bool(const Json& j, const char* key) {
    return j.contains(key) && j.at(key).is_boolean();
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
    std::ostringstream out;
    write_json(out, j, indent, 0);
    out << "\n";
    return out.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

ProbabilityState state_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("probs")) {
        throw ParseError("probability state files need a \"probs\" array");
    }
    return ProbabilityState(number_array(j.at("probs"), "probs"));
}

Json state_to_json(const ProbabilityState& state) {
    Json j;
    j["probs"] = state.probs();
    return j;
}

ClassicalObservable observable_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("values")) {
        throw ParseError("observable files need a \"values\" array");
    }
    return ClassicalObservable(number_array(j.at("values"), "values"));
}

Json observable_to_json(const ClassicalObservable& obs) {
    Json j;
    j["values"] = obs.values();
    return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw ParseError("matrix files need \"dim\" and \"entries\"");
    }
    if (!j.at("dim").is_number_integer()) throw ParseError("\"dim\" must be an integer");
    const int n = j.at("dim").get<int>();
    if (n < 1) throw ParseError("\"dim\" must be >= 1");
    const Json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
        throw ParseError("\"entries\" must have exactly dim rows");
    }
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        const Json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ParseError("matrix row " + std::to_string(r + 1) +
                             " must have exactly dim entries");
        }
        for (int c = 0; c < n; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["dim"] = m.rows();
    j["entries"] = std::move(rows);
    return j;
}

IndexMap map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("factors")) {
        throw ParseError("index map needs a \"factors\" array");
    }
    std::vector<int> factors;
    for (const auto& f : j.at("factors")) {
        if (!f.is_number_integer()) throw ParseError("\"factors\" must contain integers");
        factors.push_back(f.get<int>());
    }
    DimensionFactorization dims(factors);

    if (!j.contains("convention")) return IndexMap(dims, Convention::RowMajor);
    const Json& conv = j.at("convention");
    if (conv.is_string()) {
        const std::string name = conv.get<std::string>();
        if (name == "row-major") return IndexMap(dims, Convention::RowMajor);
        if (name == "col-major") return IndexMap(dims, Convention::ColMajor);
        throw ParseError("unknown convention \"" + name + "\"");
    }
    if (conv.is_object() && conv.contains("table")) {
        std::vector<MultiIndex> table;
        for (const auto& row : conv.at("table")) {
            MultiIndex idx;
            for (const auto& x : row) {
                if (!x.is_number_integer()) throw ParseError("table entries must be integers");
                idx.push_back(x.get<int>());
            }
            table.push_back(std::move(idx));
        }
        return IndexMap(dims, std::move(table));
    }
    throw ParseError("convention must be \"row-major\", \"col-major\", or {\"table\": ...}");
}

Json map_to_json(const IndexMap& map) {
    Json j;
    j["factors"] = map.factorization().factors();
    switch (map.convention()) {
        case Convention::RowMajor:
            j["convention"] = "row-major";
            break;
        case Convention::ColMajor:
            j["convention"] = "col-major";
            break;
        case Convention::Explicit: {
            Json table = Json::array();
            for (const MultiIndex& idx : map.table()) table.push_back(idx);
            j["convention"] = Json{{"table", std::move(table)}};
            break;
        }
    }
    return j;
}

Json report_to_json(const InequalityReport& r) {
    Json j;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["holds"] = r.holds;
    j["slack"] = r.slack;
    return j;
}

Json report_to_json(const QuantumSubadditivityReport& r) {
    Json j;
    j["S12"] = r.s12;
    j["S1"] = r.s1;
    j["S2"] = r.s2;
    j["holds"] = r.holds;
    j["slack"] = r.slack;
    return j;
}

Json report_to_json(const QuantumSsaReport& r) {
    Json j;
    j["S123"] = r.s123;
    j["S2"] = r.s2;
    j["S12"] = r.s12;
    j["S23"] = r.s23;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["holds"] = r.holds;
    j["slack"] = r.slack;
    return j;
}

Json report_to_json(const SampleReport& r) {
    Json j;
    j["prng"] = kPrngName;
    j["seed"] = r.seed;
    j["count"] = r.count;
    j["empirical_mean"] = r.empirical_mean;
    j["empirical_moments"] = r.empirical_moments;
    j["exact_mean"] = r.exact_mean;
    j["standard_error_estimate"] = r.standard_error_estimate;
    return j;
}

Json report_to_json(const ClassicalFactorization& r) {
    Json j;
    j["success"] = r.success;
    j["residual"] = r.residual;
    j["factors"] = r.factors;
    j["gauge"] = r.gauge;
    if (r.degenerate) j["degenerate"] = true;
    return j;
}

Json report_to_json(const QuantumFactorization& r) {
    Json j;
    j["success"] = r.success;
    j["residual"] = r.residual;
    Json factors = Json::array();
    for (const ComplexMatrix& f : r.factors) factors.push_back(matrix_to_json(f));
    j["factors"] = std::move(factors);
    j["gauge"] = r.gauge;
    if (r.degenerate) j["degenerate"] = true;
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

bool matches_report_schema(const Json& j, const std::string& kind) {
    if (!j.is_object()) return false;
    if (kind == "inequality") {
        return has_number(j, "lhs") && has_number(j, "rhs") && has_bool(j, "holds") &&
               has_number(j, "slack");
    }
    if (kind == "quantum-subadditivity") {
        return has_number(j, "S12") && has_number(j, "S1") && has_number(j, "S2") &&
               has_bool(j, "holds") && has_number(j, "slack");
    }
    if (kind == "quantum-ssa") {
        return has_number(j, "S123") && has_number(j, "S2") && has_number(j, "S12") &&
               has_number(j, "S23") && has_bool(j, "holds") && has_number(j, "slack");
    }
    if (kind == "sample") {
        return j.contains("prng") && j.at("prng").is_string() && has_number(j, "seed") &&
               has_number(j, "count") && has_number(j, "empirical_mean") &&
               j.contains("empirical_moments") && j.at("empirical_moments").is_array() &&
               has_number(j, "exact_mean") && has_number(j, "standard_error_estimate");
    }
    if (kind == "classical-factorization" || kind == "quantum-factorization") {
        return has_bool(j, "success") && has_number(j, "residual") && j.contains("factors") &&
               j.at("factors").is_array() && j.contains("gauge") && j.at("gauge").is_string();
    }
    if (kind == "verdict") {
        return has_bool(j, "valid") && j.contains("kind") && j.at("kind").is_string() &&
               j.contains("violations") && j.at("violations").is_array();
    }
    return false;
}

}  // namespace qhc
