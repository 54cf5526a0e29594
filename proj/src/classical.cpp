#include "qhc/classical.hpp"

#include <cmath>
#include <string>

namespace qhc {

namespace {

constexpr double kNegativeClamp = -1e-12;
constexpr double kNormTol = 1e-9;
constexpr double kHoldsTol = 1e-10;

void require_same_length(int a, int b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": length mismatch, " + std::to_string(a) +
                             " vs " + std::to_string(b));
    }
}

void require_map_matches(const ProbabilityState& state, const IndexMap& map) {
    if (map.total() != state.size()) {
        throw DimensionError("index map covers " + std::to_string(map.total()) +
                             " indices, state has " + std::to_string(state.size()));
    }
}

double entropy_of(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log(x);
    }
    return h;
}

}  // namespace

ProbabilityState::ProbabilityState(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw ValidationError("probability state must be nonempty");
    double sum = 0.0;
    for (double& x : probs_) {
        if (!std::isfinite(x)) throw ValidationError("probability state: non-finite entry");
        if (x < 0.0) {
            if (x < kNegativeClamp) {
                throw ValidationError("probability state: negative entry " + std::to_string(x));
            }
            x = 0.0;
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kNormTol) {
        throw ValidationError("probability state: sum deviates from 1 by " +
                              std::to_string(sum - 1.0));
    }
}

ClassicalObservable::ClassicalObservable(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.empty()) throw ValidationError("observable must be nonempty");
    for (double x : values_) {
        if (!std::isfinite(x)) throw ValidationError("observable: non-finite entry");
    }
}

JointView::JointView(const ProbabilityState& state, const IndexMap& map)
    : state_(&state), map_(&map) {
    require_map_matches(state, map);
}

double JointView::at(const MultiIndex& idx) const {
    return (*state_)[static_cast<int>(map_->encode(idx) - 1)];
}

double mean(const ProbabilityState& state, const ClassicalObservable& obs) {
    require_same_length(state.size(), obs.size(), "mean");
    double m = 0.0;
    for (int s = 0; s < state.size(); ++s) m += state[s] * obs[s];
    return m;
}

double moment(const ProbabilityState& state, const ClassicalObservable& obs, int k) {
    require_same_length(state.size(), obs.size(), "moment");
    if (k < 0) throw ArgumentError("moment order must be >= 0");
    if (k == 0) return 1.0;
    double m = 0.0;
    for (int s = 0; s < state.size(); ++s) m += state[s] * std::pow(obs[s], k);
    return m;
}

double shannon_entropy(const ProbabilityState& state) { return entropy_of(state.probs()); }

JointView joint_view(const ProbabilityState& state, const IndexMap& map) {
    return JointView(state, map);
}

MarginalSet marginals(const ProbabilityState& state, const IndexMap& map) {
    require_map_matches(state, map);
    const int l = map.rank();
    std::vector<std::vector<double>> sums(static_cast<std::size_t>(l));
    for (int p = 0; p < l; ++p) {
        sums[static_cast<std::size_t>(p)].assign(
            static_cast<std::size_t>(map.factorization().factor(p)), 0.0);
    }
    for (std::int64_t s = 1; s <= map.total(); ++s) {
        const MultiIndex idx = map.decode(s);
        const double p = state[static_cast<int>(s - 1)];
        for (int q = 0; q < l; ++q) {
            sums[static_cast<std::size_t>(q)][static_cast<std::size_t>(
                idx[static_cast<std::size_t>(q)] - 1)] += p;
        }
    }
    MarginalSet out;
    out.marginals.reserve(static_cast<std::size_t>(l));
    for (auto& v : sums) out.marginals.emplace_back(std::move(v));
    return out;
}

ProbabilityState subset_marginal(const ProbabilityState& state, const IndexMap& map,
                                 const std::vector<int>& keep) {
    require_map_matches(state, map);
    if (keep.empty()) throw ArgumentError("subset marginal: keep set is empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 1 || keep[i] > map.rank()) {
            throw RangeError("subset marginal: subsystem " + std::to_string(keep[i]) +
                             " outside 1.." + std::to_string(map.rank()));
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw ArgumentError("subset marginal: keep set must be strictly increasing");
        }
    }

    std::int64_t kept_total = 1;
    for (int p : keep) kept_total *= map.factorization().factor(p - 1);

    std::vector<double> out(static_cast<std::size_t>(kept_total), 0.0);
    for (std::int64_t s = 1; s <= map.total(); ++s) {
        const MultiIndex idx = map.decode(s);
        std::int64_t pos = 0;
        for (int p : keep) {
            pos = pos * map.factorization().factor(p - 1) +
                  (idx[static_cast<std::size_t>(p - 1)] - 1);
        }
        out[static_cast<std::size_t>(pos)] += state[static_cast<int>(s - 1)];
    }
    return ProbabilityState(std::move(out));
}

double mutual_information(const ProbabilityState& state, const IndexMap& map) {
    if (map.rank() != 2) {
        throw UnsupportedPartitionError("mutual information requires a bipartite map, got " +
                                        std::to_string(map.rank()) + " parts");
    }
    const MarginalSet m = marginals(state, map);
    return shannon_entropy(m.marginals[0]) + shannon_entropy(m.marginals[1]) -
           shannon_entropy(state);
}

InequalityReport check_subadditivity(const ProbabilityState& state, const IndexMap& map) {
    if (map.rank() != 2) {
        throw UnsupportedPartitionError("subadditivity requires a bipartite map, got " +
                                        std::to_string(map.rank()) + " parts");
    }
    const MarginalSet m = marginals(state, map);
    InequalityReport r;
    r.lhs = shannon_entropy(state);
    r.rhs = shannon_entropy(m.marginals[0]) + shannon_entropy(m.marginals[1]);
    r.slack = r.rhs - r.lhs;
    r.holds = r.lhs <= r.rhs + kHoldsTol;
    return r;
}

InequalityReport check_strong_subadditivity(const ProbabilityState& state,
                                            const IndexMap& map) {
    if (map.rank() != 3) {
        throw UnsupportedPartitionError(
            "strong subadditivity requires a tripartite map, got " +
            std::to_string(map.rank()) + " parts");
    }
    const double h123 = shannon_entropy(state);
    const double h2 = shannon_entropy(subset_marginal(state, map, {2}));
    const double h12 = shannon_entropy(subset_marginal(state, map, {1, 2}));
    const double h23 = shannon_entropy(subset_marginal(state, map, {2, 3}));
    InequalityReport r;
    r.lhs = h123 + h2;
    r.rhs = h12 + h23;
    r.slack = r.rhs - r.lhs;
    r.holds = r.lhs <= r.rhs + kHoldsTol;
    return r;
}

double mean_as_correlation(const ProbabilityState& state, const IndexMap& map,
                           const std::vector<ClassicalObservable>& factors) {
    require_map_matches(state, map);
    if (static_cast<int>(factors.size()) != map.rank()) {
        throw DimensionError("expected one factor per subsystem: " +
                             std::to_string(map.rank()) + " needed, " +
                             std::to_string(factors.size()) + " given");
    }
    for (int p = 0; p < map.rank(); ++p) {
        require_same_length(factors[static_cast<std::size_t>(p)].size(),
                            map.factorization().factor(p), "correlation factor");
    }
    double corr = 0.0;
    for (std::int64_t s = 1; s <= map.total(); ++s) {
        const MultiIndex idx = map.decode(s);
        double prod = 1.0;
        for (int p = 0; p < map.rank(); ++p) {
            prod *= factors[static_cast<std::size_t>(p)][idx[static_cast<std::size_t>(p)] - 1];
        }
        corr += prod * state[static_cast<int>(s - 1)];
    }
    return corr;
}

ClassicalObservable lift_factor(const IndexMap& map, int subsystem,
                                const ClassicalObservable& factor) {
    if (subsystem < 1 || subsystem > map.rank()) {
        throw RangeError("subsystem " + std::to_string(subsystem) + " outside 1.." +
                         std::to_string(map.rank()));
    }
    require_same_length(factor.size(), map.factorization().factor(subsystem - 1),
                        "lifted factor");
    std::vector<double> lifted(static_cast<std::size_t>(map.total()));
    for (std::int64_t s = 1; s <= map.total(); ++s) {
        const MultiIndex idx = map.decode(s);
        lifted[static_cast<std::size_t>(s - 1)] =
            factor[idx[static_cast<std::size_t>(subsystem - 1)] - 1];
    }
    return ClassicalObservable(std::move(lifted));
}

}  // namespace qhc
