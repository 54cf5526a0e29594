#pragma once

#include <vector>

#include "qhc/indexmap.hpp"

namespace qhc {

// Probability distribution p_s over s = 1..N: nonnegative and normalized.
// Entries in [-1e-12, 0) from upstream arithmetic are clamped to zero at
// construction; anything more negative fails validation.
class ProbabilityState {
public:
    explicit ProbabilityState(std::vector<double> probs);

    int size() const { return static_cast<int>(probs_.size()); }
    double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

// Real-valued observable F(s) on the same index set as the state.
class ClassicalObservable {
public:
    explicit ClassicalObservable(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

// One marginal distribution per artificial subsystem of an index map.
struct MarginalSet {
    std::vector<ProbabilityState> marginals;
};

struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    double slack = 0.0;  // rhs - lhs
};

// Joint-distribution addressing of a state through an index map.  Shares the
// state's storage; valid while both referents are alive.
class JointView {
public:
    JointView(const ProbabilityState& state, const IndexMap& map);

    double at(const MultiIndex& idx) const;
    const ProbabilityState& state() const { return *state_; }
    const IndexMap& map() const { return *map_; }

private:
    const ProbabilityState* state_;
    const IndexMap* map_;
};

double mean(const ProbabilityState& state, const ClassicalObservable& obs);

// k-th moment of the observable; k = 0 returns 1 by the empty-product
// convention.
double moment(const ProbabilityState& state, const ClassicalObservable& obs, int k);

// Shannon entropy in nats, with 0 ln 0 = 0.
double shannon_entropy(const ProbabilityState& state);

JointView joint_view(const ProbabilityState& state, const IndexMap& map);

MarginalSet marginals(const ProbabilityState& state, const IndexMap& map);

// Joint marginal over the subsystems in `keep` (1-based, strictly increasing),
// laid out row-major over the kept dimensions in subsystem order.
ProbabilityState subset_marginal(const ProbabilityState& state, const IndexMap& map,
                                 const std::vector<int>& keep);

// H(marginal 1) + H(marginal 2) - H(joint), bipartite maps only.
double mutual_information(const ProbabilityState& state, const IndexMap& map);

// H(p) <= H(marginal 1) + H(marginal 2); slack equals the mutual information.
InequalityReport check_subadditivity(const ProbabilityState& state, const IndexMap& map);

// H(p123) + H(p2) <= H(p12) + H(p23), tripartite maps only.
InequalityReport check_strong_subadditivity(const ProbabilityState& state,
                                            const IndexMap& map);

// Correlation function of per-subsystem factor observables:
// sum over s of p_s * prod_p factor_p(decode(s)_p).
double mean_as_correlation(const ProbabilityState& state, const IndexMap& map,
                           const std::vector<ClassicalObservable>& factors);

// Extends a per-subsystem observable to the full index set: the lifted value
// at s depends only on the p-th coordinate of decode(s).  `subsystem` is
// 1-based.
ClassicalObservable lift_factor(const IndexMap& map, int subsystem,
                                const ClassicalObservable& factor);

}  // namespace qhc
