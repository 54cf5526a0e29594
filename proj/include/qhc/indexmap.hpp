#pragma once

#include <cstdint>
#include <vector>

#include "qhc/errors.hpp"

namespace qhc {

// Multi-index (j1,...,jl) with 1-based components, ji in 1..ni.
using MultiIndex = std::vector<int>;

// An ordered factorization N = n1*n2*...*nl with every factor >= 2.
class DimensionFactorization {
public:
    explicit DimensionFactorization(std::vector<int> factors);

    const std::vector<int>& factors() const { return factors_; }
    int factor(int p) const { return factors_[static_cast<std::size_t>(p)]; }
    int rank() const { return static_cast<int>(factors_.size()); }
    std::int64_t total() const { return total_; }

    bool operator==(const DimensionFactorization& other) const {
        return factors_ == other.factors_;
    }

private:
    std::vector<int> factors_;
    std::int64_t total_;
};

enum class Convention { RowMajor, ColMajor, Explicit };

// Invertible map between the linear index s in 1..N and multi-indices
// (j1,...,jl).  RowMajor varies the last component fastest, ColMajor the
// first; Explicit maps are given by a full table of N multi-indices.
class IndexMap {
public:
    IndexMap(DimensionFactorization factorization, Convention convention);
    IndexMap(DimensionFactorization factorization, std::vector<MultiIndex> table);

    const DimensionFactorization& factorization() const { return dims_; }
    Convention convention() const { return convention_; }
    std::int64_t total() const { return dims_.total(); }
    int rank() const { return dims_.rank(); }

    // Explicit maps only; empty otherwise.
    const std::vector<MultiIndex>& table() const { return table_; }

    MultiIndex decode(std::int64_t s) const;
    std::int64_t encode(const MultiIndex& idx) const;

private:
    void check_components(const MultiIndex& idx) const;

    DimensionFactorization dims_;
    Convention convention_;
    std::vector<MultiIndex> table_;     // decode table, Explicit only
    std::vector<std::int64_t> inverse_; // row-major position -> s, Explicit only
};

// All ordered tuples (n1,...,nparts), each factor >= 2, with product N,
// in lexicographic order.  Empty when no such tuple exists (e.g. prime N
// with parts >= 2).
std::vector<DimensionFactorization> enumerate_factorizations(std::int64_t n, int parts);

}  // namespace qhc
