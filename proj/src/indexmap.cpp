#include "qhc/indexmap.hpp"

#include <string>

namespace qhc {

DimensionFactorization::DimensionFactorization(std::vector<int> factors)
    : factors_(std::move(factors)), total_(1) {
    if (factors_.empty()) {
        throw ValidationError("factorization must have at least one factor");
    }
    for (int n : factors_) {
        if (n < 2) {
            throw ValidationError("factorization: every factor must be >= 2, got " +
                                  std::to_string(n));
        }
        total_ *= n;
    }
}

IndexMap::IndexMap(DimensionFactorization factorization, Convention convention)
    : dims_(std::move(factorization)), convention_(convention) {
    if (convention_ == Convention::Explicit) {
        throw ArgumentError("explicit maps require a table; use the table constructor");
    }
}

IndexMap::IndexMap(DimensionFactorization factorization, std::vector<MultiIndex> table)
    : dims_(std::move(factorization)), convention_(Convention::Explicit),
      table_(std::move(table)) {
    const std::int64_t n = dims_.total();
    if (static_cast<std::int64_t>(table_.size()) != n) {
        throw ValidationError("explicit table must list exactly N = " + std::to_string(n) +
                              " multi-indices, got " + std::to_string(table_.size()));
    }
    // The inverse is stored densely at the row-major position of each
    // multi-index; a collision means the table is not a bijection.
    inverse_.assign(static_cast<std::size_t>(n), 0);
    for (std::int64_t s = 1; s <= n; ++s) {
        const MultiIndex& idx = table_[static_cast<std::size_t>(s - 1)];
        check_components(idx);
        std::int64_t pos = 0;
        for (int p = 0; p < dims_.rank(); ++p) {
            pos = pos * dims_.factor(p) + (idx[static_cast<std::size_t>(p)] - 1);
        }
        if (inverse_[static_cast<std::size_t>(pos)] != 0) {
            throw ValidationError("explicit table repeats a multi-index; map is not a bijection");
        }
        inverse_[static_cast<std::size_t>(pos)] = s;
    }
}

void IndexMap::check_components(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != dims_.rank()) {
        throw DimensionError("multi-index has " + std::to_string(idx.size()) +
                             " components, map expects " + std::to_string(dims_.rank()));
    }
    for (int p = 0; p < dims_.rank(); ++p) {
        const int j = idx[static_cast<std::size_t>(p)];
        if (j < 1 || j > dims_.factor(p)) {
            throw RangeError("multi-index component " + std::to_string(p + 1) + " = " +
                             std::to_string(j) + " outside 1.." +
                             std::to_string(dims_.factor(p)));
        }
    }
}

MultiIndex IndexMap::decode(std::int64_t s) const {
    if (s < 1 || s > total()) {
        throw RangeError("linear index " + std::to_string(s) + " outside 1.." +
                         std::to_string(total()));
    }
    if (convention_ == Convention::Explicit) {
        return table_[static_cast<std::size_t>(s - 1)];
    }
    const int l = dims_.rank();
    MultiIndex idx(static_cast<std::size_t>(l));
    std::int64_t r = s - 1;
    if (convention_ == Convention::RowMajor) {
        // last component varies fastest
        for (int p = l - 1; p >= 0; --p) {
            idx[static_cast<std::size_t>(p)] = static_cast<int>(r % dims_.factor(p)) + 1;
            r /= dims_.factor(p);
        }
    } else {
        // first component varies fastest
        for (int p = 0; p < l; ++p) {
            idx[static_cast<std::size_t>(p)] = static_cast<int>(r % dims_.factor(p)) + 1;
            r /= dims_.factor(p);
        }
    }
    return idx;
}

std::int64_t IndexMap::encode(const MultiIndex& idx) const {
    check_components(idx);
    const int l = dims_.rank();
    if (convention_ == Convention::Explicit) {
        std::int64_t pos = 0;
        for (int p = 0; p < l; ++p) {
            pos = pos * dims_.factor(p) + (idx[static_cast<std::size_t>(p)] - 1);
        }
        return inverse_[static_cast<std::size_t>(pos)];
    }
    std::int64_t s = 0;
    if (convention_ == Convention::RowMajor) {
        for (int p = 0; p < l; ++p) {
            s = s * dims_.factor(p) + (idx[static_cast<std::size_t>(p)] - 1);
        }
    } else {
        for (int p = l - 1; p >= 0; --p) {
            s = s * dims_.factor(p) + (idx[static_cast<std::size_t>(p)] - 1);
        }
    }
    return s + 1;
}

namespace {

void enumerate_rec(std::int64_t n, int parts, std::vector<int>& prefix,
                   std::vector<DimensionFactorization>& out) {
    if (parts == 1) {
        if (n >= 2 && n <= INT32_MAX) {
            std::vector<int> full = prefix;
            full.push_back(static_cast<int>(n));
            out.emplace_back(std::move(full));
        }
        return;
    }
    for (std::int64_t d = 2; d * 2 <= n; ++d) {
        if (n % d == 0) {
            prefix.push_back(static_cast<int>(d));
            enumerate_rec(n / d, parts - 1, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<DimensionFactorization> enumerate_factorizations(std::int64_t n, int parts) {
    if (parts < 1) {
        throw ArgumentError("number of parts must be >= 1, got " + std::to_string(parts));
    }
    std::vector<DimensionFactorization> out;
    std::vector<int> prefix;
    enumerate_rec(n, parts, prefix, out);
    return out;
}

}  // namespace qhc
