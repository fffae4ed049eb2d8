#pragma once

// Lawrence liftings A^(r), generalized liftings with a coupling matrix B in
// place of the identity block, the tableau view of lifted kernel vectors and
// the type scans behind Markov and Graver complexity.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "toric/core.hpp"
#include "toric/graver.hpp"
#include "toric/lattice.hpp"
#include "toric/markov.hpp"
#include "toric/matrix.hpp"

namespace toric {

/// Block matrix with r diagonal copies of A over r horizontal copies of
/// `coupling`. Columns are block-major: all n columns of copy 1, then copy 2, ….
inline Configuration generalized_lift(const Configuration& config, const Configuration& coupling, std::size_t r) {
    if (r < 2) throw DomainError("lifting needs r >= 2");
    const IntMatrix& a = config.matrix();
    const IntMatrix& b = coupling.matrix();
    const std::size_t m = a.rows(), n = a.cols(), d = b.rows();
    if (b.cols() != n)
        throw DomainError("coupling has " + std::to_string(b.cols()) + " columns, expected " + std::to_string(n));
    for (Int x : b.data())
        if (x < 0) throw DomainError("coupling matrix must be nonnegative");
    IntMatrix out(r * m + d, r * n);
    for (std::size_t blk = 0; blk < r; ++blk)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < m; ++i) out(blk * m + i, blk * n + j) = a(i, j);
            for (std::size_t i = 0; i < d; ++i) out(r * m + i, blk * n + j) = b(i, j);
        }
    return Configuration(std::move(out));
}

/// The r-th Lawrence lifting: (rm+n)×rn.
inline Configuration lift(const Configuration& config, std::size_t r) {
    return generalized_lift(config, Configuration(IntMatrix::identity(config.cols())), r);
}

/// r×n view of a kernel vector of a lifting.
class Tableau {
public:
    Tableau(std::vector<IntVec> rows, std::size_t n) : rows_(std::move(rows)), n_(n) {
        for (const auto& row : rows_)
            if (row.size() != n_) throw DomainError("tableau row has wrong length");
    }

    std::size_t r() const { return rows_.size(); }
    std::size_t n() const { return n_; }
    const std::vector<IntVec>& rows() const { return rows_; }
    const IntVec& row(std::size_t i) const { return rows_[i]; }

    /// Number of nonzero rows.
    std::size_t type() const {
        return static_cast<std::size_t>(
            std::count_if(rows_.begin(), rows_.end(), [](const IntVec& v) { return !is_zero(v); }));
    }

    IntVec row_sum() const {
        IntVec s(n_, 0);
        for (const auto& row : rows_) s = add(s, row);
        return s;
    }

    IntVec flatten() const {
        IntVec flat;
        flat.reserve(r() * n_);
        for (const auto& row : rows_) flat.insert(flat.end(), row.begin(), row.end());
        return flat;
    }

    bool operator==(const Tableau&) const = default;

private:
    std::vector<IntVec> rows_;
    std::size_t n_;
};

inline Tableau tableau_view(const IntVec& flat, std::size_t r, std::size_t n) {
    if (flat.size() != r * n)
        throw DomainError("flat vector has length " + std::to_string(flat.size()) + ", expected " +
                          std::to_string(r * n));
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < r; ++i)
        rows.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                          flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    return Tableau(std::move(rows), n);
}

inline IntVec flatten(const Tableau& t) { return t.flatten(); }

inline std::size_t type_of(const IntVec& flat, std::size_t n) { return tableau_view(flat, flat.size() / n, n).type(); }

struct ScanRow {
    std::size_t r = 0;
    std::size_t max_type = 0;
    std::size_t count = 0;
};

/// For r = 2..r_max: the largest type and the size of the universal Markov
/// basis of A^(r), computed from scratch by the brute-force engines.
inline std::vector<ScanRow> markov_complexity_scan(const Configuration& config, std::size_t r_max,
                                                   const GraverOptions& opts = {}) {
    if (r_max < 2) throw DomainError("scan needs r_max >= 2");
    if (!config.nonneg_pointed()) throw DomainError("scan needs a nonnegative matrix without zero columns");
    std::vector<ScanRow> rows;
    for (std::size_t r = 2; r <= r_max; ++r) {
        MarkovBasis m = universal_markov_basis(lift(config, r), opts);
        ScanRow row{r, 0, m.size()};
        for (const auto& e : m.elements) row.max_type = std::max(row.max_type, type_of(e, config.cols()));
        rows.push_back(row);
    }
    return rows;
}

/// Same scan over Graver bases of the liftings.
inline std::vector<ScanRow> graver_type_scan(const Configuration& config, std::size_t r_max,
                                             const GraverOptions& opts = {}) {
    if (r_max < 2) throw DomainError("scan needs r_max >= 2");
    std::vector<ScanRow> rows;
    for (std::size_t r = 2; r <= r_max; ++r) {
        GraverBasis g = graver_basis(lift(config, r), opts);
        ScanRow row{r, 0, g.size()};
        for (const auto& e : g.elements) row.max_type = std::max(row.max_type, type_of(e, config.cols()));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace toric
