#pragma once

// Configurations, their integer kernels, A-degrees and fibers.

#include <cstddef>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "toric/core.hpp"
#include "toric/matrix.hpp"

namespace toric {

namespace detail {

// Column-style unimodular elimination on [A; I]. Columns whose A-part
// vanishes at the end carry a Z-basis of ker(A) in their I-part.
inline std::vector<IntVec> integer_kernel(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<IntVec> cols(n, IntVec(m + n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) cols[j][i] = a(i, j);
        cols[j][m + j] = 1;
    }
    auto axpy = [](IntVec& y, Int q, const IntVec& x) {
        for (std::size_t k = 0; k < y.size(); ++k)
            if (x[k] != 0) y[k] = checked_sub(y[k], checked_mul(q, x[k]));
    };
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < m && pivot < n; ++i) {
        for (;;) {
            // smallest nonzero |entry| in row i moves to the pivot column
            std::size_t best = n;
            for (std::size_t j = pivot; j < n; ++j) {
                if (cols[j][i] == 0) continue;
                if (best == n || checked_abs(cols[j][i]) < checked_abs(cols[best][i])) best = j;
            }
            if (best == n) break;
            std::swap(cols[pivot], cols[best]);
            bool done = true;
            const Int p = cols[pivot][i];
            for (std::size_t j = pivot + 1; j < n; ++j) {
                if (cols[j][i] == 0) continue;
                // rounded quotient keeps the remainder (and the entries) small
                Int q = floor_div(checked_add(checked_mul(2, cols[j][i]), checked_abs(p)), checked_mul(2, checked_abs(p)));
                if (p < 0) q = -q;
                axpy(cols[j], q, cols[pivot]);
                if (cols[j][i] != 0) done = false;
            }
            if (done) {
                ++pivot;
                break;
            }
        }
    }
    std::vector<IntVec> basis;
    for (std::size_t j = pivot; j < n; ++j)
        basis.emplace_back(cols[j].begin() + static_cast<std::ptrdiff_t>(m), cols[j].end());

    // pairwise size reduction: a unimodular change of basis, never changes the span
    for (bool improved = true; improved;) {
        improved = false;
        for (std::size_t x = 0; x < basis.size(); ++x)
            for (std::size_t y = 0; y < basis.size(); ++y) {
                if (x == y) continue;
                for (Int s : {Int{1}, Int{-1}}) {
                    IntVec cand = add(basis[x], scale(s, basis[y]));
                    if (norm1(cand) < norm1(basis[x])) {
                        basis[x] = std::move(cand);
                        improved = true;
                    }
                }
            }
    }
    for (auto& v : basis) v = canonicalize(v);
    sort_graded_lex(basis);
    return basis;
}

}  // namespace detail

/// An integer matrix whose columns define the lattice ker_Z(A).
/// Immutable; the kernel basis is computed once on first use and shared by copies.
class Configuration {
public:
    Configuration() : cache_(std::make_shared<Cache>()) {}
    explicit Configuration(IntMatrix matrix) : matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {}

    /// 1×n configuration (n_1 … n_n).
    static Configuration row(const IntVec& entries) {
        return Configuration(IntMatrix::from_rows({entries}, entries.size()));
    }

    const IntMatrix& matrix() const { return matrix_; }
    std::size_t rows() const { return matrix_.rows(); }
    std::size_t cols() const { return matrix_.cols(); }

    /// All entries nonnegative and no zero column: every fiber is finite.
    bool nonneg_pointed() const {
        for (std::size_t j = 0; j < cols(); ++j) {
            bool nonzero = false;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (matrix_(i, j) < 0) return false;
                if (matrix_(i, j) != 0) nonzero = true;
            }
            if (!nonzero) return false;
        }
        return true;
    }

    const std::vector<IntVec>& kernel_basis() const {
        std::call_once(cache_->once, [this] {
            if (matrix_.cols() == 0) throw DomainError("kernel of an empty matrix");
            cache_->basis = detail::integer_kernel(matrix_);
        });
        return cache_->basis;
    }

    bool in_kernel(const IntVec& u) const {
        if (u.size() != cols()) return false;
        return is_zero(matrix_ * u);
    }

    void require_kernel(const IntVec& u) const {
        if (u.size() != cols())
            throw DomainError("vector " + to_string(u) + " has length " + std::to_string(u.size()) +
                              ", expected " + std::to_string(cols()));
        if (!in_kernel(u)) throw DomainError("vector " + to_string(u) + " is not in the kernel");
    }

    bool operator==(const Configuration& o) const { return matrix_ == o.matrix_; }

private:
    struct Cache {
        std::once_flag once;
        std::vector<IntVec> basis;
    };
    IntMatrix matrix_;
    std::shared_ptr<Cache> cache_;
};

inline std::vector<IntVec> kernel_basis(const Configuration& config) { return config.kernel_basis(); }

/// A-degree of a kernel vector: A·u+ (equal to A·u-).
inline IntVec a_degree(const Configuration& config, const IntVec& u) {
    config.require_kernel(u);
    return config.matrix() * pos_part(u);
}

struct Fiber {
    Configuration config;
    IntVec degree;
    std::vector<IntVec> points;  // graded-lex sorted

    std::size_t index_of(const IntVec& t) const {
        auto it = std::lower_bound(points.begin(), points.end(), t, GradedLex{});
        if (it == points.end() || *it != t) return points.size();
        return static_cast<std::size_t>(it - points.begin());
    }
};

inline constexpr std::size_t kDefaultMaxFiberPoints = 10'000'000;

/// All t in N^n with A·t = degree, by depth-first search with per-coordinate bounds.
inline Fiber fiber(const Configuration& config, const IntVec& degree,
                   std::size_t max_points = kDefaultMaxFiberPoints) {
    if (!config.nonneg_pointed())
        throw DomainError("fiber enumeration needs a nonnegative matrix without zero columns");
    const IntMatrix& a = config.matrix();
    const std::size_t m = a.rows(), n = a.cols();
    if (degree.size() != m) throw DomainError("degree has wrong length");

    Fiber f{config, degree, {}};
    for (Int b : degree)
        if (b < 0) return f;

    // rows still reachable by columns j..n-1
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(m, 0));
    for (std::size_t j = n; j-- > 0;)
        for (std::size_t i = 0; i < m; ++i) reach[j][i] = reach[j + 1][i] || a(i, j) > 0;

    IntVec residual = degree;
    IntVec t(n, 0);
    auto dfs = [&](auto&& self, std::size_t j) -> void {
        for (std::size_t i = 0; i < m; ++i)
            if (residual[i] > 0 && !reach[j][i]) return;
        if (j == n) {
            f.points.push_back(t);
            if (f.points.size() > max_points) throw ResourceLimit("fiber exceeds point cap");
            return;
        }
        Int bound = -1;
        for (std::size_t i = 0; i < m; ++i) {
            if (a(i, j) <= 0) continue;
            Int b = residual[i] / a(i, j);
            if (bound < 0 || b < bound) bound = b;
        }
        for (Int x = 0; x <= bound; ++x) {
            t[j] = x;
            if (x > 0)
                for (std::size_t i = 0; i < m; ++i) residual[i] -= a(i, j);
            self(self, j + 1);
        }
        for (std::size_t i = 0; i < m; ++i) residual[i] += bound * a(i, j);
        t[j] = 0;
    };
    dfs(dfs, 0);
    sort_graded_lex(f.points);
    return f;
}

}  // namespace toric
