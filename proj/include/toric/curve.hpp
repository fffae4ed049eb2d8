#pragma once

// Monomial curves {n1, n2, n3}: Herzog data, complete-intersection
// classification, closed-form Markov bases of A and of its Lawrence
// liftings, Graver-complexity bounds and the fan decomposition of kernel
// vectors. Every closed form here has a brute-force counterpart elsewhere in
// the library and the two are compared by the test suites and `--verify`.

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/core.hpp"
#include "toric/graver.hpp"
#include "toric/lattice.hpp"
#include "toric/lawrence.hpp"
#include "toric/markov.hpp"

namespace toric {

class Curve {
public:
    Curve(Int n1, Int n2, Int n3) : n_{n1, n2, n3} {
        if (n1 <= 0 || n2 <= 0 || n3 <= 0) throw DomainError("curve entries must be positive");
        if (std::gcd(std::gcd(n1, n2), n3) != 1)
            throw DomainError("curve entries must have gcd 1: {" + std::to_string(n1) + "," + std::to_string(n2) +
                              "," + std::to_string(n3) + "}");
    }

    Int operator[](std::size_t i) const { return n_[i]; }
    const std::array<Int, 3>& entries() const { return n_; }
    Configuration config() const { return Configuration::row({n_[0], n_[1], n_[2]}); }
    std::string to_string() const {
        return "{" + std::to_string(n_[0]) + "," + std::to_string(n_[1]) + "," + std::to_string(n_[2]) + "}";
    }

    bool operator==(const Curve&) const = default;

private:
    std::array<Int, 3> n_;
};

/// c_i·n_i = r[i][j]·n_j + r[i][k]·n_k with c_i minimal positive.
struct HerzogData {
    Curve curve;
    std::array<Int, 3> c{};
    /// chosen representation; r[i][i] = 0
    std::array<std::array<Int, 3>, 3> r{};
    /// every nonnegative representation of c_i·n_i, as (r_ij, r_ik) with j < k
    std::array<std::vector<std::pair<Int, Int>>, 3> all_reps;
    bool complete_intersection = false;
    /// CI only: the pair {i, j} with c_i·n_i = c_j·n_j (0-based, i < j)
    std::pair<std::size_t, std::size_t> critical{0, 0};

    /// NonCI: u1, u2, u3. CI: {u1, u2} with u2 the critical vector and u1 the
    /// representation vector of the free index, both in original coordinates.
    std::vector<IntVec> u;

    std::size_t free_index() const { return 3 - critical.first - critical.second; }
    std::string classification() const { return complete_intersection ? "complete_intersection" : "not_complete_intersection"; }
};

namespace detail {

inline std::array<std::size_t, 2> others(std::size_t i) {
    if (i == 0) return {1, 2};
    if (i == 1) return {0, 2};
    return {0, 1};
}

// Cyclic order starting at the free index: (k, k+1, k+2) mod 3.
inline std::array<std::size_t, 3> rotation(std::size_t k) { return {k, (k + 1) % 3, (k + 2) % 3}; }

inline IntVec unrotate(const IntVec& v, const std::array<std::size_t, 3>& p) {
    IntVec out(3);
    for (std::size_t i = 0; i < 3; ++i) out[p[i]] = v[i];
    return out;
}

// Coordinates (a, b) of v in the basis (e1, e2), if integral.
inline std::optional<std::pair<Int, Int>> coordinates(const IntVec& v, const IntVec& e1, const IntVec& e2) {
    for (std::size_t p = 0; p < v.size(); ++p)
        for (std::size_t q = p + 1; q < v.size(); ++q) {
            Int det = checked_sub(checked_mul(e1[p], e2[q]), checked_mul(e1[q], e2[p]));
            if (det == 0) continue;
            Int an = checked_sub(checked_mul(v[p], e2[q]), checked_mul(v[q], e2[p]));
            Int bn = checked_sub(checked_mul(e1[p], v[q]), checked_mul(e1[q], v[p]));
            if (an % det != 0 || bn % det != 0) return std::nullopt;
            Int a = an / det, b = bn / det;
            if (add(scale(a, e1), scale(b, e2)) != v) return std::nullopt;
            return std::pair{a, b};
        }
    return std::nullopt;
}

}  // namespace detail

inline HerzogData herzog_data(const Curve& curve) {
    HerzogData h{curve, {}, {}, {}, false, {0, 0}, {}};
    for (std::size_t i = 0; i < 3; ++i) {
        auto [j, k] = detail::others(i);
        for (Int c = 1;; ++c) {
            const Int target = checked_mul(c, curve[i]);
            for (Int a = 0; a * curve[j] <= target; ++a) {
                Int rest = target - a * curve[j];
                if (rest % curve[k] == 0) h.all_reps[i].emplace_back(a, rest / curve[k]);
            }
            if (!h.all_reps[i].empty()) {
                h.c[i] = c;
                break;
            }
        }
        // smallest coefficient on the lower of the two other indices
        h.r[i][j] = h.all_reps[i].front().first;
        h.r[i][k] = h.all_reps[i].front().second;
    }

    for (std::size_t i = 0; i < 3 && !h.complete_intersection; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (checked_mul(h.c[i], curve[i]) == checked_mul(h.c[j], curve[j])) {
                h.complete_intersection = true;
                h.critical = {i, j};
                break;
            }

    if (!h.complete_intersection) {
        for (std::size_t i = 0; i < 3; ++i) {
            auto [j, k] = detail::others(i);
            if (h.all_reps[i].size() != 1 || h.r[i][j] <= 0 || h.r[i][k] <= 0)
                throw ConsistencyError("curve " + curve.to_string() +
                                       " has no complete-intersection relation but a non-unique or non-positive "
                                       "representation of c_" + std::to_string(i + 1) + "·n_" + std::to_string(i + 1));
        }
        h.u = {{-h.c[0], h.r[0][1], h.r[0][2]}, {h.r[1][0], -h.c[1], h.r[1][2]}, {h.r[2][0], h.r[2][1], -h.c[2]}};
        if (!is_zero(add(add(h.u[0], h.u[1]), h.u[2])))
            throw ConsistencyError("u1 + u2 + u3 != 0 for curve " + curve.to_string());
    } else {
        const auto p = detail::rotation(h.free_index());
        const Int c1 = h.c[p[0]], c2 = h.c[p[1]], c3 = h.c[p[2]];
        // minimal coefficient on the rotated second coordinate
        Int r12 = -1, r13 = 0;
        const std::size_t j = detail::others(p[0])[0];
        for (auto [a, b] : h.all_reps[p[0]]) {
            Int on2 = (p[1] == j) ? a : b;
            Int on3 = (p[1] == j) ? b : a;
            if (r12 < 0 || on2 < r12) {
                r12 = on2;
                r13 = on3;
            }
        }
        h.u = {detail::unrotate({-c1, r12, r13}, p), detail::unrotate({0, -c2, c3}, p)};
    }
    return h;
}

struct CurveMarkov {
    std::vector<IntVec> universal;  // canonical-signed, sorted
    /// number of distinct minimal Markov bases
    Int minimal_count = 0;
};

/// Universal Markov basis of a monomial curve from its Herzog data. In the
/// complete-intersection case `rep` selects which representation of the free
/// index's c·n seeds the d-sweep (default: the stored, minimal one); the
/// resulting set does not depend on the choice.
inline CurveMarkov closed_form_markov(const HerzogData& h, std::optional<std::size_t> rep = std::nullopt) {
    CurveMarkov out;
    if (!h.complete_intersection) {
        out.universal = canonical_set(h.u);
        out.minimal_count = 1;
        return out;
    }
    const auto p = detail::rotation(h.free_index());
    const Int c1 = h.c[p[0]], c2 = h.c[p[1]], c3 = h.c[p[2]];
    const IntVec& u2 = h.u[1];
    IntVec u1 = h.u[0];
    if (rep) {
        const auto& reps = h.all_reps[p[0]];
        if (*rep >= reps.size()) throw DomainError("representation index out of range");
        const std::size_t j = detail::others(p[0])[0];
        IntVec rot{-c1, 0, 0};
        rot[p[1] == j ? 1 : 2] = reps[*rep].first;
        rot[p[1] == j ? 2 : 1] = reps[*rep].second;
        u1 = detail::unrotate(rot, p);
    }
    const Int r12 = u1[p[1]], r13 = u1[p[2]];
    const Int lo = -(r13 / c3), hi = r12 / c2;
    std::vector<IntVec> m{u2};
    for (Int d = lo; d <= hi; ++d) m.push_back(add(scale(d, u2), u1));
    out.universal = canonical_set(std::move(m));
    out.minimal_count = hi - lo + 1;
    return out;
}

inline CurveMarkov closed_form_markov(const Curve& curve) { return closed_form_markov(herzog_data(curve)); }

/// Theorem values: 3 when the toric ideal is not a complete intersection, 2 when it is.
inline Int markov_complexity(const Curve& curve) { return herzog_data(curve).complete_intersection ? 2 : 3; }

/// Universal Markov basis of A^(r) in closed form: type-2 tableaux (u, -u)
/// for u in G(A), plus (NonCI, r >= 3) type-3 tableaux whose nonzero rows
/// are a permutation of (u1, u2, u3). Flat, canonical-signed, sorted.
inline std::vector<IntVec> closed_form_lawrence_markov(const Curve& curve, std::size_t r,
                                                       const GraverOptions& opts = {}) {
    if (r < 2) throw DomainError("lifting needs r >= 2");
    const HerzogData h = herzog_data(curve);
    const GraverBasis g = graver_basis(curve.config(), opts);
    const std::size_t n = 3;
    std::vector<IntVec> out;
    auto place = [&](const std::vector<std::pair<std::size_t, IntVec>>& rows) {
        IntVec flat(r * n, 0);
        for (const auto& [i, row] : rows)
            for (std::size_t c = 0; c < n; ++c) flat[i * n + c] = row[c];
        out.push_back(canonicalize(flat));
    };
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (const auto& u : g.elements) place({{i, u}, {j, negate(u)}});
    if (!h.complete_intersection && r >= 3) {
        std::array<std::size_t, 3> perm{0, 1, 2};
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                for (std::size_t k = j + 1; k < r; ++k) {
                    perm = {0, 1, 2};
                    do {
                        place({{i, h.u[perm[0]]}, {j, h.u[perm[1]]}, {k, h.u[perm[2]]}});
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
    }
    out = canonical_set(std::move(out));
    const Int k = static_cast<Int>(g.size());
    const Int ri = static_cast<Int>(r);
    Int expected = k * binomial(ri, 2) + (h.complete_intersection ? 0 : 6 * binomial(ri, 3));
    if (static_cast<Int>(out.size()) != expected)
        throw ConsistencyError("closed-form Lawrence basis has " + std::to_string(out.size()) + " elements, expected " +
                               std::to_string(expected));
    return out;
}

/////////////////////////////////////////////////////////////////////////////
// Graver complexity bounds

/// The curve with pairwise gcds divided out.
inline Curve reduce(const Curve& curve) {
    const Int d12 = std::gcd(curve[0], curve[1]);
    const Int d13 = std::gcd(curve[0], curve[2]);
    const Int d23 = std::gcd(curve[1], curve[2]);
    return Curve(curve[0] / (d12 * d13), curve[1] / (d12 * d23), curve[2] / (d13 * d23));
}

/// n1/(d12·d13) + n2/(d12·d23) + n3/(d13·d23), a lower bound for g(A).
inline Int graver_lower_bound(const Curve& curve) {
    const Curve red = reduce(curve);
    return red[0] + red[1] + red[2];
}

struct HsBound {
    Int value = 0;
    IntVec witness;               // an element attaining the value, empty if none
    IntMatrix matrix;             // columns B·s for s in S(A)
    std::vector<IntVec> graver;   // Graver basis of that matrix
};

/// Maximum 1-norm in the Graver basis of the matrix with columns B·s,
/// s ranging over the indispensable Markov moves of the curve.
inline HsBound hs_lower_bound(const Curve& curve, const Configuration& coupling, const GraverOptions& opts = {}) {
    if (coupling.cols() != 3)
        throw DomainError("coupling matrix must have 3 columns, found " + std::to_string(coupling.cols()));
    // NonCI: S(A) = {u1, u2, u3}, taken in that order; otherwise sorted S(A)
    MarkovBasis s = indispensable_subset(curve.config(), opts);
    std::vector<IntVec> gens = s.elements;
    const HerzogData h = herzog_data(curve);
    if (!h.complete_intersection) {
        if (canonical_set(h.u) != s.elements)
            throw ConsistencyError("indispensable subset of " + curve.to_string() + " differs from {u1, u2, u3}");
        gens = h.u;
    }
    std::vector<IntVec> cols;
    for (const auto& v : gens) cols.push_back(coupling.matrix() * v);
    HsBound out;
    out.matrix = IntMatrix::from_columns(cols, coupling.rows());
    GraverBasis g = graver_basis(Configuration(out.matrix), opts);
    out.graver = g.elements;
    for (const auto& e : g.elements)
        if (norm1(e) > out.value) {
            out.value = norm1(e);
            out.witness = e;
        }
    return out;
}

/////////////////////////////////////////////////////////////////////////////
// fan decomposition

struct FanPosition {
    enum class Kind { ray, cone, split };
    Kind kind = Kind::ray;
    /// ray: v = alpha·(sign·u_i). cone: v = alpha·(-u_i) + beta·u_j.
    /// split (complete intersection): v = alpha·(-u1) + beta·(sign·u2) or
    /// beta·(sign·u2) + alpha·u1; u2_first tells which.
    Int alpha = 0, beta = 0;
    int sign = 1;
    std::size_t i = 0, j = 0;  // 1-based indices into HerzogData::u
    bool u2_first = false;
    std::vector<IntVec> summands;  // in order
    bool semiconformal = false;
    bool strongly_semiconformal = false;
};

inline std::string to_string(FanPosition::Kind k) {
    switch (k) {
        case FanPosition::Kind::ray: return "ray";
        case FanPosition::Kind::cone: return "cone";
        case FanPosition::Kind::split: return "split";
    }
    return "?";
}

inline FanPosition fan_position(const HerzogData& h, const IntVec& v) {
    Configuration config = h.curve.config();
    config.require_kernel(v);
    if (is_zero(v)) throw DomainError("fan position of the zero vector");
    const IntVec& u1 = h.u[0];
    const IntVec& u2 = h.u[1];
    auto ab = detail::coordinates(v, u1, u2);
    if (!ab) throw ConsistencyError("kernel vector " + to_string(v) + " is not an integer combination of u1, u2");
    const auto [a, b] = *ab;
    FanPosition f;
    auto finish = [&](std::vector<IntVec> parts) {
        f.summands = std::move(parts);
        if (f.summands.size() == 2) {
            f.semiconformal = is_semiconformal_sum(v, f.summands[0], f.summands[1]);
            f.strongly_semiconformal = is_proper(f.summands) && is_strongly_semiconformal(v, f.summands);
        }
    };

    if (h.complete_intersection) {
        f.kind = FanPosition::Kind::split;
        f.beta = b < 0 ? -b : b;
        f.sign = b < 0 ? -1 : 1;
        IntVec part2 = scale(b, u2);
        if (a <= 0) {
            f.alpha = -a;
            f.u2_first = false;
            finish({scale(f.alpha, negate(u1)), part2});
        } else {
            f.alpha = a;
            f.u2_first = true;
            finish({part2, scale(f.alpha, u1)});
        }
        if (!f.semiconformal)
            throw ConsistencyError("complete-intersection split of " + to_string(v) + " is not semiconformal");
        return f;
    }

    // rays in (u1, u2)-coordinates: u1=(1,0), u2=(0,1), u3=(-1,-1)
    if (b == 0 || a == 0 || a == b) {
        f.kind = FanPosition::Kind::ray;
        if (b == 0) {
            f.i = 1;
            f.alpha = a > 0 ? a : -a;
            f.sign = a > 0 ? 1 : -1;
        } else if (a == 0) {
            f.i = 2;
            f.alpha = b > 0 ? b : -b;
            f.sign = b > 0 ? 1 : -1;
        } else {
            f.i = 3;
            f.alpha = a > 0 ? a : -a;
            f.sign = a > 0 ? -1 : 1;
        }
        finish({v});
        return f;
    }
    const std::array<std::pair<Int, Int>, 3> coord{{{1, 0}, {0, 1}, {-1, -1}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            // alpha·(-e_i) + beta·e_j = (a, b)
            const Int x1 = -coord[i].first, y1 = -coord[i].second;
            const Int x2 = coord[j].first, y2 = coord[j].second;
            const Int det = x1 * y2 - x2 * y1;
            const Int an = a * y2 - x2 * b, bn = x1 * b - a * y1;
            if (an % det != 0 || bn % det != 0) continue;
            const Int alpha = an / det, beta = bn / det;
            if (alpha <= 0 || beta <= 0) continue;
            f.kind = FanPosition::Kind::cone;
            f.alpha = alpha;
            f.beta = beta;
            f.i = i + 1;
            f.j = j + 1;
            finish({scale(alpha, negate(h.u[i])), scale(beta, h.u[j])});
            return f;
        }
    throw ConsistencyError("no fan cone contains " + to_string(v));
}

inline FanPosition fan_position(const Curve& curve, const IntVec& v) { return fan_position(herzog_data(curve), v); }

}  // namespace toric
