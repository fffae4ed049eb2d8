#pragma once

// Fiber graphs and the three decomposition testers. Universal, indispensable
// and one canonical minimal Markov basis are all read off the fiber graphs
// of the Graver degrees.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "toric/core.hpp"
#include "toric/graver.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Fiber with edges between points of intersecting support (non-coprime monomials).
/// Edges are implicit: points sharing a positive coordinate are adjacent.
struct FiberGraph {
    Fiber fiber;
    /// component[i]: id of the component of point i; ids are numbered in
    /// order of their graded-lex-smallest point.
    std::vector<std::size_t> component;
    std::size_t num_components = 0;
    /// by_coordinate[c]: indices of points with a positive entry c.
    std::vector<std::vector<std::size_t>> by_coordinate;

    std::size_t size() const { return fiber.points.size(); }

    bool adjacent(std::size_t i, std::size_t j) const {
        return i != j && supports_intersect(fiber.points[i], fiber.points[j]);
    }

    /// Sorted neighbor indices of point i.
    std::vector<std::size_t> neighbors(std::size_t i) const {
        std::vector<std::size_t> out;
        const IntVec& t = fiber.points[i];
        for (std::size_t c = 0; c < t.size(); ++c)
            if (t[c] > 0)
                for (std::size_t j : by_coordinate[c])
                    if (j != i) out.push_back(j);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Materialized edge list {i < j}; quadratic in the fiber size.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j : neighbors(i))
                if (i < j) out.emplace_back(i, j);
        return out;
    }

    /// Graded-lex-smallest point of each component, by component id.
    std::vector<std::size_t> representatives() const {
        std::vector<std::size_t> rep(num_components, SIZE_MAX);
        for (std::size_t i = 0; i < size(); ++i)
            if (rep[component[i]] == SIZE_MAX) rep[component[i]] = i;
        return rep;
    }

    bool connected(const IntVec& a, const IntVec& b) const {
        return component[fiber.index_of(a)] == component[fiber.index_of(b)];
    }
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

inline FiberGraph fiber_graph(const Configuration& config, const IntVec& degree) {
    FiberGraph g{fiber(config, degree), {}, 0, {}};
    const auto& pts = g.fiber.points;
    const std::size_t p = pts.size();
    g.by_coordinate.assign(config.cols(), {});
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t c = 0; c < config.cols(); ++c)
            if (pts[i][c] > 0) g.by_coordinate[c].push_back(i);
    // all points sharing a coordinate form a clique
    detail::UnionFind uf(p);
    for (const auto& bucket : g.by_coordinate)
        for (std::size_t k = 1; k < bucket.size(); ++k) uf.unite(bucket[0], bucket[k]);
    g.component.assign(p, 0);
    std::map<std::size_t, std::size_t> ids;
    for (std::size_t i = 0; i < p; ++i) {
        auto [it, fresh] = ids.try_emplace(uf.find(i), ids.size());
        g.component[i] = it->second;
    }
    g.num_components = ids.size();
    return g;
}

/////////////////////////////////////////////////////////////////////////////
// decompositions

/// u = v +sc w: u = v + w, u+ >= v+ and u- >= w-.
inline bool is_semiconformal_sum(const IntVec& u, const IntVec& v, const IntVec& w) {
    return add(v, w) == u && dominates(pos_part(u), pos_part(v)) && dominates(neg_part(u), neg_part(w));
}

/// u = v +c w: u+ = v+ + w+ and u- = v- + w-.
inline bool is_conformal_sum(const IntVec& u, const IntVec& v, const IntVec& w) {
    return add(v, w) == u && pos_part(u) == add(pos_part(v), pos_part(w)) &&
           neg_part(u) == add(neg_part(v), neg_part(w));
}

/// Checks the strongly semiconformal chain conditions literally:
/// u = Σ u_i, l >= 2, u+ > u_1+ and u+ > (u_1 + … + u_{i-1}) + u_i+ for i >= 2,
/// where ">" is ">= componentwise and not equal".
inline bool is_strongly_semiconformal(const IntVec& u, const std::vector<IntVec>& parts) {
    if (parts.size() < 2) return false;
    IntVec sum(u.size(), 0);
    for (const auto& p : parts) sum = add(sum, p);
    if (sum != u) return false;
    const IntVec up = pos_part(u);
    IntVec partial(u.size(), 0);
    for (const auto& p : parts) {
        if (!strictly_dominates(up, add(partial, pos_part(p)))) return false;
        partial = add(partial, p);
    }
    return true;
}

inline bool is_proper(const std::vector<IntVec>& parts) {
    return std::none_of(parts.begin(), parts.end(), [](const IntVec& p) { return is_zero(p); });
}

namespace detail {

inline void require_move(const Configuration& config, const IntVec& u) {
    config.require_kernel(u);
    if (is_zero(u)) throw DomainError("the zero vector is not a move");
    if (!config.nonneg_pointed())
        throw DomainError("Markov computations need a nonnegative matrix without zero columns");
}

}  // namespace detail

/// u is in the universal Markov basis iff u+ and u- lie in different
/// components of the fiber graph of deg(u).
inline bool in_universal_markov(const Configuration& config, const IntVec& u) {
    detail::require_move(config, u);
    FiberGraph g = fiber_graph(config, a_degree(config, u));
    return !g.connected(pos_part(u), neg_part(u));
}

/// u is indispensable iff its fiber is exactly {u+, u-}.
inline bool in_indispensable(const Configuration& config, const IntVec& u) {
    detail::require_move(config, u);
    return fiber(config, a_degree(config, u)).points.size() == 2;
}

/// (u+ - t, t - u-) for the graded-lex-smallest fiber point t outside {u+, u-}.
inline std::optional<std::pair<IntVec, IntVec>> find_semiconformal_witness(const Configuration& config,
                                                                           const IntVec& u) {
    detail::require_move(config, u);
    const IntVec up = pos_part(u), um = neg_part(u);
    for (const auto& t : fiber(config, a_degree(config, u)).points) {
        if (t == up || t == um) continue;
        std::pair<IntVec, IntVec> vw{sub(up, t), sub(t, um)};
        if (!is_semiconformal_sum(u, vw.first, vw.second))
            throw ConsistencyError("fiber point did not give a semiconformal split of " + to_string(u));
        return vw;
    }
    return std::nullopt;
}

struct SscChain {
    std::vector<IntVec> parts;  // u_1 … u_l
    std::vector<IntVec> path;   // s_0 = u+, …, s_l = u-
    std::size_t length() const { return parts.size(); }
};

/// Shortest (then lexicographically smallest) fiber-graph path from u+ to
/// u-; its consecutive differences form a proper strongly semiconformal
/// decomposition of minimal length.
inline std::optional<SscChain> find_ssc_chain(const Configuration& config, const IntVec& u) {
    detail::require_move(config, u);
    FiberGraph g = fiber_graph(config, a_degree(config, u));
    const auto& pts = g.fiber.points;
    const std::size_t src = g.fiber.index_of(pos_part(u));
    const std::size_t dst = g.fiber.index_of(neg_part(u));
    if (g.component[src] != g.component[dst]) return std::nullopt;

    std::vector<std::size_t> dist(pts.size(), SIZE_MAX);
    std::queue<std::size_t> q;
    dist[dst] = 0;
    q.push(dst);
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop();
        for (std::size_t y : g.neighbors(x))
            if (dist[y] == SIZE_MAX) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    SscChain chain;
    std::size_t cur = src;
    chain.path.push_back(pts[cur]);
    while (cur != dst) {
        std::size_t next = SIZE_MAX;
        for (std::size_t y : g.neighbors(cur))
            if (dist[y] + 1 == dist[cur] && y < next) next = y;
        chain.parts.push_back(sub(pts[cur], pts[next]));
        chain.path.push_back(pts[next]);
        cur = next;
    }
    if (!is_proper(chain.parts) || !is_strongly_semiconformal(u, chain.parts))
        throw ConsistencyError("fiber-graph path is not a strongly semiconformal chain for " + to_string(u));
    return chain;
}

/////////////////////////////////////////////////////////////////////////////
// bases

enum class MarkovKind { minimal, universal, indispensable };

inline std::string to_string(MarkovKind k) {
    switch (k) {
        case MarkovKind::minimal: return "minimal";
        case MarkovKind::universal: return "universal";
        case MarkovKind::indispensable: return "indispensable";
    }
    return "?";
}

struct MarkovBasis {
    Configuration config;
    MarkovKind kind = MarkovKind::universal;
    std::vector<IntVec> elements;  // canonical-signed, graded-lex sorted

    std::size_t size() const { return elements.size(); }
    bool contains(const IntVec& u) const {
        return std::binary_search(elements.begin(), elements.end(), canonicalize(u), GradedLex{});
    }
};

namespace detail {

// Fiber graphs of the Graver degrees, computed once per distinct degree.
class DegreeGraphs {
public:
    explicit DegreeGraphs(const Configuration& config) : config_(config) {}

    const FiberGraph& at(const IntVec& degree) {
        auto it = graphs_.find(degree);
        if (it == graphs_.end()) it = graphs_.emplace(degree, fiber_graph(config_, degree)).first;
        return it->second;
    }

private:
    Configuration config_;
    std::map<IntVec, FiberGraph> graphs_;
};

template <class Keep>
MarkovBasis filter_graver(const Configuration& config, MarkovKind kind, const GraverOptions& opts, Keep&& keep) {
    if (!config.nonneg_pointed())
        throw DomainError("Markov computations need a nonnegative matrix without zero columns");
    GraverBasis g = graver_basis(config, opts);
    DegreeGraphs graphs(config);
    MarkovBasis out{config, kind, {}};
    for (const auto& u : g.elements) {
        const FiberGraph& fg = graphs.at(config.matrix() * pos_part(u));
        if (keep(fg, u)) out.elements.push_back(u);
    }
    return out;
}

}  // namespace detail

inline MarkovBasis universal_markov_basis(const Configuration& config, const GraverOptions& opts = {}) {
    return detail::filter_graver(config, MarkovKind::universal, opts, [](const FiberGraph& fg, const IntVec& u) {
        return !fg.connected(pos_part(u), neg_part(u));
    });
}

inline MarkovBasis indispensable_subset(const Configuration& config, const GraverOptions& opts = {}) {
    return detail::filter_graver(config, MarkovKind::indispensable, opts,
                                 [](const FiberGraph& fg, const IntVec&) { return fg.size() == 2; });
}

/// For every Graver degree whose fiber graph has p >= 2 components, emits
/// p-1 moves joining the smallest point of each later component to the
/// smallest point of the first one.
inline MarkovBasis minimal_markov_basis(const Configuration& config, const GraverOptions& opts = {}) {
    if (!config.nonneg_pointed())
        throw DomainError("Markov computations need a nonnegative matrix without zero columns");
    GraverBasis g = graver_basis(config, opts);
    std::vector<IntVec> degrees;
    for (const auto& u : g.elements) degrees.push_back(config.matrix() * pos_part(u));
    sort_graded_lex(degrees);
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    MarkovBasis out{config, MarkovKind::minimal, {}};
    for (const auto& b : degrees) {
        FiberGraph fg = fiber_graph(config, b);
        auto rep = fg.representatives();
        for (std::size_t c = 1; c < rep.size(); ++c)
            out.elements.push_back(sub(fg.fiber.points[rep[c]], fg.fiber.points[rep[0]]));
    }
    out.elements = canonical_set(std::move(out.elements));
    return out;
}

/// True iff the moves connect u+ to u- inside fiber(deg u) for every u of
/// the reference universal Markov basis.
inline bool is_markov_basis(const Configuration& config, const std::vector<IntVec>& moves,
                            const MarkovBasis& reference) {
    for (const auto& m : moves) config.require_kernel(m);
    for (const auto& u : reference.elements) {
        Fiber f = fiber(config, a_degree(config, u));
        const std::size_t src = f.index_of(pos_part(u)), dst = f.index_of(neg_part(u));
        std::vector<char> seen(f.points.size(), 0);
        std::queue<std::size_t> q;
        seen[src] = 1;
        q.push(src);
        while (!q.empty() && !seen[dst]) {
            std::size_t x = q.front();
            q.pop();
            for (const auto& m : moves) {
                if (is_zero(m)) continue;
                for (Int s : {Int{1}, Int{-1}}) {
                    IntVec y = add(f.points[x], scale(s, m));
                    if (std::any_of(y.begin(), y.end(), [](Int v) { return v < 0; })) continue;
                    std::size_t k = f.index_of(y);
                    if (k < f.points.size() && !seen[k]) {
                        seen[k] = 1;
                        q.push(k);
                    }
                }
            }
        }
        if (!seen[dst]) return false;
    }
    return true;
}

inline bool is_markov_basis(const Configuration& config, const std::vector<IntVec>& moves,
                            const GraverOptions& opts = {}) {
    for (const auto& m : moves) config.require_kernel(m);
    return is_markov_basis(config, moves, universal_markov_basis(config, opts));
}

}  // namespace toric
