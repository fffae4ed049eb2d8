#pragma once

// Graver bases by completion, conformal normal forms, primitivity and the
// Graver-of-Graver computation behind Graver complexity.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/core.hpp"
#include "toric/lattice.hpp"
#include "toric/matrix.hpp"

namespace toric {

struct GraverOptions {
    /// Cap on critical pairs entering the queue.
    std::size_t max_pairs = 1'000'000;
    /// Cap on stored sign classes during completion.
    std::size_t max_elements = 1'000'000;
    /// Skip pairs f, g whose sum is already conformal (it reduces to zero).
    bool skip_compatible_pairs = true;
    /// Extra generators added to the kernel-basis seed.
    std::vector<IntVec> extra_seeds;
};

/// Canonical-signed representatives of the ⊑-minimal nonzero kernel vectors, sorted graded-lex.
struct GraverBasis {
    Configuration config;
    std::vector<IntVec> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(const IntVec& u) const {
        IntVec c = canonicalize(u);
        return std::binary_search(elements.begin(), elements.end(), c, GradedLex{});
    }
};

struct CompletionStats {
    std::size_t pairs = 0;
    std::size_t skipped = 0;
    std::size_t peak_elements = 0;
};

namespace detail {

// Sign supports packed into words so candidate reducers are rejected cheaply.
class SupportMask {
public:
    SupportMask() = default;
    explicit SupportMask(const IntVec& v) : pos_((v.size() + 63) / 64, 0), neg_((v.size() + 63) / 64, 0) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] > 0) pos_[i / 64] |= std::uint64_t{1} << (i % 64);
            if (v[i] < 0) neg_[i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }
    // could `this` (with sign `flip`) be ⊑ `o`?
    bool fits(const SupportMask& o, bool flip) const {
        const auto& p = flip ? neg_ : pos_;
        const auto& q = flip ? pos_ : neg_;
        for (std::size_t w = 0; w < p.size(); ++w)
            if ((p[w] & ~o.pos_[w]) || (q[w] & ~o.neg_[w])) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> pos_, neg_;
};

struct Entry {
    IntVec v;
    SupportMask mask;
    Int norm;
};

/// Store of sign classes supporting "find a conformal reducer" queries.
class ReducerSet {
public:
    explicit ReducerSet(std::size_t n) : n_(n) {}

    std::size_t size() const { return entries_.size(); }
    const Entry& operator[](std::size_t i) const { return entries_[i]; }

    void push(IntVec v) {
        SupportMask m(v);
        Int nm = norm1(v);
        entries_.push_back({std::move(v), std::move(m), nm});
    }

    /// Reduces s to its conformal normal form with first-match semantics,
    /// skipping entry `skip` (if any). Returns true if s changed.
    bool normal_form(IntVec& s, std::size_t skip = SIZE_MAX) const {
        bool changed = false;
        SupportMask sm(s);
        Int snorm = norm1(s);
        for (std::size_t k = 0; k < entries_.size();) {
            const Entry& e = entries_[k];
            if (k == skip || e.norm > snorm) {
                ++k;
                continue;
            }
            int sign = 0;
            if (e.mask.fits(sm, false) && conformal_le(e.v, s)) sign = 1;
            else if (e.mask.fits(sm, true) && conformal_le_neg(e.v, s)) sign = -1;
            if (sign == 0) {
                ++k;
                continue;
            }
            // largest multiple t with t·(sign·e) ⊑ s
            Int t = INT64_MAX;
            for (std::size_t i = 0; i < n_; ++i)
                if (e.v[i] != 0) t = std::min(t, s[i] / (sign * e.v[i]));
            for (std::size_t i = 0; i < n_; ++i)
                if (e.v[i] != 0) s[i] -= t * sign * e.v[i];
            changed = true;
            sm = SupportMask(s);
            snorm = norm1(s);
            if (snorm == 0) return true;
            k = 0;
        }
        return changed;
    }

    /// Index of the first entry that is ⊑ v (either sign), other than `self`.
    std::optional<std::size_t> find_reducer(const IntVec& v, std::size_t self) const {
        SupportMask vm(v);
        Int vn = norm1(v);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (k == self) continue;
            const Entry& e = entries_[k];
            if (e.norm > vn) continue;
            if ((e.mask.fits(vm, false) && conformal_le(e.v, v)) || (e.mask.fits(vm, true) && conformal_le_neg(e.v, v)))
                return k;
        }
        return std::nullopt;
    }

private:
    static bool conformal_le_neg(const IntVec& e, const IntVec& s) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            Int v = -e[i];
            if (v > 0 ? (s[i] < v) : (v < 0 && s[i] > v)) return false;
        }
        return true;
    }

    std::size_t n_;
    std::vector<Entry> entries_;
};

inline std::string progress(const CompletionStats& st, std::size_t elements) {
    return " (pairs processed: " + std::to_string(st.pairs) + ", stored elements: " + std::to_string(elements) + ")";
}

}  // namespace detail

/// Pottier-style completion. Seeds are the kernel basis (plus any extra
/// seeds); pairs are processed FIFO in insertion order, each pair sum is
/// reduced to conformal normal form, nonzero remainders are stored and
/// paired with everything already stored. The ⊑-minimal survivors form the
/// Graver basis.
inline GraverBasis graver_basis(const Configuration& config, const GraverOptions& opts = {},
                                CompletionStats* stats = nullptr) {
    const std::size_t n = config.cols();
    CompletionStats st;
    detail::ReducerSet set(n);

    std::vector<IntVec> seeds = config.kernel_basis();
    for (const auto& s : opts.extra_seeds) {
        config.require_kernel(s);
        seeds.push_back(s);
    }
    for (auto& s : canonical_set(seeds)) {
        IntVec r = s;
        set.normal_form(r);
        if (!is_zero(r)) set.push(canonicalize(r));
    }

    for (std::size_t k = 1; k < set.size(); ++k) {
        for (std::size_t i = 0; i < k; ++i) {
            for (Int sign : {Int{1}, Int{-1}}) {
                const IntVec& f = set[k].v;
                IntVec g = sign > 0 ? set[i].v : negate(set[i].v);
                if (opts.skip_compatible_pairs && sign_compatible(f, g)) {
                    ++st.skipped;
                    continue;
                }
                IntVec s = add(f, g);
                if (is_zero(s)) continue;
                if (++st.pairs > opts.max_pairs)
                    throw ResourceLimit("Graver completion exceeded max_pairs=" + std::to_string(opts.max_pairs) +
                                        detail::progress(st, set.size()));
                set.normal_form(s);
                if (is_zero(s)) continue;
                if (set.size() >= opts.max_elements)
                    throw ResourceLimit("Graver completion exceeded max_elements=" +
                                        std::to_string(opts.max_elements) + detail::progress(st, set.size()));
                set.push(canonicalize(s));
            }
        }
    }
    st.peak_elements = set.size();

    std::vector<IntVec> minimal;
    for (std::size_t k = 0; k < set.size(); ++k)
        if (!set.find_reducer(set[k].v, k)) minimal.push_back(set[k].v);
    if (stats) *stats = st;
    return {config, canonical_set(std::move(minimal))};
}

/// Repeatedly subtracts the first basis element (either sign) that is ⊑ the
/// current vector; returns the fixed point.
inline IntVec conformal_normal_form(const IntVec& u, const GraverBasis& basis) {
    basis.config.require_kernel(u);
    detail::ReducerSet set(u.size());
    for (const auto& g : basis.elements) set.push(g);
    IntVec s = u;
    set.normal_form(s);
    return s;
}

inline constexpr std::size_t kDefaultMaxBox = 50'000'000;

namespace detail {

// Odometer over the box lo <= v <= hi, calling visit(v) for kernel vectors.
template <class Visit>
void scan_box(const Configuration& config, const IntVec& lo, const IntVec& hi, std::size_t max_box, Visit&& visit) {
    const std::size_t n = lo.size();
    double volume = 1;
    for (std::size_t i = 0; i < n; ++i) volume *= static_cast<double>(hi[i] - lo[i] + 1);
    if (volume > static_cast<double>(max_box))
        throw ResourceLimit("box of " + std::to_string(static_cast<long long>(volume)) + " points exceeds cap " +
                            std::to_string(max_box));
    const IntMatrix& a = config.matrix();
    IntVec v = lo;
    IntVec image = a * v;
    for (;;) {
        if (is_zero(image)) {
            if (!visit(static_cast<const IntVec&>(v))) return;
        }
        std::size_t i = n;
        while (i-- > 0) {
            if (v[i] < hi[i]) {
                ++v[i];
                for (std::size_t r = 0; r < a.rows(); ++r) image[r] = checked_add(image[r], a(r, i));
                break;
            }
            Int span = hi[i] - lo[i];
            v[i] = lo[i];
            for (std::size_t r = 0; r < a.rows(); ++r) image[r] = checked_sub(image[r], checked_mul(span, a(r, i)));
        }
        if (i == SIZE_MAX) return;
    }
}

}  // namespace detail

/// True iff no kernel vector other than 0 and u is ⊑ u. Decided by an
/// exhaustive scan of the box [-u-, u+], independent of the completion engine.
inline bool is_primitive(const Configuration& config, const IntVec& u, std::size_t max_box = kDefaultMaxBox) {
    config.require_kernel(u);
    if (is_zero(u)) throw DomainError("primitivity of the zero vector");
    IntVec lo(u.size()), hi(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        lo[i] = std::min<Int>(u[i], 0);
        hi[i] = std::max<Int>(u[i], 0);
    }
    bool primitive = true;
    detail::scan_box(config, lo, hi, max_box, [&](const IntVec& v) {
        if (!is_zero(v) && v != u) {
            primitive = false;
            return false;
        }
        return true;
    });
    return primitive;
}

/// All nonzero kernel vectors with every |entry| <= bound, canonical-signed and sorted.
inline std::vector<IntVec> box_kernel_oracle(const Configuration& config, Int bound,
                                             std::size_t max_box = kDefaultMaxBox) {
    if (bound < 1) throw DomainError("box bound must be at least 1");
    const std::size_t n = config.cols();
    std::vector<IntVec> out;
    // canonical vectors only: scan first-nonzero-position by position
    for (std::size_t lead = 0; lead < n; ++lead) {
        IntVec lo(n, 0), hi(n, 0);
        lo[lead] = 1;
        hi[lead] = bound;
        for (std::size_t i = lead + 1; i < n; ++i) {
            lo[i] = -bound;
            hi[i] = bound;
        }
        detail::scan_box(config, lo, hi, max_box, [&](const IntVec& v) {
            out.push_back(v);
            return true;
        });
    }
    sort_graded_lex(out);
    return out;
}

/// The ⊑-minimal members of a canonical-signed vector set (sign classes compared both ways).
inline std::vector<IntVec> conformal_minimal(const std::vector<IntVec>& vs) {
    std::vector<IntVec> out;
    for (const auto& u : vs) {
        bool minimal = true;
        for (const auto& v : vs) {
            if (v == u) continue;
            if (conformal_le(v, u) || conformal_le(negate(v), u)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(u);
    }
    return out;
}

struct GraverComplexity {
    Int value = 0;
    IntVec witness;  // empty when the Graver-of-Graver basis is empty
    std::size_t inner_size = 0;
    std::size_t outer_size = 0;
};

/// Maximum 1-norm over the Graver basis of the matrix whose columns are the Graver basis of A.
inline GraverComplexity graver_complexity(const Configuration& config, const GraverOptions& opts = {}) {
    GraverBasis g = graver_basis(config, opts);
    if (g.elements.empty()) throw DomainError("Graver complexity needs a nonempty Graver basis");
    Configuration gg(IntMatrix::from_columns(g.elements, config.cols()));
    GraverBasis outer = graver_basis(gg, opts);
    GraverComplexity r;
    r.inner_size = g.size();
    r.outer_size = outer.size();
    for (const auto& e : outer.elements) {
        Int nm = norm1(e);
        if (nm > r.value) {
            r.value = nm;
            r.witness = e;
        }
    }
    return r;
}

}  // namespace toric
