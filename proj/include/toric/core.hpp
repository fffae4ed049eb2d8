#pragma once

// Exact integer vectors, checked arithmetic and the error types shared by
// every engine in the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

/////////////////////////////////////////////////////////////////////////////

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A fixed-width intermediate value left the representable range.
struct ArithmeticOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Raised when an iteration, memory or box-size cap is exceeded.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// line 0 means the error is not tied to a line (e.g. unreadable file).
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {}
    std::size_t line;
};

/////////////////////////////////////////////////////////////////////////////

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

/// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/////////////////////////////////////////////////////////////////////////////
// vector arithmetic

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

inline IntVec scale(Int c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
    return r;
}

inline IntVec negate(const IntVec& a) { return scale(-1, a); }

inline bool is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

inline Int norm1(const IntVec& a) {
    Int s = 0;
    for (Int x : a) s = checked_add(s, checked_abs(x));
    return s;
}

inline IntVec pos_part(const IntVec& u) {
    IntVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] > 0 ? u[i] : 0;
    return r;
}

inline IntVec neg_part(const IntVec& u) {
    IntVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] < 0 ? checked_neg(u[i]) : 0;
    return r;
}

/// a >= b componentwise.
inline bool dominates(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

/// a > b in the sense used throughout: a >= b componentwise and a != b.
inline bool strictly_dominates(const IntVec& a, const IntVec& b) {
    return dominates(a, b) && a != b;
}

/// v ⊑ u: v+ <= u+ and v- <= u-.
inline bool conformal_le(const IntVec& v, const IntVec& u) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0 ? (u[i] < v[i]) : (v[i] < 0 && u[i] > v[i])) return false;
    }
    return true;
}

/// True when the two vectors never have opposite signs in a coordinate.
inline bool sign_compatible(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) return false;
    return true;
}

inline bool supports_intersect(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return true;
    return false;
}

/// Returns u when its first nonzero entry is positive, otherwise -u.
inline IntVec canonicalize(const IntVec& u) {
    for (Int x : u) {
        if (x > 0) return u;
        if (x < 0) return negate(u);
    }
    return u;
}

inline bool is_canonical(const IntVec& u) {
    for (Int x : u) {
        if (x != 0) return x > 0;
    }
    return true;
}

inline std::string sign_pattern(const IntVec& u) {
    std::string s;
    s.reserve(u.size());
    for (Int x : u) s.push_back(x > 0 ? '+' : (x < 0 ? '-' : '0'));
    return s;
}

/// Graded-lexicographic order: 1-norm first, then ascending lex.
struct GradedLex {
    bool operator()(const IntVec& a, const IntVec& b) const {
        Int na = norm1(a), nb = norm1(b);
        if (na != nb) return na < nb;
        return a < b;
    }
};

inline void sort_graded_lex(std::vector<IntVec>& vs) {
    std::sort(vs.begin(), vs.end(), GradedLex{});
}

/// Canonicalizes every vector, drops zeros and duplicates, sorts graded-lex.
inline std::vector<IntVec> canonical_set(std::vector<IntVec> vs) {
    std::vector<IntVec> out;
    out.reserve(vs.size());
    for (auto& v : vs)
        if (!is_zero(v)) out.push_back(canonicalize(v));
    sort_graded_lex(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

inline Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

}  // namespace toric
