#pragma once

// Shared fixture configurations and the seeded random curve generator used
// by the property tests and the acceptance runner.

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "toric/curve.hpp"
#include "toric/lattice.hpp"
#include "toric/matrix.hpp"

namespace fixtures {

using toric::Configuration;
using toric::Curve;
using toric::Int;
using toric::IntMatrix;
using toric::IntVec;

inline Configuration row(std::initializer_list<Int> v) { return Configuration::row(IntVec(v)); }

/// The 2×5 matrix with columns (2,2),(0,2),(2,0),(1,3),(3,3).
inline Configuration example_2x5() { return Configuration(IntMatrix::from_rows({{2, 0, 2, 1, 3}, {2, 2, 0, 3, 3}}, 5)); }

inline Configuration twisted_cubic() {
    return Configuration(IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}}, 4));
}

/// 2×2 contingency tables with fixed margins.
inline Configuration table_2x2() {
    return Configuration(IntMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}, 4));
}

struct Named {
    std::string name;
    Configuration config;
};

/// Nonnegative fixtures on which every engine runs in well under a second.
inline std::vector<Named> all() {
    return {{"(2 3 11)", row({2, 3, 11})},   {"(3 4 5)", row({3, 4, 5})},     {"(1 2 3)", row({1, 2, 3})},
            {"(2 3 17)", row({2, 3, 17})},   {"(2 4 5)", row({2, 4, 5})},     {"(1 1)", row({1, 1})},
            {"2x5", example_2x5()},          {"twisted cubic", twisted_cubic()}, {"2x2 tables", table_2x2()}};
}

/// `count` curves with entries in [1, max_entry] and gcd 1, from a fixed seed.
inline std::vector<Curve> random_curves(std::size_t count, Int max_entry = 40, std::uint64_t seed = 20240611) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> dist(1, max_entry);
    std::vector<Curve> out;
    while (out.size() < count) {
        Int a = dist(rng), b = dist(rng), c = dist(rng);
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        out.emplace_back(a, b, c);
    }
    return out;
}

}  // namespace fixtures
