// The fiber of degree (4,6) of a 2×5 configuration: its points, the
// support-intersection graph, and the shortest strongly semiconformal chain
// from u+ to u- for u = (2,1,0,-1,-1).

#include <iostream>

#include "toric/markov.hpp"

int main() {
    using namespace toric;
    Configuration a(IntMatrix::from_rows({{2, 0, 2, 1, 3}, {2, 2, 0, 3, 3}}, 5));
    const IntVec u{2, 1, 0, -1, -1};
    FiberGraph g = fiber_graph(a, a_degree(a, u));
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::cout << i << ' ' << to_string(g.fiber.points[i]) << "  ->";
        for (auto j : g.neighbors(i)) std::cout << ' ' << j;
        std::cout << '\n';
    }
    std::cout << "u in universal Markov basis: " << std::boolalpha << in_universal_markov(a, u) << '\n';
    if (auto chain = find_ssc_chain(a, u)) {
        std::cout << "shortest ssc chain (" << chain->length() << " steps):";
        for (const auto& p : chain->parts) std::cout << ' ' << to_string(p);
        std::cout << '\n';
    }
}
