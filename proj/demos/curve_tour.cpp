// Closed forms for a monomial curve next to the brute-force engines.
//   demo_curve_tour [n1 n2 n3]

#include <cstdlib>
#include <iostream>

#include "toric/curve.hpp"

int main(int argc, char** argv) {
    using namespace toric;
    Curve c = argc == 4 ? Curve(std::atoll(argv[1]), std::atoll(argv[2]), std::atoll(argv[3])) : Curve(3, 4, 5);
    HerzogData h = herzog_data(c);
    std::cout << c.to_string() << ": " << h.classification() << '\n';
    std::cout << "c = (" << h.c[0] << ", " << h.c[1] << ", " << h.c[2] << ")\n";

    CurveMarkov m = closed_form_markov(h);
    std::cout << "universal Markov basis (closed form):";
    for (const auto& u : m.universal) std::cout << ' ' << to_string(u);
    std::cout << "\nbrute force agrees: " << std::boolalpha
              << (universal_markov_basis(c.config()).elements == m.universal) << '\n';

    GraverBasis g = graver_basis(c.config());
    std::cout << "|G| = " << g.size() << ", Markov complexity " << markov_complexity(c) << '\n';
    for (std::size_t r = 2; r <= 3; ++r) {
        auto t = closed_form_lawrence_markov(c, r);
        std::size_t top = 0;
        for (const auto& v : t) top = std::max(top, type_of(v, 3));
        std::cout << "  r=" << r << ": |M(A^(r))| = " << t.size() << ", max type " << top << '\n';
    }
    std::cout << "Graver complexity lower bound " << graver_lower_bound(c) << '\n';
}
