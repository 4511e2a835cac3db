// Prints the Halphen curves for g <= 10 and the first Lamé curves.

#include "finitegap/finitegap.hpp"

#include <iostream>

int main() {
    using namespace finitegap;
    for (int g = 1; g <= 10; ++g) {
        if (!is_valid_genus(g)) continue;
        std::cout << "halphen g=" << g << ":  " << curve_to_text(spectral_curve(g).curve) << "\n";
    }
    for (int g = 1; g <= 3; ++g) std::cout << "lame g=" << g << ":  " << curve_to_text(lame_curve(g)) << "\n";
}
