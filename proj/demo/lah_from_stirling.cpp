// Prints the Lah triangle as [n,k] * {k,m}, checks it against the
// closed form, and shows that its inverse is its own sign twist.

#include <iostream>

#include "stirmat/stirmat.hpp"

int main() {
    using namespace stirmat;
    constexpr std::size_t rows = 6;

    const auto lah = composite_product(pairs::S1S2, rows);
    write_triangle(std::cout, lah, OutputFormat::Plain);

    bool closed = true;
    for (std::size_t n = 0; n <= rows; ++n) {
        for (std::size_t m = 0; m <= n; ++m) closed = closed && lah(n, m) == lah_closed(n, m);
    }
    std::cout << "matches n!/m! C(n-1,m-1): " << std::boolalpha << closed << '\n';
    std::cout << "inverse is the sign twist: " << (inverse(lah) == sign_twist(lah)) << '\n';
    std::cout << "row sums:";
    for (std::size_t n = 0; n <= rows; ++n) std::cout << ' ' << row_total(lah, n);
    std::cout << '\n';
}
