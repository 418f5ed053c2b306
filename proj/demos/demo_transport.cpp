// SPDX-License-Identifier: MIT
// Transports the class of the punctured affine line along cyclic
// extensions and prints the resulting isotypic decompositions.
#include <iostream>

#include <motiveq/motiveq.hpp>

using namespace motiveq;

int main() {
    EqClass line = EqClass::term(1, 1, parse_ratfunc("q-1"));
    std::cout << "class of the punctured line: " << line.to_string() << "\n\n";

    for (i64 n : {2L, 3L, 4L, 6L}) {
        EqClass moved = per(line, n);
        std::cout << "transport along a degree-" << n << " extension:\n  " << moved.to_string()
                  << "\n  forgetful check: " << plain_class(moved).to_string()
                  << " == " << (parse_ratfunc("q-1").pow(static_cast<unsigned long>(n))).to_string()
                  << "\n";
    }

    std::cout << "\nfull tower over the degree-6 extension:\n";
    DivisorTower tower = per_tower(line, 6);
    for (i64 m : divisors(static_cast<i64>(6)))
        std::cout << "  entry " << m << ": " << tower.entry(m).to_string() << "\n";

    std::cout << "\ndividing a product back out:\n";
    EqClass a = per(line, 2);
    EqClass b = per(EqClass::term(1, 1, parse_ratfunc("q")), 2);
    EqClass product = a * b;
    std::cout << "  product: " << product.to_string() << "\n";
    std::cout << "  quotient by the first factor: " << divide(product, a).to_string() << "\n";
    return 0;
}
