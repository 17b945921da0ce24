// walks one path of the (8,9) family and prints the bounce bookkeeping
#include <iostream>

#include <corefib/corefib.hpp>

int main() {
    using namespace corefib;
    const Partition kappa({5, 4, 3});
    const long long a = 8, s = 1, b = a * s + 1;
    if (!is_ab_core(kappa, a, b) || !has_distinct_parts(kappa)) {
        std::cout << "pick a core with distinct parts first\n";
        return 1;
    }
    const DyckPath path = path_of_core(kappa, a, b);
    std::cout << "core: ";
    for (long long part : kappa.parts()) std::cout << part << " ";
    std::cout << "\npath: " << path.steps() << "\n";
    const BounceRecord rec = bounce_walk(path, s);
    std::cout << "v:";
    for (long long x : rec.v) std::cout << " " << x;
    std::cout << "\nw:";
    for (long long x : rec.w) std::cout << " " << x;
    std::cout << "\nbounce: " << rec.bounce << "\n";
    const AbacusVector d = abac(kappa, a);
    std::cout << "closed form: " << bounce_closed_form(d, s) << "\n";
    return 0;
}
