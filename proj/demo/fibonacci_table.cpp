// prints the distinct-core counts and graded polynomials for small a
#include <iostream>

#include <corefib/corefib.hpp>

int main() {
    using namespace corefib;
    std::cout << "cores with distinct parts, b = a*s + 1\n\n";
    for (long long s = 1; s <= 2; ++s) {
        std::cout << "s = " << s << "\n";
        for (long long a = 1; a <= 8; ++a) {
            std::cout << "  a = " << a << ": " << sparse_vector_count(a, s)
                      << "  " << to_string(graded_fib(a, s)) << "\n";
        }
        std::cout << "\n";
    }
    return 0;
}
