#pragma once

#include <numeric>

#include "dyck.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace corefib {

// the core <-> path bijection, defined through alpha(path(kappa)) = beta(kappa)
inline DyckPath path_of_core(const Partition& kappa, long long a, long long b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw invalid_input_error("path_of_core: a and b must be coprime positive integers");
    if (!is_ab_core(kappa, a, b))
        throw invalid_input_error("path_of_core: partition is not an (a,b)-core");
    return path_from_alpha(first_column_hooks(kappa), a, b);
}

inline Partition core_of_path(const DyckPath& path) {
    return partition_from_beta(alpha_set(path));
}

} // namespace corefib
