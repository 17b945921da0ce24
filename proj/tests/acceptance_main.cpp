// acceptance gate: one pass/fail line per criterion, exit code = failures.
// all comparisons are exact integer / polynomial identities; no tolerances.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <corefib/corefib.hpp>

using namespace corefib;

namespace {

bool criterion_fibonacci_counts() {
    const long long expected[] = {0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (long long a = 1; a <= 10; ++a) {
        const long long limit = std::max<long long>(64, (a - 1) * a / 2);
        if (count_ab_cores(a, a + 1, true, limit) != BigInt(expected[a])) return false;
        if (sparse_vector_count(a, 1) != BigInt(expected[a])) return false;
    }
    return true;
}

bool criterion_twin_odd_counts() {
    const long long expected[] = {0, 1, 4, 16, 64, 256};
    for (long long k = 1; k <= 5; ++k) {
        long long n = 0;
        for_each_c_symmetric(k, [&](const CSymPath& zeta) {
            if (!is_c_symmetric(zeta)) throw std::logic_error("asymmetric path enumerated");
            ++n;
        });
        if (n != expected[k]) return false;
        if (count_closed_form(k) != BigInt(expected[k])) return false;
        const long long a = 2 * k - 1, b = 2 * k + 1;
        const long long limit = std::max<long long>(64, (a - 1) * (b - 1) / 2);
        if (count_ab_cores(a, b, true, limit) != BigInt(expected[k])) return false;
    }
    return true;
}

bool criterion_max_sizes() {
    const long long expected[] = {0, 0, 1, 2, 3, 5, 7, 9, 12, 15, 18, 22, 26};
    for (long long a = 2; a <= 12; ++a) {
        const auto rep = max_size_report(a);
        if (rep.max_size != expected[a]) return false;
        const long long maximizers = (a % 3 == 1) ? 2 : 1;
        if (rep.num_maximizers != maximizers) return false;
    }
    return true;
}

bool criterion_totals() {
    if (total_and_average_size(3).total != 3) return false;
    if (total_and_average_size(4).total != 9) return false;
    for (long long a = 2; a <= 12; ++a) {
        const auto by_enum = total_and_average_size(a, TotalMethod::Enumerate);
        const auto by_conv = total_and_average_size(a, TotalMethod::Convolution);
        if (by_enum.total != by_conv.total) return false;
        if (by_enum.average != by_conv.average) return false;
    }
    return true;
}

bool criterion_graded_threeway() {
    for (long long s = 1; s <= 4; ++s) {
        const auto series = gen_series_coeffs(s, 14);
        if (graded_fib(2, s) != QtPolynomial(1) + QtPolynomial::q() * q_integer(s))
            return false;
        for (long long a = 0; a <= 14; ++a) {
            const auto rep = graded_family_report(a, s);
            if (!rep.agree) return false;
            if (rep.direct != series[static_cast<size_t>(a)]) return false;
        }
    }
    return true;
}

bool criterion_bounce() {
    if (bounce_stat(DyckPath(4, 13, {5, 7, 13, 13}), 3) != 8) return false;
    for (long long a = 1; a <= 7; ++a)
        for (long long s = 1; s <= 3; ++s) {
            bool ok = true;
            for_each_sparse_vector(a, s, [&](const AbacusVector& d) {
                const DyckPath p = path_of_core(core_from_abac(d), a, a * s + 1);
                if (bounce_stat(p, s) != bounce_closed_form(d, s)) ok = false;
            });
            if (!ok) return false;
        }
    return true;
}

bool criterion_bigraded_recurrences() {
    QtPolynomial tilde3;
    tilde3.add_term(0, 0, 1);
    tilde3.add_term(1, 1, 1);
    tilde3.add_term(1, 2, 1);
    if (bigraded_fib(3, 1).tildeF != tilde3) return false;
    for (long long s = 1; s <= 3; ++s) {
        std::vector<QtPolynomial> tilde;
        for (long long a = 0; a <= 11; ++a) tilde.push_back(bigraded_fib(a, s).tildeF);
        if (tilde[0] != QtPolynomial(1) || tilde[1] != QtPolynomial(1)) return false;
        for (long long a = 1; a <= 10; ++a) {
            const QtPolynomial qta = QtPolynomial::monomial(1, 1, a);
            if (tilde[a + 1] != tilde[a] + qta * q_integer(s, qta) * tilde[a - 1]) return false;
            const QtPolynomial qt = QtPolynomial::monomial(1, 1, 1);
            const QtPolynomial qt2 = QtPolynomial::monomial(1, 1, 2);
            if (tilde[a + 1] !=
                monomial_substitute(tilde[a], qt, QtPolynomial::t()) +
                    qt * q_integer(s, qt) *
                        monomial_substitute(tilde[a - 1], qt2, QtPolynomial::t()))
                return false;
        }
    }
    return true;
}

bool criterion_specializations() {
    for (long long a = 0; a <= 10; ++a)
        for (long long s = 1; s <= 3; ++s) {
            const auto bg = bigraded_fib(a, s);
            if (monomial_substitute(bg.F, QtPolynomial::q(), QtPolynomial(1)) !=
                graded_fib(a, s))
                return false;
            const BigInt count = a == 0 ? BigInt(1) : sparse_vector_count(a, s);
            if (evaluate(bg.F, 1, 1) != BigRational(count)) return false;
        }
    return true;
}

bool criterion_roundtrips() {
    for (long long a = 1; a <= 11; ++a)
        for (long long b = 1; a + b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            bool ok = true;
            for_each_path(a, b, [&](const DyckPath& p) {
                const Partition kappa = core_of_path(p);
                if (path_of_core(kappa, a, b) != p) ok = false;
                if (core_from_abac(abac(kappa, a)) != kappa) ok = false;
                if (core_from_abac(abac(kappa, b)) != kappa) ok = false;
            });
            if (!ok) return false;
        }
    return true;
}

bool criterion_straub() {
    for (long long a = 1; a <= 8; ++a)
        for (long long s = 1; s <= 3; ++s) {
            const long long b = a * s - 1;
            if (b < 1 || std::gcd(a, b) != 1) continue;
            const long long limit = std::max<long long>(128, (a - 1) * (b - 1) / 2);
            if (count_ab_cores(a, b, true, limit) != straub_count(a, s)) return false;
        }
    return true;
}

struct Criterion {
    const char* label;
    bool (*fn)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"distinct (a,a+1)-core counts are Fibonacci, a <= 10", criterion_fibonacci_counts},
        {"twin-odd counts: oracle, path enumeration, closed form, k <= 5",
         criterion_twin_odd_counts},
        {"largest distinct-core sizes and maximizer counts, a <= 12", criterion_max_sizes},
        {"total/average size by enumeration and convolution, a <= 12", criterion_totals},
        {"graded polynomial: direct, recurrence, closed form, series, a <= 14, s <= 4",
         criterion_graded_threeway},
        {"bounce walk equals its closed form, a <= 7, s <= 3", criterion_bounce},
        {"both bigraded recurrences hold, a <= 10, s <= 3", criterion_bigraded_recurrences},
        {"bigraded specializations recover the graded polynomial and the count",
         criterion_specializations},
        {"path/core/abacus round trips, coprime a + b <= 12", criterion_roundtrips},
        {"distinct (a,as-1)-core counts match the vector recurrence, a <= 8, s <= 3",
         criterion_straub},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("%s  %2d. %s [%lld ms]%s\n", ok ? "PASS" : "FAIL", index, c.label,
                    static_cast<long long>(ms), note.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures;
}
