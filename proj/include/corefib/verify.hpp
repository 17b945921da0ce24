#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abacus.hpp"
#include "anderson.hpp"
#include "bounce.hpp"
#include "dyck.hpp"
#include "extremal.hpp"
#include "fibonacci.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "qt_polynomial.hpp"
#include "twin_odd.hpp"

// self-check harness: each suite replays one family of identities against the
// brute-force oracle and reports pass/fail with a short detail line
namespace corefib {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    long long max_a = 8;
    long long max_s = 2;
    long long max_k = 3;
    std::string suite = "all";
};

namespace detail {

inline long long poset_limit_for(long long a, long long b) {
    return std::max<long long>(kDefaultPosetLimit, (a - 1) * (b - 1) / 2);
}

inline std::string case_tag(long long a, long long s) {
    std::ostringstream os;
    os << "a=" << a << ", s=" << s;
    return os.str();
}

} // namespace detail

inline VerifyCheck check_fibonacci_count(const VerifyOptions& opt) {
    VerifyCheck c{"fibonacci-count", true, ""};
    long long cases = 0;
    for (long long a = 1; a <= opt.max_a; ++a) {
        const long long b = a + 1;
        const BigInt want = fibonacci_number(a + 1);
        const BigInt by_poset =
            count_ab_cores(a, b, true, detail::poset_limit_for(a, b));
        const BigInt by_vectors = sparse_vector_count(a, 1);
        if (by_poset != want || by_vectors != want) {
            c.passed = false;
            c.detail = "mismatch at a=" + std::to_string(a);
            return c;
        }
        ++cases;
    }
    c.detail = std::to_string(cases) + " cases, a <= " + std::to_string(opt.max_a);
    return c;
}

inline VerifyCheck check_straub(const VerifyOptions& opt) {
    VerifyCheck c{"straub", true, ""};
    long long cases = 0;
    for (long long a = 2; a <= opt.max_a; ++a) {
        for (long long s = 1; s <= opt.max_s; ++s) {
            const long long b = a * s - 1;
            if (b < 1 || std::gcd(a, b) != 1) continue;
            const BigInt want = straub_count(a, s);
            const BigInt got =
                count_ab_cores(a, b, true, detail::poset_limit_for(a, b));
            if (got != want) {
                c.passed = false;
                c.detail = "mismatch at " + detail::case_tag(a, s);
                return c;
            }
            ++cases;
        }
    }
    c.detail = std::to_string(cases) + " cases";
    return c;
}

inline VerifyCheck check_distinct_family(const VerifyOptions& opt) {
    VerifyCheck c{"distinct-family", true, ""};
    long long cases = 0;
    for (long long a = 1; a <= opt.max_a; ++a) {
        for (long long s = 1; s <= opt.max_s; ++s) {
            const long long b = a * s + 1;
            std::set<Partition> from_vectors;
            for_each_sparse_vector(a, s, [&](const AbacusVector& d) {
                from_vectors.insert(core_from_abac(d));
            });
            std::set<Partition> from_poset;
            for_each_ab_core(
                a, b, true, [&](const Partition& p) { from_poset.insert(p); },
                detail::poset_limit_for(a, b));
            if (from_vectors != from_poset) {
                c.passed = false;
                c.detail = "set mismatch at " + detail::case_tag(a, s);
                return c;
            }
            ++cases;
        }
    }
    c.detail = std::to_string(cases) + " cases";
    return c;
}

inline VerifyCheck check_bijection_roundtrip(const VerifyOptions&) {
    VerifyCheck c{"bijection-roundtrip", true, ""};
    long long paths = 0;
    for (long long a = 1; a <= 11; ++a) {
        for (long long b = 1; a + b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            bool ok = true;
            for_each_path(a, b, [&](const DyckPath& p) {
                const Partition kappa = core_of_path(p);
                if (path_of_core(kappa, a, b) != p) ok = false;
                if (kappa.num_parts() != area(p)) ok = false;
                if (core_from_abac(abac(kappa, a)) != kappa) ok = false;
                ++paths;
            });
            if (!ok) {
                c.passed = false;
                c.detail = "round trip failed at a=" + std::to_string(a) +
                           ", b=" + std::to_string(b);
                return c;
            }
        }
    }
    c.detail = std::to_string(paths) + " paths, a+b <= 12";
    return c;
}

inline VerifyCheck check_graded_threeway(const VerifyOptions& opt) {
    VerifyCheck c{"graded-threeway", true, ""};
    long long cases = 0;
    for (long long s = 1; s <= opt.max_s; ++s) {
        const auto series = gen_series_coeffs(s, opt.max_a);
        for (long long a = 0; a <= opt.max_a; ++a) {
            const auto rep = graded_family_report(a, s);
            if (!rep.agree || rep.direct != series[static_cast<size_t>(a)]) {
                c.passed = false;
                c.detail = "mismatch at " + detail::case_tag(a, s);
                return c;
            }
            ++cases;
        }
    }
    c.detail = std::to_string(cases) + " cases";
    return c;
}

inline VerifyCheck check_bigraded_recurrences(const VerifyOptions& opt) {
    VerifyCheck c{"bigraded-recurrences", true, ""};
    long long cases = 0;
    for (long long s = 1; s <= opt.max_s; ++s) {
        std::vector<QtPolynomial> tilde;
        for (long long a = 0; a <= opt.max_a + 1; ++a)
            tilde.push_back(bigraded_fib(a, s).tildeF);
        for (long long a = 1; a <= opt.max_a; ++a) {
            const auto& prev = tilde[static_cast<size_t>(a - 1)];
            const auto& cur = tilde[static_cast<size_t>(a)];
            const auto& next = tilde[static_cast<size_t>(a + 1)];

            const QtPolynomial qta = QtPolynomial::monomial(1, 1, a);
            const QtPolynomial one_step =
                cur + qta * q_integer(s, qta) * prev;

            const QtPolynomial qt = QtPolynomial::monomial(1, 1, 1);
            const QtPolynomial qt2 = QtPolynomial::monomial(1, 1, 2);
            const QtPolynomial two_step =
                monomial_substitute(cur, qt, QtPolynomial::t()) +
                qt * q_integer(s, qt) * monomial_substitute(prev, qt2, QtPolynomial::t());

            if (next != one_step || next != two_step) {
                c.passed = false;
                c.detail = "recurrence mismatch at " + detail::case_tag(a, s);
                return c;
            }
            ++cases;
        }
    }
    c.detail = std::to_string(cases) + " cases";
    return c;
}

inline VerifyCheck check_specialization(const VerifyOptions& opt) {
    VerifyCheck c{"specialization", true, ""};
    long long cases = 0;
    for (long long s = 1; s <= opt.max_s; ++s) {
        for (long long a = 0; a <= opt.max_a; ++a) {
            const auto bg = bigraded_fib(a, s);
            const QtPolynomial at_t1 =
                monomial_substitute(bg.F, QtPolynomial::q(), QtPolynomial(1));
            if (at_t1 != graded_fib(a, s)) {
                c.passed = false;
                c.detail = "t=1 mismatch at " + detail::case_tag(a, s);
                return c;
            }
            const BigInt count = a == 0 ? BigInt(1) : sparse_vector_count(a, s);
            if (evaluate(bg.F, 1, 1) != BigRational(count)) {
                c.passed = false;
                c.detail = "q=t=1 mismatch at " + detail::case_tag(a, s);
                return c;
            }
            ++cases;
        }
    }
    c.detail = std::to_string(cases) + " cases";
    return c;
}

inline VerifyCheck check_bounce_closed_form(const VerifyOptions& opt) {
    VerifyCheck c{"bounce-closed-form", true, ""};
    long long cases = 0;
    for (long long a = 1; a <= opt.max_a; ++a) {
        for (long long s = 1; s <= opt.max_s; ++s) {
            bool ok = true;
            for_each_sparse_vector(a, s, [&](const AbacusVector& d) {
                const Partition kappa = core_from_abac(d);
                const DyckPath p = path_of_core(kappa, a, a * s + 1);
                if (bounce_stat(p, s) != bounce_closed_form(d, s)) ok = false;
                ++cases;
            });
            if (!ok) {
                c.passed = false;
                c.detail = "walk/closed-form mismatch at " + detail::case_tag(a, s);
                return c;
            }
        }
    }
    c.detail = std::to_string(cases) + " vectors";
    return c;
}

inline VerifyCheck check_path_sum(const VerifyOptions& opt) {
    VerifyCheck c{"path-sum", true, ""};
    const long long max_a = std::min<long long>(opt.max_a, 6);
    const long long max_s = std::min<long long>(opt.max_s, 3);
    long long cases = 0;
    for (long long a = 1; a <= max_a; ++a) {
        for (long long s = 1; s <= max_s; ++s) {
            const long long b = a * s + 1;
            QtPolynomial sum;
            for_each_path(
                a, b,
                [&](const DyckPath& p) {
                    if (!has_distinct_parts(core_of_path(p))) return;
                    sum.add_term(area(p), bounce_stat(p, s), 1);
                },
                a + b);
            if (sum != bigraded_fib(a, s).F) {
                c.passed = false;
                c.detail = "path sum mismatch at " + detail::case_tag(a, s);
                return c;
            }
            ++cases;
        }
    }
    c.detail = std::to_string(cases) + " cases, a <= " + std::to_string(max_a) +
               ", s <= " + std::to_string(max_s);
    return c;
}

inline VerifyCheck check_twin_odd_count(const VerifyOptions& opt) {
    VerifyCheck c{"twin-odd-count", true, ""};
    long long cases = 0;
    for (long long k = 1; k <= opt.max_k; ++k) {
        std::set<Partition> images;
        long long enumerated = 0;
        for_each_c_symmetric(
            k,
            [&](const CSymPath& z) {
                ++enumerated;
                images.insert(core_of_path(phi_map(z)));
            },
            std::max(kDefaultTwinOddLimit, opt.max_k));
        if (BigInt(enumerated) != count_closed_form(k)) {
            c.passed = false;
            c.detail = "count mismatch at k=" + std::to_string(k);
            return c;
        }
        if (k <= 4) {
            const long long a = 2 * k - 1, b = 2 * k + 1;
            std::set<Partition> distinct_cores;
            for_each_ab_core(
                a, b, true, [&](const Partition& p) { distinct_cores.insert(p); },
                detail::poset_limit_for(a, b));
            if (images != distinct_cores) {
                c.passed = false;
                c.detail = "image mismatch at k=" + std::to_string(k);
                return c;
            }
        }
        ++cases;
    }
    c.detail = std::to_string(cases) + " cases, k <= " + std::to_string(opt.max_k);
    return c;
}

inline VerifyCheck check_max_size(const VerifyOptions& opt) {
    VerifyCheck c{"max-size", true, ""};
    long long cases = 0;
    for (long long a = 1; a <= opt.max_a; ++a) {
        const auto rep = max_size_report(a);
        bool ok = true;
        long long observed_max = 0;
        for_each_sparse_vector(a, 1, [&](const AbacusVector& d) {
            const long long size = static_cast<long long>(core_from_abac(d).size());
            observed_max = std::max(observed_max, size);
            const auto gd = gap_decomposition(d);
            if (size_from_gaps(a, gd.n, gd.g) != size) ok = false;
        });
        if (!ok) {
            c.passed = false;
            c.detail = "gap size mismatch at a=" + std::to_string(a);
            return c;
        }
        if (rep.max_size != observed_max) {
            c.passed = false;
            c.detail = "size formula mismatch at a=" + std::to_string(a);
            return c;
        }
        if (a >= 2) {
            const long long want = (a % 3 == 1) ? 2 : 1;
            if (rep.num_maximizers != want) {
                c.passed = false;
                c.detail = "maximizer count mismatch at a=" + std::to_string(a);
                return c;
            }
        }
        ++cases;
    }
    c.detail = std::to_string(cases) + " cases, a <= " + std::to_string(opt.max_a);
    return c;
}

inline VerifyCheck check_total_average(const VerifyOptions& opt) {
    VerifyCheck c{"total-average", true, ""};
    long long cases = 0;
    for (long long a = 1; a <= opt.max_a; ++a) {
        const auto by_enum = total_and_average_size(a, TotalMethod::Enumerate);
        const auto by_conv = total_and_average_size(a, TotalMethod::Convolution);
        if (by_enum.total != by_conv.total || by_enum.average != by_conv.average) {
            c.passed = false;
            c.detail = "method mismatch at a=" + std::to_string(a);
            return c;
        }
        ++cases;
    }
    c.detail = std::to_string(cases) + " cases, a <= " + std::to_string(opt.max_a);
    return c;
}

inline std::vector<VerifyCheck> run_verification(const VerifyOptions& opt) {
    struct Entry {
        const char* name;
        VerifyCheck (*fn)(const VerifyOptions&);
    };
    static const Entry table[] = {
        {"fibonacci-count", check_fibonacci_count},
        {"straub", check_straub},
        {"distinct-family", check_distinct_family},
        {"bijection-roundtrip", check_bijection_roundtrip},
        {"graded-threeway", check_graded_threeway},
        {"bigraded-recurrences", check_bigraded_recurrences},
        {"specialization", check_specialization},
        {"bounce-closed-form", check_bounce_closed_form},
        {"path-sum", check_path_sum},
        {"twin-odd-count", check_twin_odd_count},
        {"max-size", check_max_size},
        {"total-average", check_total_average},
    };
    std::vector<VerifyCheck> out;
    bool matched = false;
    for (const auto& e : table) {
        if (opt.suite != "all" && opt.suite != e.name) continue;
        matched = true;
        out.push_back(e.fn(opt));
    }
    if (!matched) throw invalid_input_error("run_verification: unknown suite " + opt.suite);
    return out;
}

} // namespace corefib
