#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "corefib.hpp"

namespace corefib::cli {

// exit codes: 0 success, 1 verification failed, 2 invalid input, 3 resource limit
namespace detail {

inline std::string join(const std::vector<long long>& v, const char* sep = ",") {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

inline std::string partition_text(const Partition& p) {
    return p.empty() ? "-" : join(p.parts());
}

inline std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
    if (trimmed.empty() || trimmed == "-") return out;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw invalid_input_error("expected a comma separated list of integers, got '" +
                                      text + "'");
        }
    }
    return out;
}

inline Json big_to_json(const BigInt& n) {
    static const BigInt max_ll = std::numeric_limits<long long>::max();
    if (n <= max_ll && n >= 0) return Json(n.convert_to<long long>());
    return Json(n.str());
}

inline FibMethod fib_method_from(const std::string& name) {
    if (name.empty() || name == "closed") return FibMethod::Closed;
    if (name == "direct") return FibMethod::Direct;
    if (name == "recurrence") return FibMethod::Recurrence;
    throw invalid_input_error("unknown --method '" + name +
                              "' (expected direct, recurrence, or closed)");
}

inline TotalMethod total_method_from(const std::string& name) {
    if (name.empty() || name == "convolution") return TotalMethod::Convolution;
    if (name == "enumerate") return TotalMethod::Enumerate;
    throw invalid_input_error("unknown --method '" + name +
                              "' (expected enumerate or convolution)");
}

inline void print_poly(std::ostream& out, const QtPolynomial& p, const std::string& format) {
    if (format == "json") {
        out << to_json(p).dump() << "\n";
    } else if (format == "csv") {
        out << "q,t,c\n";
        for (const auto& [e, c] : p.terms())
            out << e.first << "," << e.second << "," << c << "\n";
    } else {
        out << to_string(p) << "\n";
    }
}

} // namespace detail

struct Options {
    long long a = 0;
    long long b = 0;
    long long s = 0;
    long long k = 0;
    long long truncation = 0;
    long long max_a = 8;
    long long max_s = 2;
    long long max_k = 3;
    long long limit = 0;
    bool distinct = false;
    bool bigraded = false;
    bool normalized = false;
    bool table = false;
    std::string method;
    std::string format = "text";
    std::string suite = "all";
    std::string partition_arg;
    std::string path_arg;
};

// runs one invocation; args exclude the program name
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"simultaneous core partitions: bijections, statistics, and counts", "corefib"};
    app.require_subcommand(1);

    auto* cmd_count = app.add_subcommand("count", "count (a,b)-cores");
    auto* cmd_enum = app.add_subcommand("enumerate", "list (a,b)-cores");
    auto* cmd_bij = app.add_subcommand("bijection", "convert between cores, paths, and abacus vectors");
    auto* bij_to_path = cmd_bij->add_subcommand("to-path", "core to lattice path");
    auto* bij_to_core = cmd_bij->add_subcommand("to-core", "lattice path to core");
    auto* bij_to_abacus = cmd_bij->add_subcommand("to-abacus", "core to abacus vector");
    cmd_bij->require_subcommand(1);
    auto* cmd_poly = app.add_subcommand("poly", "graded and bigraded polynomials");
    auto* poly_fib = cmd_poly->add_subcommand("fib", "Fibonacci-type distinct-core polynomial");
    auto* poly_catalan = cmd_poly->add_subcommand("catalan", "area/bounce polynomial over all paths");
    auto* poly_series = cmd_poly->add_subcommand("series", "generating series coefficients");
    cmd_poly->require_subcommand(1);
    auto* cmd_bounce = app.add_subcommand("bounce", "run the bounce walk on a path");
    auto* cmd_extremal = app.add_subcommand("extremal", "largest and average distinct-core sizes");
    auto* cmd_twin = app.add_subcommand("twin-odd", "distinct-parts (2k-1,2k+1)-core counts");
    auto* cmd_verify = app.add_subcommand("verify", "replay internal cross-checks");

    for (CLI::App* leaf : {cmd_count, cmd_enum, bij_to_path, bij_to_core, bij_to_abacus,
                           poly_fib, poly_catalan, poly_series, cmd_bounce, cmd_extremal,
                           cmd_twin, cmd_verify}) {
        leaf->add_option("--format", o.format, "output format: text, csv, or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        leaf->add_option("--limit", o.limit, "enumeration guard override");
    }

    cmd_count->add_option("--a", o.a, "number of columns / first modulus")->required();
    cmd_count->add_option("--b", o.b, "second modulus");
    cmd_count->add_option("--s", o.s, "use b = a*s + 1");
    cmd_count->add_flag("--distinct", o.distinct, "restrict to distinct parts");

    cmd_enum->add_option("--a", o.a, "first modulus")->required();
    cmd_enum->add_option("--b", o.b, "second modulus");
    cmd_enum->add_option("--s", o.s, "use b = a*s + 1");
    cmd_enum->add_flag("--distinct", o.distinct, "restrict to distinct parts");

    bij_to_path->add_option("--partition", o.partition_arg, "comma separated parts, '-' for empty")
        ->required();
    bij_to_path->add_option("--a", o.a, "first modulus")->required();
    bij_to_path->add_option("--b", o.b, "second modulus")->required();

    bij_to_core->add_option("--path", o.path_arg, "steps over {N, E}, e.g. NNENE")->required();
    bij_to_core->add_option("--a", o.a, "expected number of east steps");
    bij_to_core->add_option("--b", o.b, "expected number of north steps");

    bij_to_abacus->add_option("--partition", o.partition_arg, "comma separated parts, '-' for empty")
        ->required();
    bij_to_abacus->add_option("--a", o.a, "modulus")->required();

    poly_fib->add_option("--a", o.a, "index in the recurrence")->required();
    poly_fib->add_option("--s", o.s, "family parameter, b = a*s + 1");
    poly_fib->add_option("--truncation", o.truncation, "degree cap for the s -> infinity limit");
    poly_fib->add_option("--method", o.method, "direct, recurrence, or closed");
    poly_fib->add_flag("--bigraded", o.bigraded, "track both statistics");
    poly_fib->add_flag("--normalized", o.normalized, "emit the unreflected bigraded form");

    poly_catalan->add_option("--a", o.a, "number of east steps")->required();
    poly_catalan->add_option("--s", o.s, "family parameter, b = a*s + 1")->required();

    poly_series->add_option("--s", o.s, "family parameter")->required();
    poly_series->add_option("--max-a", o.max_a, "largest index to expand");

    cmd_bounce->add_option("--path", o.path_arg, "steps over {N, E}")->required();
    cmd_bounce->add_option("--s", o.s, "family parameter, b = a*s + 1")->required();

    cmd_extremal->add_option("--a", o.a, "modulus, b = a + 1")->required();
    cmd_extremal->add_option("--method", o.method, "enumerate or convolution");

    cmd_twin->add_option("--k", o.k, "twin odd parameter, moduli 2k-1 and 2k+1")->required();
    cmd_twin->add_flag("--table", o.table, "also list each symmetric path and its core");

    cmd_verify->add_option("--suite", o.suite, "check name or 'all'");
    cmd_verify->add_option("--max-a", o.max_a, "largest modulus to test");
    cmd_verify->add_option("--max-s", o.max_s, "largest family parameter to test");
    cmd_verify->add_option("--max-k", o.max_k, "largest twin odd parameter to test");

    std::vector<const char*> argv;
    argv.push_back("corefib");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    const bool json = o.format == "json";
    const bool csv = o.format == "csv";

    try {
        if (*cmd_count || *cmd_enum) {
            long long b = o.b;
            if (o.s > 0) {
                if (b > 0 && b != o.a * o.s + 1)
                    throw invalid_input_error("--b and --s disagree");
                b = o.a * o.s + 1;
            }
            if (b <= 0) throw invalid_input_error("provide --b or --s");
            const long long limit = o.limit > 0 ? o.limit : kDefaultPosetLimit;
            if (*cmd_count) {
                const BigInt n = count_ab_cores(o.a, b, o.distinct, limit);
                if (json)
                    out << Json{{"a", o.a},
                                {"b", b},
                                {"distinct", o.distinct},
                                {"count", detail::big_to_json(n)}}
                               .dump()
                        << "\n";
                else
                    out << n << "\n";
            } else {
                auto cores = enumerate_ab_cores(o.a, b, o.distinct, limit);
                std::sort(cores.begin(), cores.end(), [](const Partition& x, const Partition& y) {
                    if (x.size() != y.size()) return x.size() < y.size();
                    return x.parts() < y.parts();
                });
                if (json) {
                    Json arr = Json::array();
                    for (const auto& p : cores) arr.push_back(to_json(p));
                    out << arr.dump() << "\n";
                } else {
                    for (const auto& p : cores) out << detail::partition_text(p) << "\n";
                }
            }
        } else if (*cmd_bij) {
            if (*bij_to_path) {
                const Partition kappa(detail::parse_int_list(o.partition_arg));
                const DyckPath p = path_of_core(kappa, o.a, o.b);
                if (json)
                    out << to_json(p).dump() << "\n";
                else if (csv)
                    out << detail::join(p.east_heights()) << "\n";
                else
                    out << p.steps() << "\n";
            } else if (*bij_to_core) {
                const DyckPath p = path_from_steps(o.path_arg);
                if (o.a > 0 && p.a() != o.a)
                    throw invalid_input_error("path has " + std::to_string(p.a()) +
                                              " east steps, not --a");
                if (o.b > 0 && p.b() != o.b)
                    throw invalid_input_error("path has " + std::to_string(p.b()) +
                                              " north steps, not --b");
                const Partition kappa = core_of_path(p);
                if (json)
                    out << to_json(kappa).dump() << "\n";
                else
                    out << detail::partition_text(kappa) << "\n";
            } else {
                const Partition kappa(detail::parse_int_list(o.partition_arg));
                const AbacusVector d = abac(kappa, o.a);
                if (json)
                    out << to_json(d).dump() << "\n";
                else
                    out << detail::join(d.entries()) << "\n";
            }
        } else if (*cmd_poly) {
            if (*poly_fib) {
                QtPolynomial p;
                if (o.truncation > 0) {
                    p = graded_fib_limit(o.a, o.truncation);
                } else if (o.bigraded) {
                    if (o.s < 1) throw invalid_input_error("poly fib needs --s or --truncation");
                    const BigradedFib bg = bigraded_fib(o.a, o.s);
                    p = o.normalized ? bg.tildeF : bg.F;
                } else {
                    if (o.s < 1) throw invalid_input_error("poly fib needs --s or --truncation");
                    p = graded_fib(o.a, o.s, detail::fib_method_from(o.method));
                }
                detail::print_poly(out, p, o.format);
            } else if (*poly_catalan) {
                const long long limit = o.limit > 0 ? o.limit : kDefaultPathEnumerationLimit;
                detail::print_poly(out, bigraded_catalan(o.a, o.s, limit), o.format);
            } else {
                if (o.s < 1) throw invalid_input_error("poly series needs --s >= 1");
                const auto coeffs = gen_series_coeffs(o.s, o.max_a);
                if (json) {
                    Json arr = Json::array();
                    for (const auto& p : coeffs) arr.push_back(to_json(p));
                    out << arr.dump() << "\n";
                } else if (csv) {
                    out << "a,q,t,c\n";
                    for (size_t a = 0; a < coeffs.size(); ++a)
                        for (const auto& [e, c] : coeffs[a].terms())
                            out << a << "," << e.first << "," << e.second << "," << c << "\n";
                } else {
                    for (size_t a = 0; a < coeffs.size(); ++a)
                        out << "a=" << a << ": " << to_string(coeffs[a]) << "\n";
                }
            }
        } else if (*cmd_bounce) {
            const DyckPath p = path_from_steps(o.path_arg);
            const BounceRecord rec = bounce_walk(p, o.s);
            if (json) {
                out << to_json(rec).dump() << "\n";
            } else {
                const std::vector<long long> rows(rec.bounce_rows.begin(), rec.bounce_rows.end());
                out << "v: " << detail::join(rec.v) << "\n"
                    << "w: " << detail::join(rec.w) << "\n"
                    << "bounce_rows: " << detail::join(rows) << "\n"
                    << "bounce: " << rec.bounce << "\n";
            }
        } else if (*cmd_extremal) {
            const MaxSizeReport rep = max_size_report(o.a);
            const TotalAverage ta =
                total_and_average_size(o.a, detail::total_method_from(o.method));
            if (json) {
                Json j = to_json(rep);
                j["a"] = o.a;
                j.update(to_json(ta));
                out << j.dump() << "\n";
            } else {
                out << "max_size: " << rep.max_size << "\n"
                    << "num_maximizers: " << rep.num_maximizers << "\n";
                for (const auto& m : rep.maximizers)
                    out << "maximizer: " << detail::partition_text(m) << "\n";
                out << "total_size: " << ta.total << "\n"
                    << "average_size: " << rational_to_string(ta.average) << "\n";
            }
        } else if (*cmd_twin) {
            const long long limit = o.limit > 0 ? o.limit : kDefaultTwinOddLimit;
            long long count = 0;
            std::vector<std::pair<std::vector<long long>, Partition>> table;
            for_each_c_symmetric(
                o.k,
                [&](const CSymPath& z) {
                    ++count;
                    if (o.table) table.emplace_back(z.heights, core_of_path(phi_map(z)));
                },
                limit);
            const BigInt closed = count_closed_form(o.k);
            const bool agree = BigInt(count) == closed;
            if (json) {
                Json j{{"k", o.k},
                       {"count", count},
                       {"closed_form", detail::big_to_json(closed)},
                       {"agree", agree}};
                if (o.table) {
                    Json rows = Json::array();
                    for (const auto& [heights, core] : table)
                        rows.push_back(Json{{"heights", heights}, {"core", to_json(core)}});
                    j["table"] = rows;
                }
                out << j.dump() << "\n";
            } else if (csv) {
                out << "count," << count << "\n"
                    << "closed_form," << closed << "\n"
                    << "agree," << (agree ? "yes" : "no") << "\n";
                for (const auto& [heights, core] : table)
                    out << "\"" << detail::join(heights) << "\",\""
                        << detail::partition_text(core) << "\"\n";
            } else {
                out << "count: " << count << "\n"
                    << "closed_form: " << closed << "\n"
                    << "agree: " << (agree ? "yes" : "no") << "\n";
                for (const auto& [heights, core] : table)
                    out << detail::join(heights) << " -> " << detail::partition_text(core)
                        << "\n";
            }
        } else if (*cmd_verify) {
            VerifyOptions vopt{o.max_a, o.max_s, o.max_k, o.suite};
            const auto checks = run_verification(vopt);
            long long passed = 0;
            for (const auto& c : checks) passed += c.passed ? 1 : 0;
            const bool all = passed == static_cast<long long>(checks.size());
            if (json) {
                Json arr = Json::array();
                for (const auto& c : checks)
                    arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                out << Json{{"checks", arr}, {"passed", all}}.dump() << "\n";
            } else if (csv) {
                out << "status,name,detail\n";
                for (const auto& c : checks)
                    out << (c.passed ? "pass" : "fail") << "," << c.name << ",\"" << c.detail
                        << "\"\n";
            } else {
                for (const auto& c : checks)
                    out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << c.name
                        << " " << c.detail << "\n";
                out << passed << "/" << checks.size() << " checks passed\n";
            }
            return all ? 0 : 1;
        }
    } catch (const invalid_input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace corefib::cli
