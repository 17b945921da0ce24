#pragma once

#include <map>
#include <string>
#include <utility>

#include "errors.hpp"
#include "numeric.hpp"

namespace corefib {

// element of Z[q,t] in canonical form: map from (q_exp, t_exp) to a nonzero
// arbitrary-precision coefficient, nonnegative exponents only
class QtPolynomial {
public:
    using Exponents = std::pair<long long, long long>;

    QtPolynomial() = default;
    QtPolynomial(long long c) { if (c != 0) terms_[{0, 0}] = c; }
    QtPolynomial(const BigInt& c) { if (c != 0) terms_[{0, 0}] = c; }

    static QtPolynomial monomial(const BigInt& coeff, long long q_exp, long long t_exp) {
        if (q_exp < 0 || t_exp < 0)
            throw invalid_input_error("QtPolynomial: exponents must be nonnegative");
        QtPolynomial p;
        if (coeff != 0) p.terms_[{q_exp, t_exp}] = coeff;
        return p;
    }
    static QtPolynomial q(long long e = 1) { return monomial(1, e, 0); }
    static QtPolynomial t(long long e = 1) { return monomial(1, 0, e); }

    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    BigInt coeff(long long q_exp, long long t_exp) const {
        auto it = terms_.find({q_exp, t_exp});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    long long q_degree() const {
        long long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    long long t_degree() const {
        long long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    void add_term(long long q_exp, long long t_exp, const BigInt& c) {
        if (c == 0) return;
        if (q_exp < 0 || t_exp < 0)
            throw invalid_input_error("QtPolynomial: exponents must be nonnegative");
        auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QtPolynomial& operator+=(const QtPolynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    QtPolynomial& operator-=(const QtPolynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    QtPolynomial operator-() const {
        QtPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }
    friend QtPolynomial operator+(QtPolynomial lhs, const QtPolynomial& rhs) { return lhs += rhs; }
    friend QtPolynomial operator-(QtPolynomial lhs, const QtPolynomial& rhs) { return lhs -= rhs; }
    friend QtPolynomial operator*(const QtPolynomial& lhs, const QtPolynomial& rhs) {
        QtPolynomial out;
        for (const auto& [el, cl] : lhs.terms_)
            for (const auto& [er, cr] : rhs.terms_)
                out.add_term(el.first + er.first, el.second + er.second, cl * cr);
        return out;
    }

    friend bool operator==(const QtPolynomial&, const QtPolynomial&) = default;

private:
    std::map<Exponents, BigInt> terms_;
};

inline QtPolynomial poly_pow(const QtPolynomial& base, long long e) {
    if (e < 0) throw invalid_input_error("poly_pow: exponent must be nonnegative");
    QtPolynomial out(1);
    for (long long i = 0; i < e; ++i) out = out * base;
    return out;
}

// 1 + base + ... + base^(s-1)
inline QtPolynomial q_integer(long long s, const QtPolynomial& base = QtPolynomial::q()) {
    if (s < 1) throw invalid_input_error("q_integer: s must be positive");
    if (!base.is_monomial() || base.terms().begin()->second != 1)
        throw invalid_input_error("q_integer: base must be a monomial with coefficient 1");
    QtPolynomial sum, power(1);
    for (long long i = 0; i < s; ++i) {
        sum += power;
        power = power * base;
    }
    return sum;
}

inline QtPolynomial monomial_substitute(const QtPolynomial& p, const QtPolynomial& q_image,
                                        const QtPolynomial& t_image) {
    auto image_exponents = [](const QtPolynomial& m) {
        if (!m.is_monomial() || m.terms().begin()->second != 1)
            throw invalid_input_error("monomial_substitute: images must be monomials with coefficient 1");
        return m.terms().begin()->first;
    };
    const auto qi = image_exponents(q_image);
    const auto ti = image_exponents(t_image);
    QtPolynomial out;
    for (const auto& [e, c] : p.terms())
        out.add_term(e.first * qi.first + e.second * ti.first,
                     e.first * qi.second + e.second * ti.second, c);
    return out;
}

inline BigRational evaluate(const QtPolynomial& p, const BigRational& q_val,
                            const BigRational& t_val) {
    auto power = [](const BigRational& base, long long e) {
        BigRational r(1);
        for (long long i = 0; i < e; ++i) r *= base;
        return r;
    };
    BigRational total(0);
    for (const auto& [e, c] : p.terms())
        total += BigRational(c) * power(q_val, e.first) * power(t_val, e.second);
    return total;
}

// drop every term of q-degree above max_q_deg
inline QtPolynomial truncate_q(const QtPolynomial& p, long long max_q_deg) {
    QtPolynomial out;
    for (const auto& [e, c] : p.terms())
        if (e.first <= max_q_deg) out.add_term(e.first, e.second, c);
    return out;
}

// t_exp -> pivot - t_exp
inline QtPolynomial reflect_t(const QtPolynomial& p, long long pivot) {
    QtPolynomial out;
    for (const auto& [e, c] : p.terms()) {
        if (e.second > pivot)
            throw invalid_input_error("reflect_t: a t-exponent exceeds the pivot");
        out.add_term(e.first, pivot - e.second, c);
    }
    return out;
}

inline std::string to_string(const QtPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string factors;
        if (e.first > 0) factors += e.first == 1 ? "q" : "q^" + std::to_string(e.first);
        if (e.second > 0) {
            if (!factors.empty()) factors += "*";
            factors += e.second == 1 ? "t" : "t^" + std::to_string(e.second);
        }
        if (factors.empty())
            out += mag.str();
        else if (mag == 1)
            out += factors;
        else
            out += mag.str() + "*" + factors;
    }
    return out;
}

} // namespace corefib
