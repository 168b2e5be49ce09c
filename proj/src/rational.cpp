#include "gnum/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gnum {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return Integer(std::string(s.front() == '+' ? s.substr(1) : s));
}

Rational parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exponent = parse_integer(s.substr(e + 1)).get_si();
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw std::invalid_argument("malformed number");
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed number");
        digits = std::string(s);
    }
    Rational q{Integer(digits)};
    q *= pow(Rational(10), exponent);
    if (negative) q = -q;
    q.canonicalize();
    return q;
}

Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            return Integer(r % n);
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Integer diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, long>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return parse_decimal(text);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& q, long n) {
    if (n == 0) return Rational(1);
    if (n < 0) {
        if (q == 0) throw std::domain_error("zero to a negative power");
        Rational inv(q.get_den(), q.get_num());
        inv.canonicalize();
        return pow(inv, -n);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(n));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::map<Integer, long> factor(const Integer& n) {
    if (n == 0) throw std::domain_error("factor(0)");
    Integer m = abs(n);
    std::map<Integer, long> out;
    for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[Integer(p)] += 1;
            m /= p;
        }
        if (Integer(p) * p > m) break;
    }
    factor_into(m, out);
    return out;
}

std::map<Integer, long> factor(const Rational& q) {
    if (q <= 0) throw std::domain_error("factor of non-positive rational");
    auto out = factor(q.get_num());
    for (const auto& [p, e] : factor(q.get_den())) out[p] -= e;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Integer smallest_prime_factor(const Integer& n) {
    if (n < 2) throw std::domain_error("smallest_prime_factor needs n >= 2");
    return factor(n).begin()->first;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace gnum
