#include "gnum/surd.hpp"

#include <stdexcept>

namespace gnum {

std::string RadicalKey::to_string() const {
    std::string out;
    for (const auto& [p, f] : factors) {
        if (!out.empty()) out += "*";
        out += p.get_str() + "^(" + gnum::to_string(f) + ")";
    }
    return out;
}

bool RadicalKeyLess::operator()(const RadicalKey& a, const RadicalKey& b) const {
    const auto n = std::min(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp(a.factors[i].first, b.factors[i].first); c != 0) return c < 0;
        if (int c = cmp(a.factors[i].second, b.factors[i].second); c != 0) return c < 0;
    }
    return a.factors.size() < b.factors.size();
}

namespace {

// Multiplies two keys; integer carries are folded into the returned rational.
std::pair<RadicalKey, Rational> multiply_keys(const RadicalKey& a, const RadicalKey& b) {
    RadicalKey out;
    Rational carry = 1;
    std::size_t i = 0, j = 0;
    auto push = [&](const Integer& p, Rational f) {
        if (f >= 1) {
            f -= 1;
            carry *= p;
        }
        if (f != 0) out.factors.emplace_back(p, f);
    };
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
            push(a.factors[i].first, a.factors[i].second);
            ++i;
        } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
            push(b.factors[j].first, b.factors[j].second);
            ++j;
        } else {
            push(a.factors[i].first, a.factors[i].second + b.factors[j].second);
            ++i;
            ++j;
        }
    }
    return {out, carry};
}

}  // namespace

Surd::Surd(const Rational& q) {
    if (q != 0) {
        Rational c = q;
        c.canonicalize();
        terms_.emplace(RadicalKey{}, std::move(c));
    }
}

void Surd::add_term(const RadicalKey& key, const Rational& coef) {
    if (coef == 0) return;
    Rational c = coef;
    c.canonicalize();
    auto [it, inserted] = terms_.emplace(key, std::move(c));
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

Surd Surd::power(const Rational& base, const Rational& exponent) {
    if (base <= 0) throw std::domain_error("Surd::power needs a positive base");
    Rational exp_c = exponent;
    exp_c.canonicalize();
    Rational coef = 1;
    RadicalKey key;
    for (const auto& [p, e] : factor(base)) {
        Rational t = Rational(e) * exp_c;
        Integer whole = floor(t);
        Rational frac = t - Rational(whole);
        if (!whole.fits_slong_p()) throw std::domain_error("exponent too large");
        coef *= pow(Rational(p), whole.get_si());
        if (frac != 0) key.factors.emplace_back(p, frac);
    }
    Surd s;
    s.add_term(key, coef);
    return s;
}

bool Surd::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> Surd::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (is_rational()) return terms_.begin()->second;
    return std::nullopt;
}

Surd Surd::operator-() const {
    Surd r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Surd operator+(const Surd& a, const Surd& b) {
    Surd r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

Surd operator*(const Surd& a, const Surd& b) {
    Surd r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            auto [k, carry] = multiply_keys(ka, kb);
            r.add_term(k, ca * cb * carry);
        }
    }
    return r;
}

bool operator==(const Surd& a, const Surd& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    RadicalKeyLess less;
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first) || less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

int Surd::sign() const {
    if (terms_.empty()) return 0;
    if (auto q = rational_value()) return sgn(*q);
    if (terms_.size() == 1) return sgn(terms_.begin()->second);
    for (mpfr_prec_t bits = 64; bits <= (1 << 20); bits *= 2) {
        Interval iv = enclose(bits);
        if (iv.strictly_positive()) return 1;
        if (iv.strictly_negative()) return -1;
    }
    throw std::logic_error("surd sign refinement did not terminate");
}

std::optional<Surd> Surd::sqrt() const {
    if (terms_.size() != 1 || sign() <= 0) return std::nullopt;
    const auto& [key, coef] = *terms_.begin();
    Surd r = power(coef, Rational(1, 2));
    for (const auto& [p, f] : key.factors) r *= power(Rational(p), f / 2);
    return r;
}

std::optional<Surd> Surd::inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [key, coef] = *terms_.begin();
    Surd r(1 / coef);
    for (const auto& [p, f] : key.factors) r *= power(Rational(p), -f);
    return r;
}

Interval Surd::enclose(mpfr_prec_t bits) const {
    Interval acc = Interval::point(Rational(0), bits);
    for (const auto& [key, coef] : terms_) {
        Interval t = Interval::point(coef, bits);
        for (const auto& [p, f] : key.factors) t = t * Interval::rational_power(Rational(p), f, bits);
        acc = acc + t;
    }
    return acc;
}

std::string Surd::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coef] : terms_) {
        Rational mag = ::abs(coef);
        std::string body;
        if (key.empty()) body = gnum::to_string(mag);
        else if (mag == 1) body = key.to_string();
        else body = gnum::to_string(mag) + "*" + key.to_string();
        if (first) out += (coef < 0 ? "-" : "") + body;
        else out += (coef < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

int compare_surd(const Surd& a, const Surd& b) { return (a - b).sign(); }

bool ExactScalar::is_one() const { return im_.is_zero() && re_ == Surd(Rational(1)); }

std::optional<Surd> ExactScalar::modulus() const {
    if (im_.is_zero()) return re_.abs();
    if (re_.is_zero()) return im_.abs();
    return norm_squared().sqrt();
}

std::optional<ExactScalar> ExactScalar::inverse() const {
    if (is_zero()) return std::nullopt;
    if (im_.is_zero()) {
        auto inv = re_.inverse();
        if (!inv) return std::nullopt;
        return ExactScalar(*inv);
    }
    auto n2inv = norm_squared().inverse();
    if (!n2inv) return std::nullopt;
    return conj() * ExactScalar(*n2inv);
}

Interval ExactScalar::modulus_enclosure(mpfr_prec_t bits) const {
    if (auto m = modulus()) return m->enclose(bits);
    Interval r = re_.enclose(bits);
    Interval i = im_.enclose(bits);
    return (r.square() + i.square()).sqrt();
}

std::string ExactScalar::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    auto imag_text = [](const Surd& s) {
        if (s.is_rational()) return s.to_string() + "i";
        return "(" + s.to_string() + ")i";
    };
    if (re_.is_zero()) return imag_text(im_);
    std::string im_text = imag_text(im_);
    if (im_.is_rational() && im_.sign() < 0) return "(" + re_.to_string() + im_text + ")";
    return "(" + re_.to_string() + "+" + im_text + ")";
}

}  // namespace gnum
