#include "gnum/parser.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "gnum/errors.hpp"
#include "json.hpp"

namespace gnum {

// ---------------------------------------------------------------- registry

Registry Registry::builtin() {
    Registry r;
    r.add("G2", SetDescriptor::geom(Rational(1, 2)));
    r.add("G3", SetDescriptor::geom(Rational(1, 3)));
    r.add("G5", SetDescriptor::geom(Rational(1, 5)));
    for (long m : {2L, 3L, 4L, 6L, 8L, 10L})
        for (long k = 0; k < m; ++k)
            r.add("D" + std::to_string(m) + "_" + std::to_string(k), SetDescriptor::dyadic(m, k));
    r.add("T4", SetDescriptor::tail(Rational(1, 4)));
    r.add("T16", SetDescriptor::tail(Rational(1, 16)));
    return r;
}

void Registry::add(const std::string& name, const SetDescriptor& set) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_'))
        throw std::invalid_argument("registry names must start with a letter: '" + name + "'");
    entries_[name] = set.named(name);
}

std::optional<SetDescriptor> Registry::find(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void Registry::load_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("registry-invalid", std::string("registry is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error("registry-invalid", "registry must be a JSON object");
    std::set<std::string> resolving, built;
    std::function<SetDescriptor(const nlohmann::json&)> build;
    std::function<SetDescriptor(const std::string&)> resolve = [&](const std::string& name) -> SetDescriptor {
        if (!doc.contains(name) || built.count(name)) {
            if (auto known = find(name)) return *known;
            throw UnknownName(name);
        }
        if (resolving.count(name)) throw Error("registry-invalid", "cyclic registry entry '" + name + "'");
        resolving.insert(name);
        SetDescriptor s = build(doc[name]);
        resolving.erase(name);
        add(name, s);
        built.insert(name);
        return *find(name);
    };
    auto rational_field = [](const nlohmann::json& j, const char* field) {
        if (!j.contains(field)) throw Error("registry-invalid", std::string("missing field '") + field + "'");
        const auto& v = j[field];
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        throw Error("registry-invalid", std::string("field '") + field + "' must be a rational string");
    };
    auto operand = [&](const nlohmann::json& v) -> SetDescriptor {
        if (v.is_string()) {
            const auto text = v.get<std::string>();
            if (doc.contains(text) || find(text)) return resolve(text);
            return parse_set(text, *this);
        }
        return build(v);
    };
    build = [&](const nlohmann::json& j) -> SetDescriptor {
        if (!j.is_object() || !j.contains("kind")) throw Error("registry-invalid", "entry needs a 'kind'");
        const auto kind = j["kind"].get<std::string>();
        if (kind == "geomseq") return SetDescriptor::geom(rational_field(j, "rho"));
        if (kind == "dyadic") return SetDescriptor::dyadic(j.at("m").get<long>(), j.at("k").get<long>());
        if (kind == "tail") return SetDescriptor::tail(rational_field(j, "eta"));
        if (kind == "full") return SetDescriptor::full();
        if (kind == "empty") return SetDescriptor::empty();
        if (kind == "levels") return SetDescriptor::levels(j.at("lo").get<long>(), j.value("hi", -1L));
        if (kind == "complement") return ~operand(j.at("of"));
        if (kind == "union" || kind == "intersection") {
            std::vector<SetDescriptor> parts;
            for (const auto& p : j.at("of")) parts.push_back(operand(p));
            return kind == "union" ? SetDescriptor::union_of(parts) : SetDescriptor::intersection_of(parts);
        }
        if (kind == "expr") return parse_set(j.at("text").get<std::string>(), *this);
        throw Error("registry-invalid", "unknown descriptor kind '" + kind + "'");
    };
    for (auto it = doc.begin(); it != doc.end(); ++it) resolve(it.key());
}

void Registry::load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("registry-invalid", "cannot open registry file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    load_json_text(ss.str());
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Number, Ident, Punct, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    bool imaginary = false;
    std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
            if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            t.type = Tok::Number;
            t.text = std::string(s.substr(i, j - i));
            if (j < s.size() && s[j] == 'i' && (j + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[j + 1])))) {
                t.imaginary = true;
                ++j;
            }
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            t.type = Tok::Ident;
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else if (std::string_view("()+-*|~&,^").find(c) != std::string_view::npos) {
            t.type = Tok::Punct;
            t.text = std::string(1, c);
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const Registry& reg) : toks_(lex(text)), reg_(reg) {}

    Germ germ() {
        Germ g = sum();
        expect_end();
        return g;
    }

    SetDescriptor set() {
        SetDescriptor s = set_union();
        expect_end();
        return s;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    bool at(const char* p) const { return peek().type == Tok::Punct && peek().text == p; }
    bool at_ident(const char* name) const { return peek().type == Tok::Ident && peek().text == name; }
    Token next() { return toks_[i_++]; }

    void expect(const char* p) {
        if (!at(p)) fail(std::string("expected '") + p + "'");
        ++i_;
    }
    void expect_end() {
        if (peek().type != Tok::End) fail("unexpected '" + peek().text + "'");
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().pos); }

    Rational signed_rational() {
        bool negative = false;
        while (at("-") || at("+")) negative ^= next().text == "-";
        if (peek().type != Tok::Number || peek().imaginary) fail("expected a rational number");
        Rational q = parse_rational(next().text);
        return negative ? Rational(-q) : q;
    }

    long integer() {
        Rational q = signed_rational();
        if (!is_integer(q) || !q.get_num().fits_slong_p()) fail("expected an integer");
        return q.get_num().get_si();
    }

    static Germ negate(const Germ& g) {
        if (g.kind() == GermKind::Const) return Germ::constant(-g.value());
        return Germ::neg(g);
    }

    static bool real_const(const Germ& g) { return g.kind() == GermKind::Const && g.value().is_real(); }
    static bool imag_const(const Germ& g) {
        return g.kind() == GermKind::Const && g.value().real().is_zero() && !g.value().imag().is_zero();
    }

    Germ sum() {
        std::vector<Germ> items{product()};
        while (at("+") || at("-")) {
            const bool minus = next().text == "-";
            Germ t = product();
            items.push_back(minus ? negate(t) : t);
        }
        std::vector<Germ> folded;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (k + 1 < items.size() && real_const(items[k]) && imag_const(items[k + 1])) {
                folded.push_back(Germ::constant(items[k].value() + items[k + 1].value()));
                ++k;
            } else {
                folded.push_back(items[k]);
            }
        }
        return Germ::add(folded);
    }

    Germ product() {
        std::vector<Germ> items{unary()};
        while (at("*")) {
            ++i_;
            items.push_back(unary());
        }
        return Germ::mul(items);
    }

    Germ unary() {
        if (at("-")) {
            ++i_;
            return negate(unary());
        }
        return primary();
    }

    Germ call_arg() {
        expect("(");
        Germ g = sum();
        expect(")");
        return g;
    }

    Germ primary() {
        const Token& t = peek();
        if (t.type == Tok::Number) {
            ++i_;
            Rational q = parse_rational(t.text);
            if (t.imaginary) return Germ::constant(ExactScalar::imaginary(q));
            if (at("^")) {
                ++i_;
                Rational e;
                if (at("(")) {
                    ++i_;
                    e = signed_rational();
                    expect(")");
                } else {
                    e = signed_rational();
                }
                if (q <= 0) fail("radical base must be positive");
                return Germ::constant(ExactScalar(Surd::power(q, e)));
            }
            return Germ::constant(ExactScalar(q));
        }
        if (at("(")) {
            ++i_;
            Germ g = sum();
            expect(")");
            return g;
        }
        if (at("|")) {
            ++i_;
            Germ g = sum();
            expect("|");
            return Germ::abs(g);
        }
        if (t.type != Tok::Ident) fail(t.type == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        const std::string name = t.text;
        ++i_;
        if (name == "i") return Germ::constant(ExactScalar::imaginary(Rational(1)));
        if (name == "alpha") {
            expect("(");
            Rational r = signed_rational();
            expect(")");
            return Germ::alpha(r);
        }
        if (name == "chi") {
            expect("(");
            SetDescriptor s = set_union();
            expect(")");
            return Germ::chi(s);
        }
        if (name == "abs") return Germ::abs(call_arg());
        if (name == "re") return Germ::re(call_arg());
        if (name == "im") return Germ::im(call_arg());
        if (name == "conj") return Germ::conj(call_arg());
        if (name == "sin" || name == "cos") {
            expect("(");
            if (!at_ident("alpha")) fail("oscillators take alpha(-s) as argument");
            ++i_;
            expect("(");
            Rational r = signed_rational();
            expect(")");
            expect(")");
            if (r > 0) fail("oscillator argument must be alpha(-s) with s >= 0");
            return Germ::osc(name == "sin" ? OscKind::Sin : OscKind::Cos, -r);
        }
        if (name == "primescale") {
            expect("(");
            expect(")");
            return Germ::prime_scale();
        }
        --i_;
        fail("unknown function '" + name + "'");
    }

    SetDescriptor set_union() {
        std::vector<SetDescriptor> parts{set_inter()};
        while (at("|")) {
            ++i_;
            parts.push_back(set_inter());
        }
        return parts.size() == 1 ? parts.front() : SetDescriptor::union_of(parts);
    }

    SetDescriptor set_inter() {
        std::vector<SetDescriptor> parts{set_unary()};
        while (at("&")) {
            ++i_;
            parts.push_back(set_unary());
        }
        return parts.size() == 1 ? parts.front() : SetDescriptor::intersection_of(parts);
    }

    SetDescriptor set_unary() {
        if (at("~")) {
            ++i_;
            return ~set_unary();
        }
        if (at("(")) {
            ++i_;
            SetDescriptor s = set_union();
            expect(")");
            return s;
        }
        if (peek().type != Tok::Ident) fail("expected a set descriptor");
        const Token t = next();
        const std::string& name = t.text;
        try {
            if (name == "full") return SetDescriptor::full();
            if (name == "empty") return SetDescriptor::empty();
            if (name == "geom" || name == "tail") {
                expect("(");
                Rational r = signed_rational();
                expect(")");
                return name == "geom" ? SetDescriptor::geom(r) : SetDescriptor::tail(r);
            }
            if (name == "dyadic") {
                expect("(");
                long m = integer();
                expect(",");
                long k = integer();
                expect(")");
                return SetDescriptor::dyadic(m, k);
            }
            if (name == "levels") {
                expect("(");
                long lo = integer();
                long hi = -1;
                if (at(",")) {
                    ++i_;
                    hi = integer();
                }
                expect(")");
                return SetDescriptor::levels(lo, hi);
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), t.pos);
        }
        if (auto s = reg_.find(name)) return *s;
        throw UnknownName(name);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    const Registry& reg_;
};

// ---------------------------------------------------------------- formatter

enum Prec { kSum = 0, kProduct = 1, kUnary = 2 };

std::string const_text(const ExactScalar& c) {
    if (c.is_real() && !c.real().is_rational()) return "(" + c.to_string() + ")";
    return c.to_string();
}

bool negative_real_const(const Germ& g) {
    return g.kind() == GermKind::Const && g.value().is_real() && g.value().real().sign() < 0;
}

bool negative_imag_const(const Germ& g) {
    return g.kind() == GermKind::Const && g.value().real().is_zero() && g.value().imag().is_rational() &&
           g.value().imag().sign() < 0;
}

std::string fmt(const Germ& g, Prec ctx) {
    auto wrap = [&](std::string s, Prec own) { return own < ctx ? "(" + s + ")" : s; };
    switch (g.kind()) {
        case GermKind::Const: {
            std::string s = const_text(g.value());
            if (ctx == kUnary && negative_real_const(g)) return "(" + s + ")";
            return s;
        }
        case GermKind::Alpha: return "alpha(" + to_string(g.exponent()) + ")";
        case GermKind::Chi: return "chi(" + g.set().to_string() + ")";
        case GermKind::Osc:
            return std::string(g.osc_kind() == OscKind::Sin ? "sin" : "cos") + "(alpha(" + to_string(-g.exponent()) + "))";
        case GermKind::PrimeScale: return "primescale()";
        case GermKind::Abs: return "|" + fmt(g.children().front(), kSum) + "|";
        case GermKind::Re: return "re(" + fmt(g.children().front(), kSum) + ")";
        case GermKind::Im: return "im(" + fmt(g.children().front(), kSum) + ")";
        case GermKind::Conj: return "conj(" + fmt(g.children().front(), kSum) + ")";
        case GermKind::Neg: {
            const Germ& c = g.children().front();
            std::string inner = (c.kind() == GermKind::Mul || c.kind() == GermKind::Add || c.kind() == GermKind::Const)
                                    ? "(" + fmt(c, kSum) + ")"
                                    : fmt(c, kUnary);
            return wrap("-" + inner, kUnary);
        }
        case GermKind::Mul: {
            std::string out;
            for (const auto& c : g.children()) {
                if (!out.empty()) out += " * ";
                out += fmt(c, kProduct);
            }
            return wrap(out, kProduct);
        }
        case GermKind::Add: {
            std::string out;
            bool first = true;
            for (const auto& c : g.children()) {
                if (first) {
                    out += c.kind() == GermKind::Add ? "(" + fmt(c, kSum) + ")" : fmt(c, kProduct);
                } else if (c.kind() == GermKind::Neg) {
                    const Germ& inner = c.children().front();
                    out += " - " + (inner.kind() == GermKind::Add || inner.kind() == GermKind::Const
                                        ? "(" + fmt(inner, kSum) + ")"
                                        : fmt(inner, kProduct));
                } else if (negative_real_const(c) || negative_imag_const(c)) {
                    out += " - " + const_text(-c.value());
                } else {
                    out += " + " + (c.kind() == GermKind::Add ? "(" + fmt(c, kSum) + ")" : fmt(c, kProduct));
                }
                first = false;
            }
            return wrap(out, kSum);
        }
    }
    return "?";
}

}  // namespace

Germ parse_germ(std::string_view text, const Registry& registry) { return Parser(text, registry).germ(); }

SetDescriptor parse_set(std::string_view text, const Registry& registry) { return Parser(text, registry).set(); }

std::string format(const Germ& x) { return fmt(x, kSum); }

}  // namespace gnum
