#include "gnum/sets.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "gnum/errors.hpp"

namespace gnum {

std::string to_string(TailClass c) {
    switch (c) {
        case TailClass::FullTail: return "FullTail";
        case TailClass::NullTail: return "NullTail";
        case TailClass::Proper: return "Proper";
    }
    return "?";
}

TailClass swap(TailClass c) {
    if (c == TailClass::FullTail) return TailClass::NullTail;
    if (c == TailClass::NullTail) return TailClass::FullTail;
    return c;
}

namespace {

std::string wrap_key(const SetDescriptor& d, SetKind parent, bool display) {
    std::string text = display ? d.to_string() : d.key();
    if (display && !d.name().empty()) return text;
    const SetKind k = d.kind();
    if (k == SetKind::Or && parent != SetKind::Or) return "(" + text + ")";
    if (k == SetKind::And && parent == SetKind::Not) return "(" + text + ")";
    return text;
}

std::string compose(const SetNode& n, bool display) {
    switch (n.kind) {
        case SetKind::Full: return "full";
        case SetKind::Empty: return "empty";
        case SetKind::Geom: return "geom(" + to_string(n.param) + ")";
        case SetKind::Dyadic: return "dyadic(" + std::to_string(n.a) + "," + std::to_string(n.b) + ")";
        case SetKind::Tail: return "tail(" + to_string(n.param) + ")";
        case SetKind::Levels:
            return n.b < 0 ? "levels(" + std::to_string(n.a) + ")"
                           : "levels(" + std::to_string(n.a) + "," + std::to_string(n.b) + ")";
        case SetKind::Not: return "~" + wrap_key(n.children.front(), SetKind::Not, display);
        case SetKind::And:
        case SetKind::Or: {
            std::string out;
            const char* sep = n.kind == SetKind::And ? " & " : " | ";
            for (const auto& c : n.children) {
                if (!out.empty()) out += sep;
                out += wrap_key(c, n.kind, display);
            }
            return out;
        }
    }
    return "?";
}

double log_rational(const Rational& q) {
    long e1 = 0, e2 = 0;
    double d1 = mpz_get_d_2exp(&e1, q.get_num_mpz_t());
    double d2 = mpz_get_d_2exp(&e2, q.get_den_mpz_t());
    return std::log(d1) - std::log(d2) + static_cast<double>(e1 - e2) * std::log(2.0);
}

// n with eps in (2^-(n+1), 2^-n].
long dyadic_band(const Rational& eps) {
    const Integer& num = eps.get_num();
    const Integer& den = eps.get_den();
    long n = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    auto two_pow = [](long k) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
        return r;
    };
    // want 2^n * num <= den < 2^(n+1) * num
    if (n < 0) n = 0;
    while (n > 0 && two_pow(n) * num > den) --n;
    while (two_pow(n + 1) * num <= den) ++n;
    return n;
}

bool in_geometric(const Rational& eps, const Rational& rho) {
    if (eps == 1) return true;
    if (eps > rho) return false;
    const double est = log_rational(eps) / log_rational(rho);
    const long centre = std::lround(est);
    for (long n = std::max(0L, centre - 1); n <= centre + 1; ++n)
        if (pow(rho, n) == eps) return true;
    return false;
}

std::shared_ptr<SetNode> make(SetKind k) {
    auto n = std::make_shared<SetNode>();
    n->kind = k;
    return n;
}

}  // namespace

SetDescriptor::SetDescriptor() : SetDescriptor(full()) {}

SetDescriptor SetDescriptor::full() {
    static const SetDescriptor f = [] {
        auto n = make(SetKind::Full);
        n->key = "full";
        return SetDescriptor(n);
    }();
    return f;
}

SetDescriptor SetDescriptor::empty() {
    static const SetDescriptor e = [] {
        auto n = make(SetKind::Empty);
        n->key = "empty";
        return SetDescriptor(n);
    }();
    return e;
}

SetDescriptor SetDescriptor::geom(const Rational& rho) {
    if (rho <= 0 || rho >= 1) throw std::invalid_argument("geom ratio must lie in (0,1)");
    auto n = make(SetKind::Geom);
    n->param = rho;
    n->key = compose(*n, false);
    return SetDescriptor(n);
}

SetDescriptor SetDescriptor::dyadic(long m, long k) {
    if (m < 1) throw std::invalid_argument("dyadic modulus must be positive");
    auto n = make(SetKind::Dyadic);
    n->a = m;
    n->b = ((k % m) + m) % m;
    n->key = compose(*n, false);
    return SetDescriptor(n);
}

SetDescriptor SetDescriptor::tail(const Rational& eta) {
    if (eta <= 0) throw std::invalid_argument("tail threshold must be positive");
    auto n = make(SetKind::Tail);
    n->param = eta;
    n->key = compose(*n, false);
    return SetDescriptor(n);
}

SetDescriptor SetDescriptor::levels(long lo, long hi) {
    if (lo < 0) throw std::invalid_argument("level bound must be a natural number");
    if (hi >= 0 && hi <= lo) throw std::invalid_argument("empty level range");
    if (lo == 0 && hi < 0) return full();
    auto n = make(SetKind::Levels);
    n->a = lo;
    n->b = hi < 0 ? -1 : hi;
    n->key = compose(*n, false);
    return SetDescriptor(n);
}

SetDescriptor SetDescriptor::complement_of(const SetDescriptor& a) {
    switch (a.kind()) {
        case SetKind::Full: return empty();
        case SetKind::Empty: return full();
        case SetKind::Not: return a.children().front();
        default: break;
    }
    auto n = make(SetKind::Not);
    n->children = {a};
    n->key = compose(*n, false);
    return SetDescriptor(n);
}

namespace {

SetDescriptor combine(SetKind k, std::vector<SetDescriptor> parts) {
    const SetKind absorbing = k == SetKind::Or ? SetKind::Full : SetKind::Empty;
    const SetKind neutral = k == SetKind::Or ? SetKind::Empty : SetKind::Full;
    std::vector<SetDescriptor> flat;
    for (auto& p : parts) {
        if (p.kind() == absorbing) return p.kind() == SetKind::Full ? SetDescriptor::full() : SetDescriptor::empty();
        if (p.kind() == neutral) continue;
        if (p.kind() == k && p.name().empty()) {
            for (const auto& c : p.children()) flat.push_back(c);
        } else {
            flat.push_back(p);
        }
    }
    std::sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.key() < y.key(); });
    flat.erase(std::unique(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.key() == y.key(); }),
               flat.end());
    std::set<std::string> keys;
    for (const auto& p : flat) keys.insert(p.key());
    for (const auto& p : flat) {
        if (keys.count(SetDescriptor::complement_of(p).key()))
            return k == SetKind::Or ? SetDescriptor::full() : SetDescriptor::empty();
    }
    if (flat.empty()) return neutral == SetKind::Full ? SetDescriptor::full() : SetDescriptor::empty();
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<SetNode>();
    n->kind = k;
    n->children = std::move(flat);
    n->key = compose(*n, false);
    return SetDescriptor(n);
}

}  // namespace

SetDescriptor SetDescriptor::union_of(std::vector<SetDescriptor> parts) {
    if (parts.empty()) return empty();
    return combine(SetKind::Or, std::move(parts));
}

SetDescriptor SetDescriptor::intersection_of(std::vector<SetDescriptor> parts) {
    if (parts.empty()) return full();
    return combine(SetKind::And, std::move(parts));
}

SetDescriptor SetDescriptor::named(const std::string& name) const {
    auto n = std::make_shared<SetNode>(*node_);
    n->name = name;
    return SetDescriptor(n);
}

const std::string& SetDescriptor::name() const { return node_->name; }
SetKind SetDescriptor::kind() const { return node_->kind; }
bool SetDescriptor::is_leaf() const {
    const SetKind k = node_->kind;
    return k == SetKind::Geom || k == SetKind::Dyadic || k == SetKind::Tail || k == SetKind::Levels;
}
const Rational& SetDescriptor::parameter() const { return node_->param; }
long SetDescriptor::modulus() const { return node_->a; }
long SetDescriptor::residue() const { return node_->b; }
const std::vector<SetDescriptor>& SetDescriptor::children() const { return node_->children; }
const std::string& SetDescriptor::key() const { return node_->key; }

std::string SetDescriptor::to_string() const {
    if (!node_->name.empty()) return node_->name;
    return compose(*node_, true);
}

bool SetDescriptor::member(const TestPoint& t) const {
    const SetNode& n = *node_;
    switch (n.kind) {
        case SetKind::Full: return true;
        case SetKind::Empty: return false;
        case SetKind::Geom: return in_geometric(t.eps, n.param);
        case SetKind::Dyadic: return dyadic_band(t.eps) % n.a == n.b;
        case SetKind::Tail: return t.eps < n.param;
        case SetKind::Levels: return t.level >= n.a && (n.b < 0 || t.level < n.b);
        case SetKind::Not: return !n.children.front().member(t);
        case SetKind::And:
            return std::all_of(n.children.begin(), n.children.end(), [&](const auto& c) { return c.member(t); });
        case SetKind::Or:
            return std::any_of(n.children.begin(), n.children.end(), [&](const auto& c) { return c.member(t); });
    }
    return false;
}

bool SetDescriptor::eval(const Universe& u, Minterm m) const {
    const SetNode& n = *node_;
    switch (n.kind) {
        case SetKind::Full: return true;
        case SetKind::Empty: return false;
        case SetKind::Not: return !n.children.front().eval(u, m);
        case SetKind::And:
            return std::all_of(n.children.begin(), n.children.end(), [&](const auto& c) { return c.eval(u, m); });
        case SetKind::Or:
            return std::any_of(n.children.begin(), n.children.end(), [&](const auto& c) { return c.eval(u, m); });
        default: {
            const int i = u.index_of(n.key);
            if (i < 0) throw std::logic_error("leaf " + n.key + " missing from universe");
            return (m >> i) & 1U;
        }
    }
}

void SetDescriptor::collect_leaves(std::map<std::string, SetDescriptor>& out) const {
    if (is_leaf()) {
        out.emplace(key(), SetDescriptor(std::make_shared<SetNode>([&] {
                        SetNode c = *node_;
                        c.name.clear();
                        return c;
                    }())));
        return;
    }
    for (const auto& c : node_->children) c.collect_leaves(out);
}

// ---------------------------------------------------------------- universe

namespace {

std::mutex cache_mutex;
std::map<std::string, Universe::Ref>& universe_cache() {
    static std::map<std::string, Universe::Ref> cache;
    return cache;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

Universe::Ref Universe::of(const std::vector<SetDescriptor>& sets) {
    std::map<std::string, SetDescriptor> leaves;
    for (const auto& s : sets) s.collect_leaves(leaves);
    if (leaves.size() > 63) throw TooLarge("more than 63 distinct set leaves");
    std::string sig;
    for (const auto& [k, v] : leaves) sig += k + ";";
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = universe_cache().find(sig);
        if (it != universe_cache().end()) return it->second;
    }
    std::shared_ptr<Universe> u(new Universe());
    for (const auto& [k, v] : leaves) {
        u->index_[k] = static_cast<int>(u->leaves_.size());
        u->leaves_.push_back(v);
    }
    u->analyze();
    std::lock_guard<std::mutex> lock(cache_mutex);
    return universe_cache().emplace(sig, u).first->second;
}

Universe::Ref Universe::merge(const Ref& a, const Ref& b) {
    if (a.get() == b.get() || a->contains_all(*b)) return a;
    if (b->contains_all(*a)) return b;
    std::vector<SetDescriptor> all = a->leaves_;
    all.insert(all.end(), b->leaves_.begin(), b->leaves_.end());
    return of(all);
}

int Universe::index_of(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

bool Universe::contains_all(const Universe& other) const {
    return std::all_of(other.leaves_.begin(), other.leaves_.end(),
                       [&](const auto& l) { return index_.count(l.key()) > 0; });
}

std::string Universe::signature() const {
    std::string sig;
    for (const auto& l : leaves_) sig += l.key() + ";";
    return sig;
}

Minterm Universe::level_bits(long q) const {
    Minterm m = 0;
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        const auto& l = leaves_[i];
        if (l.kind() == SetKind::Levels && q >= l.modulus() && (l.residue() < 0 || q < l.residue()))
            m |= Minterm{1} << i;
    }
    return m;
}

MintermSet Universe::near_zero_at(long level) const {
    MintermSet out;
    const Minterm lb = level_bits(level);
    for (Minterm e : eps_near_zero_) out.insert(e | lb);
    return out;
}

Minterm Universe::minterm_of(const TestPoint& t) const {
    Minterm m = 0;
    for (std::size_t i = 0; i < leaves_.size(); ++i)
        if (leaves_[i].member(t)) m |= Minterm{1} << i;
    return m;
}

Minterm Universe::project(Minterm m, const Universe& sub) const {
    Minterm out = 0;
    for (std::size_t j = 0; j < sub.leaves_.size(); ++j) {
        const int i = index_of(sub.leaves_[j].key());
        if (i < 0) throw std::logic_error("projection onto a non-sub-universe");
        if ((m >> i) & 1U) out |= Minterm{1} << j;
    }
    return out;
}

void Universe::analyze() {
    struct Geo {
        int leaf;
        long mult;
    };
    std::vector<std::pair<long, long>> dyadics;  // (leaf, m) with residue stored on the leaf
    std::vector<int> dyadic_leaf;
    std::map<std::map<Integer, long>, std::vector<Geo>> groups;
    Minterm tails = 0;
    eta_star_ = 1;
    level_reps_ = {0};
    long period = 1;
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        const auto& l = leaves_[i];
        const int idx = static_cast<int>(i);
        switch (l.kind()) {
            case SetKind::Geom: {
                auto f = factor(l.parameter());
                long g = 0;
                for (const auto& [p, e] : f) g = std::gcd(g, std::abs(e));
                std::map<Integer, long> dir;
                for (const auto& [p, e] : f) dir[p] = e / g;
                groups[dir].push_back({idx, g});
                break;
            }
            case SetKind::Dyadic:
                dyadic_leaf.push_back(idx);
                period = lcm_long(period, l.modulus());
                if (period > 1'000'000) throw TooLarge("dyadic period too large");
                break;
            case SetKind::Tail:
                tails |= Minterm{1} << i;
                if (l.parameter() < eta_star_) eta_star_ = l.parameter();
                break;
            case SetKind::Levels:
                level_reps_.push_back(l.modulus());
                if (l.residue() >= 0) level_reps_.push_back(l.residue());
                break;
            default: throw std::logic_error("non-leaf in universe");
        }
    }
    std::sort(level_reps_.begin(), level_reps_.end());
    level_reps_.erase(std::unique(level_reps_.begin(), level_reps_.end()), level_reps_.end());
    eventual_level_ = level_reps_.back();

    auto dyadic_bits = [&](long band) {
        Minterm m = 0;
        for (int idx : dyadic_leaf) {
            const auto& l = leaves_[static_cast<std::size_t>(idx)];
            if (band % l.modulus() == l.residue()) m |= Minterm{1} << idx;
        }
        return m;
    };

    // Cells accumulating at 0: no geometric leaf holds, every dyadic band occurs.
    for (long r = 0; r < period; ++r) eps_near_zero_.insert(dyadic_bits(r) | tails);
    // Cells inside commensurable geometric sequences base^j.
    const std::map<Integer, long> half{{Integer(2), -1}};
    for (const auto& [dir, members] : groups) {
        const std::size_t s = members.size();
        if (s > 16) throw TooLarge("too many commensurable geometric leaves");
        for (unsigned sub = 1; sub < (1U << s); ++sub) {
            long step = 1;
            Minterm gbits = 0;
            std::vector<long> excluded;
            for (std::size_t i = 0; i < s; ++i) {
                if ((sub >> i) & 1U) {
                    step = lcm_long(step, members[i].mult);
                    gbits |= Minterm{1} << members[i].leaf;
                } else {
                    excluded.push_back(members[i].mult);
                }
            }
            if (std::any_of(excluded.begin(), excluded.end(), [&](long c) { return step % c == 0; })) continue;
            if (dir == half) {
                long t_period = period;
                for (long c : excluded) t_period = lcm_long(t_period, c);
                for (long t = 1; t <= t_period; ++t) {
                    const long j = step * t;
                    if (std::any_of(excluded.begin(), excluded.end(), [&](long c) { return j % c == 0; })) continue;
                    eps_near_zero_.insert(gbits | dyadic_bits(j % period) | tails);
                }
            } else {
                // log2 of the base is irrational, so every band residue recurs.
                for (long r = 0; r < period; ++r) eps_near_zero_.insert(gbits | dyadic_bits(r) | tails);
            }
        }
    }

    // Points of [eta*, 1]: breakpoints, sequence points and one interior point per gap.
    std::set<Rational, RationalLess> points{Rational(1)};
    const std::size_t limit = 200000;
    for (const auto& l : leaves_) {
        if (l.kind() == SetKind::Tail && l.parameter() <= 1) points.insert(l.parameter());
        if (l.kind() == SetKind::Geom) {
            for (Rational p = 1; p >= eta_star_; p *= l.parameter()) {
                points.insert(p);
                if (points.size() > limit) throw TooLarge("finite region has too many breakpoints");
            }
        }
    }
    if (!dyadic_leaf.empty()) {
        for (Rational p = 1; p >= eta_star_; p /= 2) {
            points.insert(p);
            if (points.size() > limit) throw TooLarge("finite region has too many breakpoints");
        }
    }
    std::vector<Rational> sorted(points.begin(), points.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) points.insert((sorted[i] + sorted[i + 1]) / 2);
    Minterm eps_mask = 0;
    for (std::size_t i = 0; i < leaves_.size(); ++i)
        if (leaves_[i].kind() != SetKind::Levels) eps_mask |= Minterm{1} << i;
    for (const auto& p : points) eps_finite_.insert(minterm_of(TestPoint(0, 1, p)) & eps_mask);

    for (long q : level_reps_) {
        const Minterm lb = level_bits(q);
        for (Minterm e : eps_near_zero_) sat_.insert(e | lb);
        for (Minterm e : eps_finite_) sat_.insert(e | lb);
    }
    near_zero_ = near_zero_at(eventual_level_);
}

// ---------------------------------------------------------------- set calculus

MintermSet minterms_of(const SetDescriptor& a, const Universe& u) {
    MintermSet out;
    for (Minterm m : u.satisfiable())
        if (a.eval(u, m)) out.insert(m);
    return out;
}

TailClass classify(const MintermSet& set, const Universe& u, std::optional<long> level) {
    const MintermSet nz = level ? u.near_zero_at(*level) : u.near_zero();
    std::size_t inside = 0;
    for (Minterm m : nz) inside += set.count(m);
    if (inside == nz.size()) return TailClass::FullTail;
    if (inside == 0) return TailClass::NullTail;
    return TailClass::Proper;
}

SetDescriptor describe(const MintermSet& set, const Universe& u) {
    std::vector<Minterm> on, off;
    for (Minterm m : u.satisfiable()) (set.count(m) ? on : off).push_back(m);
    if (off.empty()) return SetDescriptor::full();
    if (on.empty()) return SetDescriptor::empty();
    const std::size_t n = u.size();
    const Minterm all = n == 64 ? ~Minterm{0} : ((Minterm{1} << n) - 1);
    struct Cube {
        Minterm value, care;
    };
    std::vector<Cube> cubes;
    auto covers = [](const Cube& c, Minterm m) { return (m & c.care) == (c.value & c.care); };
    for (Minterm m : on) {
        if (std::any_of(cubes.begin(), cubes.end(), [&](const Cube& c) { return covers(c, m); })) continue;
        Cube c{m, all};
        for (std::size_t i = 0; i < n; ++i) {
            Cube trial{m, c.care & ~(Minterm{1} << i)};
            if (std::none_of(off.begin(), off.end(), [&](Minterm o) { return covers(trial, o); })) c = trial;
        }
        cubes.push_back(c);
    }
    for (std::size_t i = cubes.size(); i-- > 0;) {
        bool redundant = true;
        for (Minterm m : on) {
            if (!covers(cubes[i], m)) continue;
            bool other = false;
            for (std::size_t j = 0; j < cubes.size() && !other; ++j) other = j != i && covers(cubes[j], m);
            if (!other) {
                redundant = false;
                break;
            }
        }
        if (redundant) cubes.erase(cubes.begin() + static_cast<long>(i));
    }
    std::vector<SetDescriptor> terms;
    for (const auto& c : cubes) {
        std::vector<SetDescriptor> lits;
        for (std::size_t i = 0; i < n; ++i) {
            if (!((c.care >> i) & 1U)) continue;
            const auto& leaf = u.leaves()[i];
            lits.push_back(((c.value >> i) & 1U) ? leaf : ~leaf);
        }
        terms.push_back(SetDescriptor::intersection_of(lits));
    }
    return SetDescriptor::union_of(terms);
}

TailClass tail_class(const SetDescriptor& a, std::optional<long> level) {
    auto u = Universe::of({a});
    return classify(minterms_of(a, *u), *u, level);
}

bool in_sf(const SetDescriptor& a) { return tail_class(a) == TailClass::Proper; }

bool is_empty(const SetDescriptor& a) {
    auto u = Universe::of({a});
    return minterms_of(a, *u).empty();
}

bool equivalent(const SetDescriptor& a, const SetDescriptor& b) {
    auto u = Universe::of({a, b});
    for (Minterm m : u->satisfiable())
        if (a.eval(*u, m) != b.eval(*u, m)) return false;
    return true;
}

bool equal_near_zero(const SetDescriptor& a, const SetDescriptor& b) {
    auto u = Universe::of({a, b});
    for (Minterm m : u->near_zero())
        if (a.eval(*u, m) != b.eval(*u, m)) return false;
    return true;
}

SetDescriptor boolean(BoolOp op, const SetDescriptor& a, const std::optional<SetDescriptor>& b) {
    SetDescriptor r;
    switch (op) {
        case BoolOp::Complement: r = ~a; break;
        case BoolOp::Union:
            if (!b) throw std::invalid_argument("union needs two operands");
            r = a | *b;
            break;
        case BoolOp::Intersect:
            if (!b) throw std::invalid_argument("intersection needs two operands");
            r = a & *b;
            break;
    }
    auto u = Universe::of({r});
    const auto ms = minterms_of(r, *u);
    if (ms.empty()) return SetDescriptor::empty();
    if (ms.size() == u->satisfiable().size()) return SetDescriptor::full();
    return r;
}

std::vector<SetDescriptor> atoms(const std::vector<SetDescriptor>& family) {
    std::vector<SetDescriptor> members;
    std::set<std::string> seen;
    for (const auto& f : family)
        if (seen.insert(f.key()).second) members.push_back(f);
    auto u = Universe::of(members);
    std::set<std::vector<bool>, std::greater<>> signatures;
    for (Minterm m : u->satisfiable()) {
        std::vector<bool> sig;
        for (const auto& f : members) sig.push_back(f.eval(*u, m));
        signatures.insert(sig);
    }
    std::vector<SetDescriptor> out;
    for (const auto& sig : signatures) {
        std::vector<SetDescriptor> parts;
        for (std::size_t i = 0; i < members.size(); ++i) parts.push_back(sig[i] ? members[i] : ~members[i]);
        out.push_back(SetDescriptor::intersection_of(parts));
    }
    return out;
}

}  // namespace gnum
