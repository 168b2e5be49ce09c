#include "gnum/families.hpp"

#include <bit>

#include "gnum/errors.hpp"
#include "json.hpp"

namespace gnum {

namespace {

Universe::Ref common_universe(const std::vector<SetDescriptor>& sets) { return Universe::of(sets); }

}  // namespace

AtomAlgebra::AtomAlgebra(std::vector<SetDescriptor> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw PreconditionError("an algebra needs at least one atom");
    if (atoms_.size() > 12) throw TooLarge("at most 12 atoms are supported, got " + std::to_string(atoms_.size()));
    auto u = common_universe(atoms_);
    std::vector<MintermSet> cells;
    for (const auto& a : atoms_) cells.push_back(minterms_of(a, *u));
    for (Minterm m : u->satisfiable()) {
        int hits = 0;
        for (const auto& c : cells) hits += static_cast<int>(c.count(m));
        if (hits != 1) throw PreconditionError("atoms must be pairwise disjoint and cover every point");
    }
    const MintermSet& nz = u->near_zero();
    for (const auto& c : cells) {
        bool seen = false;
        for (Minterm m : c) seen = seen || nz.count(m);
        visible_.push_back(seen);
    }
}

AtomAlgebra AtomAlgebra::generated_by(const std::vector<SetDescriptor>& family) {
    return AtomAlgebra(gnum::atoms(family));
}

bool AtomAlgebra::in_sf(std::uint32_t mask) const {
    bool inside = false, outside = false;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!visible_[i]) continue;
        if (mask >> i & 1u) inside = true;
        else outside = true;
    }
    return inside && outside;
}

SetDescriptor AtomAlgebra::element(std::uint32_t mask) const {
    std::vector<SetDescriptor> parts;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (mask >> i & 1u) parts.push_back(atoms_[i]);
    if (parts.empty()) return SetDescriptor::empty();
    return SetDescriptor::union_of(parts);
}

bool Family::contains(std::uint32_t mask) const {
    return algebra->in_sf(mask) && !(mask >> excluded & 1u);
}

bool Family::validate() const {
    const std::uint32_t full = algebra->full_mask();
    std::vector<std::uint32_t> members;
    for (std::uint32_t t = 0; t <= full; ++t) {
        if (!algebra->in_sf(t)) {
            if (contains(t)) return false;
            continue;
        }
        if (contains(t) == contains(full & ~t)) return false;
        if (contains(t)) members.push_back(t);
    }
    for (std::uint32_t a : members)
        for (std::uint32_t b : members)
            if (!contains(a | b)) return false;
    return true;
}

std::vector<Family> enumerate_families(const std::shared_ptr<const AtomAlgebra>& algebra) {
    if (algebra->size() > 12) throw TooLarge("at most 12 atoms are supported");
    std::vector<Family> out;
    std::size_t visible = 0;
    for (std::size_t i = 0; i < algebra->size(); ++i) visible += algebra->atom_visible(i);
    if (visible < 2) return out;  // S_f meets this algebra trivially
    for (std::size_t i = 0; i < algebra->size(); ++i) {
        if (!algebra->atom_visible(i)) continue;
        Family f{algebra, i};
        if (!f.validate()) throw std::logic_error("constructed family failed validation");
        out.push_back(f);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> brute_force_families(const AtomAlgebra& algebra) {
    if (algebra.size() > 4) throw TooLarge("brute force is limited to 4 atoms");
    std::vector<std::uint32_t> sf;
    for (std::uint32_t t = 0; t <= algebra.full_mask(); ++t)
        if (algebra.in_sf(t)) sf.push_back(t);
    std::vector<std::vector<std::uint32_t>> out;
    const std::uint64_t subsets = 1ULL << sf.size();
    for (std::uint64_t pick = 0; pick < subsets; ++pick) {
        auto in = [&](std::uint32_t t) {
            for (std::size_t j = 0; j < sf.size(); ++j)
                if (sf[j] == t) return static_cast<bool>(pick >> j & 1u);
            return false;
        };
        bool ok = true;
        for (std::uint32_t t : sf) ok = ok && (in(t) != in(algebra.full_mask() & ~t));
        for (std::size_t a = 0; ok && a < sf.size(); ++a)
            for (std::size_t b = 0; ok && b < sf.size(); ++b)
                if ((pick >> a & 1u) && (pick >> b & 1u)) ok = in(sf[a] | sf[b]);
        if (!ok) continue;
        std::vector<std::uint32_t> fam;
        for (std::size_t j = 0; j < sf.size(); ++j)
            if (pick >> j & 1u) fam.push_back(sf[j]);
        out.push_back(fam);
    }
    return out;
}

namespace {

std::vector<SetDescriptor> parse_sets(const nlohmann::json& arr, const Registry& registry) {
    std::vector<SetDescriptor> out;
    if (!arr.is_array()) throw Error("invalid-file", "expected an array of set expressions");
    for (const auto& v : arr) out.push_back(parse_set(v.get<std::string>(), registry));
    return out;
}

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid-file", std::string("not valid JSON: ") + e.what());
    }
}

}  // namespace

std::shared_ptr<const AtomAlgebra> load_algebra_json(const std::string& text, const Registry& registry) {
    const auto j = parse_json(text);
    if (j.contains("atoms")) return std::make_shared<const AtomAlgebra>(parse_sets(j["atoms"], registry));
    if (j.contains("generators"))
        return std::make_shared<const AtomAlgebra>(AtomAlgebra::generated_by(parse_sets(j["generators"], registry)));
    throw Error("invalid-file", "algebra file needs \"atoms\" or \"generators\"");
}

Family load_family_json(const std::string& text, const Registry& registry) {
    const auto j = parse_json(text);
    auto algebra = load_algebra_json(text, registry);
    if (!j.contains("excluded") || !j["excluded"].is_number_unsigned())
        throw Error("invalid-file", "family file needs an atom index \"excluded\"");
    Family f{algebra, j["excluded"].get<std::size_t>()};
    if (f.excluded >= algebra->size() || !algebra->atom_visible(f.excluded))
        throw Error("invalid-file", "excluded atom must be an index of an atom in S_f");
    if (!f.validate()) throw Error("invalid-file", "family fails validation");
    return f;
}

namespace {

// Atom index of each cell of the merged universe.
std::map<Minterm, std::size_t> atom_of_cells(const Universe& u, const AtomAlgebra& algebra) {
    std::map<Minterm, std::size_t> out;
    for (std::size_t i = 0; i < algebra.size(); ++i)
        for (Minterm m : minterms_of(algebra.atoms()[i], u)) out[m] = i;
    return out;
}

NormalForm lifted(const NormalForm& x, const AtomAlgebra& algebra) {
    std::vector<SetDescriptor> sets(algebra.atoms());
    for (const auto& leaf : x.universe()->leaves()) sets.push_back(leaf);
    return x.lift(Universe::of(sets));
}

}  // namespace

IdealMembership ideal_member(const NormalForm& x, const Family& f) {
    const AtomAlgebra& alg = *f.algebra;
    const NormalForm y = lifted(x, alg);
    const auto atom_of = atom_of_cells(*y.universe(), alg);
    IdealMembership out;
    for (Minterm m : y.universe()->near_zero())
        if (!y.poly_at(m).empty()) out.support |= 1u << atom_of.at(m);
    if (out.support >> f.excluded & 1u) return out;
    out.member = true;
    if (out.support != 0) {
        out.witness = out.support;
        return out;
    }
    // null x: any member works; take the first visible atom other than the excluded one
    for (std::size_t i = 0; i < alg.size(); ++i) {
        if (i != f.excluded && alg.atom_visible(i)) {
            out.witness = 1u << i;
            break;
        }
    }
    return out;
}

bool measurable(const NormalForm& x, const AtomAlgebra& algebra) {
    const NormalForm y = lifted(x, algebra);
    const auto atom_of = atom_of_cells(*y.universe(), algebra);
    std::map<std::size_t, const Poly*> seen;
    for (Minterm m : y.universe()->near_zero()) {
        const Poly& p = y.poly_at(m);
        auto [it, inserted] = seen.emplace(atom_of.at(m), &p);
        if (!inserted && !poly_equal(*it->second, p)) return false;
    }
    return true;
}

}  // namespace gnum
