#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnum/normal_form.hpp"
#include "gnum/parser.hpp"
#include "gnum/units.hpp"

namespace gnum {

// Finite Boolean algebra given by its atoms; elements are bitmasks over atom indices.
class AtomAlgebra {
public:
    // Atoms must be pairwise disjoint and cover every realizable point.
    explicit AtomAlgebra(std::vector<SetDescriptor> atoms);
    static AtomAlgebra generated_by(const std::vector<SetDescriptor>& family);

    std::size_t size() const { return atoms_.size(); }
    const std::vector<SetDescriptor>& atoms() const { return atoms_; }
    std::uint32_t full_mask() const { return static_cast<std::uint32_t>((1u << atoms_.size()) - 1); }
    // Atoms realized arbitrarily close to eps = 0.
    bool atom_visible(std::size_t i) const { return visible_[i]; }
    bool in_sf(std::uint32_t mask) const;
    SetDescriptor element(std::uint32_t mask) const;

private:
    std::vector<SetDescriptor> atoms_;
    std::vector<bool> visible_;
};

// F_i = {T in S_f : atom i not in T}; every family over a finite atom algebra has this form.
struct Family {
    std::shared_ptr<const AtomAlgebra> algebra;
    std::size_t excluded = 0;

    bool contains(std::uint32_t mask) const;
    // Brute-force check of the complement and union axioms over all 2^n elements.
    bool validate() const;
};

// Throws TooLarge for more than 12 atoms.
std::vector<Family> enumerate_families(const std::shared_ptr<const AtomAlgebra>& algebra);
// Exhaustive search over all subsets of S_f elements; small algebras only.
std::vector<std::vector<std::uint32_t>> brute_force_families(const AtomAlgebra& algebra);

// {"atoms":[...]} or {"generators":[...]}; set expressions use the registry.
std::shared_ptr<const AtomAlgebra> load_algebra_json(const std::string& text, const Registry& registry);
// {"atoms":[...], "excluded": i}
Family load_family_json(const std::string& text, const Registry& registry);

struct IdealMembership {
    bool member = false;
    std::uint32_t witness = 0;  // smallest element T of F with x*chi(T) - x null
    std::uint32_t support = 0;  // atoms meeting the support of x near 0
};
IdealMembership ideal_member(const NormalForm& x, const Family& f);

// x equals a sum of polynomial multiples of atoms modulo null elements.
bool measurable(const NormalForm& x, const AtomAlgebra& algebra);

}  // namespace gnum
