#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gnum/rational.hpp"
#include "gnum/test_point.hpp"

namespace gnum {

enum class SetKind { Full, Empty, Geom, Dyadic, Tail, Levels, Not, And, Or };

// Behaviour of a per-level eps-set near 0.
enum class TailClass { FullTail, NullTail, Proper };

std::string to_string(TailClass c);
TailClass swap(TailClass c);

class Universe;
struct SetNode;

// Index set described by its eps-set at each level. Leaves:
//   geom(rho)       {rho^n : n >= 0}
//   dyadic(m, k)    union of (2^-(n+1), 2^-n] over n = k mod m
//   tail(eta)       (0, eta)
//   levels(lo, hi)  every eps, on levels lo <= q < hi (hi < 0: unbounded)
// combined with complement, union and intersection.
class SetDescriptor {
public:
    SetDescriptor();  // Full

    static SetDescriptor full();
    static SetDescriptor empty();
    static SetDescriptor geom(const Rational& rho);
    static SetDescriptor dyadic(long m, long k);
    static SetDescriptor tail(const Rational& eta);
    static SetDescriptor levels(long lo, long hi = -1);

    static SetDescriptor complement_of(const SetDescriptor& a);
    static SetDescriptor union_of(std::vector<SetDescriptor> parts);
    static SetDescriptor intersection_of(std::vector<SetDescriptor> parts);

    SetDescriptor operator~() const { return complement_of(*this); }
    friend SetDescriptor operator|(const SetDescriptor& a, const SetDescriptor& b) { return union_of({a, b}); }
    friend SetDescriptor operator&(const SetDescriptor& a, const SetDescriptor& b) { return intersection_of({a, b}); }

    // Same set, displayed under a name.
    SetDescriptor named(const std::string& name) const;
    const std::string& name() const;

    SetKind kind() const;
    bool is_leaf() const;
    const Rational& parameter() const;  // rho or eta
    long modulus() const;               // m, or lo for levels
    long residue() const;               // k, or hi for levels
    const std::vector<SetDescriptor>& children() const;

    // Structural text, ignoring names. Equal keys mean equal descriptors.
    const std::string& key() const;
    // Display text, using names where present.
    std::string to_string() const;

    bool member(const TestPoint& t) const;
    bool eval(const Universe& u, std::uint64_t minterm) const;
    void collect_leaves(std::map<std::string, SetDescriptor>& out) const;

    explicit SetDescriptor(std::shared_ptr<const SetNode> n) : node_(std::move(n)) {}

private:
    std::shared_ptr<const SetNode> node_;
};

struct SetNode {
    SetKind kind = SetKind::Full;
    Rational param;
    long a = 0, b = 0;
    std::vector<SetDescriptor> children;
    std::string name;
    std::string key;
};

using Minterm = std::uint64_t;
using MintermSet = std::set<Minterm>;

// Leaves of a finite descriptor family with their realizable truth assignments.
class Universe {
public:
    using Ref = std::shared_ptr<const Universe>;

    static Ref of(const std::vector<SetDescriptor>& sets);
    static Ref merge(const Ref& a, const Ref& b);
    static Ref empty_universe() { return of({}); }

    std::size_t size() const { return leaves_.size(); }
    const std::vector<SetDescriptor>& leaves() const { return leaves_; }
    int index_of(const std::string& key) const;

    // Assignments realized at some (level, eps).
    const MintermSet& satisfiable() const { return sat_; }
    // Assignments realized arbitrarily close to eps = 0 at the eventual level.
    const MintermSet& near_zero() const { return near_zero_; }
    MintermSet near_zero_at(long level) const;
    // Beyond this level the level leaves no longer change.
    long eventual_level() const { return eventual_level_; }
    const std::vector<long>& level_representatives() const { return level_reps_; }
    // Below this scale every tail leaf holds.
    const Rational& eta_star() const { return eta_star_; }

    Minterm minterm_of(const TestPoint& t) const;
    // Restriction of an assignment to the leaves of a sub-universe.
    Minterm project(Minterm m, const Universe& sub) const;
    bool contains_all(const Universe& other) const;
    std::string signature() const;

private:
    Universe() = default;
    void analyze();
    Minterm level_bits(long q) const;

    std::vector<SetDescriptor> leaves_;
    std::unordered_map<std::string, int> index_;
    MintermSet eps_near_zero_, eps_finite_;
    MintermSet sat_, near_zero_;
    long eventual_level_ = 0;
    std::vector<long> level_reps_;
    Rational eta_star_ = 1;
};

// Minterms of the universe satisfied by a descriptor.
MintermSet minterms_of(const SetDescriptor& a, const Universe& u);
TailClass classify(const MintermSet& set, const Universe& u, std::optional<long> level = std::nullopt);
// Compact descriptor equal to the union of the given minterms on every realizable point.
SetDescriptor describe(const MintermSet& set, const Universe& u);

TailClass tail_class(const SetDescriptor& a, std::optional<long> level = std::nullopt);
bool in_sf(const SetDescriptor& a);
bool is_empty(const SetDescriptor& a);
bool equivalent(const SetDescriptor& a, const SetDescriptor& b);
// Symmetric difference is NullTail.
bool equal_near_zero(const SetDescriptor& a, const SetDescriptor& b);

enum class BoolOp { Union, Intersect, Complement };
// Boolean combination reduced to full/empty when it is trivial.
SetDescriptor boolean(BoolOp op, const SetDescriptor& a, const std::optional<SetDescriptor>& b = std::nullopt);

// Atoms of the Boolean algebra generated by a finite family.
std::vector<SetDescriptor> atoms(const std::vector<SetDescriptor>& family);

}  // namespace gnum
