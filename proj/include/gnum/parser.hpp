#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gnum/germ.hpp"
#include "gnum/sets.hpp"

namespace gnum {

// Named set descriptors available to chi(NAME).
class Registry {
public:
    // G2, G3, G5, D2_k, D3_k, D4_k, D8_k, D10_k, T4, T16.
    static Registry builtin();

    void add(const std::string& name, const SetDescriptor& set);
    std::optional<SetDescriptor> find(const std::string& name) const;
    const std::map<std::string, SetDescriptor>& entries() const { return entries_; }

    // {"G2":{"kind":"geomseq","rho":"1/2"}, ...}; kinds: geomseq dyadic tail full empty levels
    // complement union intersection expr. Later entries may refer to earlier or later names.
    void load_json_text(const std::string& text);
    void load_json_file(const std::string& path);

private:
    std::map<std::string, SetDescriptor> entries_;
};

Germ parse_germ(std::string_view text, const Registry& registry = Registry::builtin());
SetDescriptor parse_set(std::string_view text, const Registry& registry = Registry::builtin());
std::string format(const Germ& x);

}  // namespace gnum
