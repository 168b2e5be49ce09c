#pragma once

#include <optional>
#include <string>

#include "gnum/families.hpp"
#include "gnum/json_io.hpp"
#include "gnum/oracle.hpp"
#include "gnum/parser.hpp"

namespace gnum {

// "1/2^80", "2^-80", "1e-24" or "3/1000"; throws Error("usage") otherwise.
Rational parse_precision(const std::string& text);
// Whole file as text; throws Error("invalid-file").
std::string read_text_file(const std::string& path);

// 0 ok, 1 contract failure, 2 usage error.
int exit_code_for(const std::string& error_code);
Json error_json(const std::string& code, const std::string& message);

// One command-line invocation's state; each method returns the JSON document for one subcommand.
class Session {
public:
    // Builtin registry; oscillator precision from GNUM_PRECISION when set.
    Session();

    Registry registry = Registry::builtin();
    Rational precision{1, 1UL << 60};
    SampleGrid grid = SampleGrid::default_grid();

    void load_registry_text(const std::string& text) { registry.load_json_text(text); }
    void load_grid_text(const std::string& text) { grid = SampleGrid::from_json_text(text); }

    Germ parse(const std::string& expr) const { return parse_germ(expr, registry); }

    Json eval(const std::string& expr, const TestPoint& t, std::optional<Rational> prec = std::nullopt) const;
    Json val(const std::string& expr) const;
    Json norm(const std::string& expr) const;
    Json dist(const std::string& a, const std::string& b) const;
    Json is_unit(const std::string& expr) const;
    Json is_null(const std::string& expr) const;
    Json approx(const std::string& expr, long max_n) const;
    Json unitize(const std::string& expr) const;
    Json idempotent(const std::string& expr) const;
    Json ideal_member(const std::string& expr, const std::string& family_json) const;
    Json enum_families(const std::string& algebra_json) const;
    Json sign(const std::string& expr) const;
    Json decompose(const std::string& expr) const;
    Json qsign(const std::string& expr, const std::string& family_json) const;
    // injected replaces the exact valuation ("+inf" for null) to exercise the mismatch path.
    Json oracle(const std::string& expr, const std::optional<std::string>& injected = std::nullopt) const;
    Json suite(const std::string& name) const;
    Json suite_list() const;
};

}  // namespace gnum
