#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gnum/errors.hpp"
#include "gnum/session.hpp"

namespace {

// Flattened "key: value" lines for --format text.
void print_text(const gnum::Json& j, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computable model of the ring of Colombeau full generalized numbers"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string registry_path, format = "json", grid_path;
    std::optional<std::string> precision;
    app.add_option("--registry", registry_path, "Descriptor registry JSON file");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--precision", precision, "Oscillator precision (overrides GNUM_PRECISION)");
    app.add_option("--grid", grid_path, "Sample grid JSON for sampled fallbacks");

    std::string expr, expr2, family_path, algebra_path, suite_name;
    long level = 0, max_n = 8;
    std::string iota = "1", eps = "1/1024";
    std::optional<std::string> prec, inject;
    bool list = false;

    auto* eval = app.add_subcommand("eval", "Evaluate the representative at a test point");
    eval->add_option("EXPR", expr)->required();
    eval->add_option("--level", level, "Mollifier level q")->check(CLI::NonNegativeNumber);
    eval->add_option("--iota", iota, "Base diameter in (0, 1]");
    eval->add_option("--eps", eps, "Scale in (0, 1]");
    eval->add_option("--prec", prec, "Enclosure width for oscillators");

    auto* val = app.add_subcommand("val", "Sharp valuation");
    val->add_option("EXPR", expr)->required();
    auto* norm = app.add_subcommand("norm", "Sharp norm e^-V");
    norm->add_option("EXPR", expr)->required();
    auto* dist = app.add_subcommand("dist", "Sharp distance");
    dist->add_option("X", expr)->required();
    dist->add_option("Y", expr2)->required();
    auto* is_unit = app.add_subcommand("is-unit", "Unit test with witness or annihilating idempotent");
    is_unit->add_option("EXPR", expr)->required();
    auto* is_null = app.add_subcommand("is-null", "Null test");
    is_null->add_option("EXPR", expr)->required();
    auto* approx = app.add_subcommand("approx", "Approximation decomposition and unit sequence");
    approx->add_option("EXPR", expr)->required();
    approx->add_option("--max-n", max_n, "Number of chain steps")->check(CLI::PositiveNumber);
    auto* unitize = app.add_subcommand("unitize", "x(1 - X_N) + X_N for the smallest working a");
    unitize->add_option("EXPR", expr)->required();
    auto* idempotent = app.add_subcommand("idempotent", "Recover S with e = X_S");
    idempotent->add_option("EXPR", expr)->required();
    auto* ideal = app.add_subcommand("ideal-member", "Membership in g_f(F)");
    ideal->add_option("EXPR", expr)->required();
    ideal->add_option("--family", family_path, "Family JSON file")->required();
    auto* families = app.add_subcommand("enum-families", "Enumerate the families of a finite atom algebra");
    families->add_option("ALGEBRA", algebra_path)->required();
    auto* sign = app.add_subcommand("sign", "q-positivity and q-negativity");
    sign->add_option("EXPR", expr)->required();
    auto* decompose = app.add_subcommand("decompose", "Positive and negative parts");
    decompose->add_option("EXPR", expr)->required();
    auto* qsign = app.add_subcommand("qsign", "Sign in the quotient by g_f(F)");
    qsign->add_option("EXPR", expr)->required();
    qsign->add_option("--family", family_path, "Family JSON file")->required();
    auto* oracle = app.add_subcommand("oracle", "Cross-check exact results against sampling");
    oracle->add_option("EXPR", expr)->required();
    oracle->add_option("--grid", grid_path, "Sample grid JSON file");
    oracle->add_option("--inject-valuation", inject, "Replace the exact valuation (fault injection)");
    auto* suite = app.add_subcommand("suite", "Run a theorem suite");
    suite->add_option("NAME", suite_name);
    suite->add_flag("--list", list, "List suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "gnum: " << e.what() << "\n";
        std::cout << gnum::error_json("usage", e.what()).dump() << "\n";
        return 2;
    }

    try {
        gnum::Session s;
        if (precision) s.precision = gnum::parse_precision(*precision);
        if (!registry_path.empty()) s.load_registry_text(gnum::read_text_file(registry_path));
        if (!grid_path.empty()) s.load_grid_text(gnum::read_text_file(grid_path));

        gnum::Json out;
        bool ok = true;
        const auto* sub = app.get_subcommands().front();
        if (sub == eval) {
            gnum::TestPoint t;
            try {
                t = gnum::TestPoint(level, gnum::parse_rational(iota), gnum::parse_rational(eps));
            } catch (const std::invalid_argument& e) {
                throw gnum::Error("usage", std::string("invalid test point: ") + e.what());
            }
            out = s.eval(expr, t, prec ? std::optional(gnum::parse_precision(*prec)) : std::nullopt);
        } else if (sub == val) {
            out = s.val(expr);
        } else if (sub == norm) {
            out = s.norm(expr);
        } else if (sub == dist) {
            out = s.dist(expr, expr2);
        } else if (sub == is_unit) {
            out = s.is_unit(expr);
        } else if (sub == is_null) {
            out = s.is_null(expr);
        } else if (sub == approx) {
            out = s.approx(expr, max_n);
        } else if (sub == unitize) {
            out = s.unitize(expr);
        } else if (sub == idempotent) {
            out = s.idempotent(expr);
        } else if (sub == ideal) {
            out = s.ideal_member(expr, gnum::read_text_file(family_path));
        } else if (sub == families) {
            out = s.enum_families(gnum::read_text_file(algebra_path));
        } else if (sub == sign) {
            out = s.sign(expr);
        } else if (sub == decompose) {
            out = s.decompose(expr);
        } else if (sub == qsign) {
            out = s.qsign(expr, gnum::read_text_file(family_path));
        } else if (sub == oracle) {
            out = s.oracle(expr, inject);
            ok = out["pass"].get<bool>();
        } else if (list) {
            out = s.suite_list();
        } else {
            if (suite_name.empty()) throw gnum::Error("usage", "suite needs a NAME or --list");
            out = s.suite(suite_name);
            ok = out["pass"].get<bool>();
        }
        if (format == "text")
            print_text(out);
        else
            std::cout << out.dump() << "\n";
        if (!ok) std::cerr << "gnum: check failed\n";
        return ok ? 0 : 1;
    } catch (const gnum::Error& e) {
        std::cerr << "gnum: " << e.code() << ": " << e.what() << "\n";
        std::cout << gnum::error_json(e.code(), e.what()).dump() << "\n";
        return gnum::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "gnum: internal error: " << e.what() << "\n";
        std::cout << gnum::error_json("internal", e.what()).dump() << "\n";
        return 1;
    }
}
