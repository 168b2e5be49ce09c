#include "gnum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gnum/errors.hpp"
#include "gnum/eval.hpp"
#include "gnum/normal_form.hpp"
#include "json.hpp"

namespace gnum {

SampleGrid SampleGrid::from_json_text(const std::string& text) {
    SampleGrid g;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("grid-invalid", std::string("grid is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error("grid-invalid", "grid must be a JSON object");
    try {
        if (j.contains("levels")) g.levels = j["levels"].get<std::vector<long>>();
        if (j.contains("iotas")) {
            g.iotas.clear();
            for (const auto& v : j["iotas"])
                g.iotas.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>()));
        }
        g.k_min = j.value("k_min", g.k_min);
        g.k_max = j.value("k_max", g.k_max);
        if (j.contains("strides")) g.strides = j["strides"].get<std::vector<long>>();
        if (j.contains("precision")) g.precision = parse_rational(j["precision"].get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw Error("grid-invalid", std::string("grid field has the wrong type: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error("grid-invalid", std::string("grid field is not a rational: ") + e.what());
    }
    g.validate();
    return g;
}

void SampleGrid::validate() const {
    if (levels.empty() || iotas.empty() || strides.empty()) throw Error("grid-invalid", "grid lists must be nonempty");
    if (k_min < 0 || k_max <= k_min) throw Error("grid-invalid", "k range must be strictly increasing");
    for (long q : levels)
        if (q < 0) throw Error("grid-invalid", "levels must be natural numbers");
    for (const auto& i : iotas)
        if (i <= 0 || i > 1) throw Error("grid-invalid", "iotas must lie in (0,1]");
    for (long s : strides)
        if (s < 1) throw Error("grid-invalid", "strides must be positive");
}

namespace {

constexpr double kTightBand = 0.05;
constexpr std::size_t kTightPoints = 4;

struct Sample {
    long k;
    double log_eps;
    double log_abs;  // -inf for zero
};

std::vector<Sample> sample_stream(const Germ& x, const SampleGrid& g, long level, const Rational& iota) {
    std::vector<Sample> out;
    for (long k = g.k_min; k <= g.k_max; ++k) {
        const Rational eps(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(k));
        ScalarValue v = eval(x, TestPoint(level, iota, eps), g.precision);
        double la = -std::numeric_limits<double>::infinity();
        if (!v.certainly_zero()) {
            const double m = v.modulus_double();
            if (m > 0) la = std::log(m);
        }
        out.push_back({k, -static_cast<double>(k) * std::log(2.0), la});
    }
    return out;
}

bool fit(const std::vector<Sample>& pts, double& slope, double& band, std::size_t& used) {
    std::vector<const Sample*> use;
    for (const auto& p : pts)
        if (std::isfinite(p.log_abs)) use.push_back(&p);
    used = use.size();
    if (use.size() < 3) return false;
    double mx = 0, my = 0;
    for (auto* p : use) {
        mx += p->log_eps;
        my += p->log_abs;
    }
    mx /= static_cast<double>(use.size());
    my /= static_cast<double>(use.size());
    double sxx = 0, sxy = 0;
    for (auto* p : use) {
        sxx += (p->log_eps - mx) * (p->log_eps - mx);
        sxy += (p->log_eps - mx) * (p->log_abs - my);
    }
    slope = sxy / sxx;
    double ss = 0;
    for (auto* p : use) {
        const double r = p->log_abs - (my + slope * (p->log_eps - mx));
        ss += r * r;
    }
    const double sigma = std::sqrt(ss / static_cast<double>(use.size()));
    // residual spread converted to slope units over the sampled range
    band = 3.0 * sigma / std::sqrt(sxx);
    return true;
}

}  // namespace

SampledValuation sampled_valuation(const Germ& x, const SampleGrid& g) {
    g.validate();
    SampledValuation out;
    for (long q : g.levels) {
        for (const auto& iota : g.iotas) {
            auto samples = sample_stream(x, g, q, iota);
            for (long s : g.strides) {
                for (long off = 0; off < s; ++off) {
                    std::vector<Sample> part;
                    for (const auto& p : samples)
                        if ((p.k - g.k_min) % s == off) part.push_back(p);
                    double slope = 0, band = 0;
                    std::size_t used = 0;
                    if (fit(part, slope, band, used)) out.fits.push_back({q, iota, s, off, slope, band, used});
                }
            }
        }
    }
    out.infinite = out.fits.empty();
    // Streams that mix cells with different exponents fit badly; the minimum is taken over tight fits,
    // falling back to whole-level streams when nothing fits tightly (oscillating germs).
    bool any = false;
    for (int pass = 0; pass < 2 && !any; ++pass) {
        for (const auto& f : out.fits) {
            if (pass == 0 ? (f.band > kTightBand || f.points < kTightPoints) : f.stride != 1) continue;
            if (!any || f.slope < out.estimate) {
                out.estimate = f.slope;
                out.band = f.band;
            }
            any = true;
        }
    }
    return out;
}

bool CrossCheckReport::pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

CrossCheckReport cross_check(const Germ& x, const SampleGrid& g, const CrossCheckOptions& opts) {
    CrossCheckReport report;
    const SampledValuation sv = sampled_valuation(x, g);
    const std::string sampled_text = sv.infinite ? "+inf" : std::to_string(sv.estimate);
    std::optional<NormalForm> nf;
    try {
        nf = NormalForm::from_germ(x);
    } catch (const NotNormalizable& e) {
        report.entries.push_back({"valuation", "n/a", sampled_text, true, std::string("sampled only: ") + e.what()});
        return report;
    }
    std::optional<Rational> v = nf->valuation();
    if (opts.injected_valuation) v = *opts.injected_valuation;

    CheckEntry val{"valuation", v ? to_string(*v) : "+inf", sampled_text, true, ""};
    if (!v || sv.infinite) {
        val.pass = !v && sv.infinite;
    } else {
        const double diff = std::abs(sv.estimate - v->get_d());
        val.pass = diff <= std::max(opts.tolerance, sv.band);
        val.detail = "difference " + std::to_string(diff) + ", band " + std::to_string(sv.band);
    }
    report.entries.push_back(val);

    // null and unit verdicts from the finer half of the grid
    const long k_mid = (g.k_min + g.k_max + 1) / 2;
    bool all_zero = true, any_zero = false;
    for (long q : g.levels) {
        for (const auto& iota : g.iotas) {
            for (long k = k_mid; k <= g.k_max; ++k) {
                const Rational eps(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(k));
                const bool zero = eval(x, TestPoint(q, iota, eps), g.precision).certainly_zero();
                all_zero = all_zero && zero;
                any_zero = any_zero || zero;
            }
        }
    }
    const bool exact_null = opts.injected_valuation ? !v.has_value() : nf->is_null();
    report.entries.push_back({"null", exact_null ? "true" : "false", all_zero ? "true" : "false", exact_null == all_zero,
                              ""});
    if (!exact_null) {
        bool exact_unit = true;
        for (Minterm m : nf->universe()->near_zero()) exact_unit = exact_unit && !nf->poly_at(m).empty();
        // a zero sample certifies a non-unit only if the zero cell is visited by the grid
        const bool sampled_unit = !any_zero;
        CheckEntry unit{"unit", exact_unit ? "true" : "false", sampled_unit ? "true" : "false", true, ""};
        unit.pass = !(exact_unit && !sampled_unit);
        if (!exact_unit && sampled_unit) unit.detail = "zero cell not visited by the grid";
        report.entries.push_back(unit);
    }
    return report;
}

}  // namespace gnum
