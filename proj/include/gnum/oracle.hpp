#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnum/germ.hpp"
#include "gnum/rational.hpp"

namespace gnum {

// Sample points eps = 2^-k for k in [k_min, k_max] at every (level, iota).
struct SampleGrid {
    std::vector<long> levels{0, 3, 6};
    std::vector<Rational> iotas{Rational(1), Rational(1, 2)};
    long k_min = 4;
    long k_max = 24;
    // Each (level, iota) stream is also split into residue classes of k modulo these strides.
    std::vector<long> strides{1, 2, 3, 4, 5, 6, 8, 10};
    Rational precision{1, 1L << 40};

    static SampleGrid default_grid() { return {}; }
    // {"levels":[0,3,6],"iotas":["1","1/2"],"k_min":4,"k_max":24,"strides":[1,2,4]}
    static SampleGrid from_json_text(const std::string& text);
    void validate() const;
};

struct StreamFit {
    long level;
    Rational iota;
    long stride, offset;
    double slope, band;
    std::size_t points;
};

struct SampledValuation {
    bool infinite = false;  // every sample was zero
    double estimate = 0;
    double band = 0;
    std::vector<StreamFit> fits;
};

// Least-squares slope of log|x| against log eps per stream, smallest slope over streams.
SampledValuation sampled_valuation(const Germ& x, const SampleGrid& g = SampleGrid::default_grid());

struct CheckEntry {
    std::string check;
    std::string exact;
    std::string sampled;
    bool pass = true;
    std::string detail;
};

struct CrossCheckReport {
    std::vector<CheckEntry> entries;
    bool pass() const;
};

struct CrossCheckOptions {
    // Replaces the exact valuation before comparison; used to confirm that disagreements are caught.
    std::optional<std::optional<Rational>> injected_valuation;
    double tolerance = 0.05;
};

CrossCheckReport cross_check(const Germ& x, const SampleGrid& g = SampleGrid::default_grid(),
                             const CrossCheckOptions& opts = {});

}  // namespace gnum
