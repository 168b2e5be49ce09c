#pragma once

#include <random>
#include <string>
#include <vector>

#include "gnum/normal_form.hpp"

namespace gnum {

// dyadic(m, k) for k = 0..m-1: a partition into m Proper atoms.
std::vector<SetDescriptor> dyadic_atoms(long m);

struct CorpusOptions {
    int max_terms = 2;  // per atom
    int exp_lo = -5, exp_hi = 5;
    bool half_exponents = true;
    // Probability that an atom carries no terms.
    double zero_atom = 0.2;
    bool complex = false;
};

// Coefficients from {±1/2, ±1, ±3/2, ±2}, exponents in [exp_lo, exp_hi].
NormalForm random_normal_form(std::mt19937_64& rng, const std::vector<SetDescriptor>& atoms,
                              const CorpusOptions& opts = {});

struct Fixture {
    std::string name;
    std::string expr;
};

// Non-zero non-units: Case A shapes, a Case B chain and random elements with a zero atom.
std::vector<Fixture> non_unit_fixtures();
// Elements with e^2 - e null, including null perturbations.
std::vector<Fixture> idempotent_fixtures();

}  // namespace gnum
