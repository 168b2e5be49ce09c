#include "gnum/corpus.hpp"

#include "gnum/parser.hpp"

namespace gnum {

std::vector<SetDescriptor> dyadic_atoms(long m) {
    std::vector<SetDescriptor> out;
    for (long k = 0; k < m; ++k) out.push_back(SetDescriptor::dyadic(m, k));
    return out;
}

namespace {

Rational pick_coefficient(std::mt19937_64& rng) {
    static const Rational mags[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    std::uniform_int_distribution<int> idx(0, 3), sign(0, 1);
    return sign(rng) ? mags[idx(rng)] : Rational(-mags[idx(rng)]);
}

Rational pick_exponent(std::mt19937_64& rng, const CorpusOptions& o) {
    const int den = o.half_exponents ? 2 : 1;
    std::uniform_int_distribution<int> d(o.exp_lo * den, o.exp_hi * den);
    Rational r(d(rng), den);
    r.canonicalize();
    return r;
}

}  // namespace

NormalForm random_normal_form(std::mt19937_64& rng, const std::vector<SetDescriptor>& atoms,
                              const CorpusOptions& opts) {
    std::uniform_real_distribution<double> coin(0, 1);
    std::uniform_int_distribution<int> nterms(1, opts.max_terms);
    NormalForm x;
    for (const auto& a : atoms) {
        if (coin(rng) < opts.zero_atom) continue;
        NormalForm chi = NormalForm::chi(a);
        const int n = nterms(rng);
        for (int i = 0; i < n; ++i) {
            ExactScalar c(pick_coefficient(rng));
            if (opts.complex && coin(rng) < 0.5) c = c + ExactScalar::imaginary(pick_coefficient(rng));
            x = x + NormalForm::alpha(pick_exponent(rng, opts)).scaled(c) * chi;
        }
    }
    return x;
}

std::vector<Fixture> non_unit_fixtures() {
    std::vector<Fixture> out = {
        {"alpha1-on-atom", "alpha(1)*chi(D4_0)"},
        {"chi-atom", "chi(D4_0)"},
        {"alpha3-on-atom", "alpha(3)*chi(D4_0)"},
        {"two-atoms", "chi(D4_0) + chi(D4_1)"},
        {"mixed-exponents", "alpha(-2)*chi(D4_0) + alpha(1)*chi(D4_1)"},
        {"half-exponent", "2*alpha(1/2)*chi(D4_2) - alpha(2)*chi(D4_3)"},
        {"sum-on-three", "(alpha(1) + alpha(2))*chi(D4_0 | D4_1 | D4_2)"},
        {"geometric", "chi(G2)"},
        {"two-geometric", "alpha(1)*chi(G2) + alpha(3)*chi(G3)"},
        {"geometric-dyadic", "alpha(2)*chi(G2 & D2_0) - 3*chi(~G2)"},
        {"level-masked", "alpha(1)*chi(D2_0 & levels(2))"},
        {"chain-10", "alpha(1)*chi(D10_0) + alpha(2)*chi(D10_1) + alpha(3)*chi(D10_2) + alpha(4)*chi(D10_3) + "
                     "alpha(5)*chi(D10_4) + alpha(6)*chi(D10_5) + alpha(7)*chi(D10_6) + alpha(8)*chi(D10_7) + "
                     "alpha(9)*chi(D10_8)"},
        {"chain-odd-6", "alpha(1)*chi(D6_0) + alpha(3)*chi(D6_1) + alpha(5)*chi(D6_2) + alpha(7)*chi(D6_3) + "
                        "alpha(9)*chi(D6_4)"},
        {"complex-coefficient", "(2+5i)*alpha(1)*chi(D4_1)"},
        {"negative-infinite", "-alpha(-3)*chi(D3_0) + alpha(-1)*chi(D3_1)"},
        {"cancelling-sum", "alpha(1)*chi(D4_0) + alpha(1)*chi(D4_1) - alpha(1)*chi(D4_0 | D4_1 | D4_2)"},
        {"near-one", "(1 - alpha(1))*chi(D8_3)"},
        {"radical-coefficient", "2^(1/2)*alpha(3/2)*chi(D4_3) + alpha(2)*chi(D4_2)"},
    };
    std::mt19937_64 rng(20240611);
    CorpusOptions o;
    o.zero_atom = 0.3;
    const auto atoms = dyadic_atoms(4);
    std::uniform_int_distribution<int> zero_atom(0, 3);
    for (int i = 0; out.size() < 30; ++i) {
        // force one zero atom so the element is a zero divisor
        const int z = zero_atom(rng);
        std::vector<SetDescriptor> keep;
        for (int k = 0; k < 4; ++k)
            if (k != z) keep.push_back(atoms[static_cast<std::size_t>(k)]);
        NormalForm x = random_normal_form(rng, keep, o);
        if (x.is_null()) continue;
        out.push_back({"random-" + std::to_string(i), format(x.canonical().to_germ())});
    }
    return out;
}

std::vector<Fixture> idempotent_fixtures() {
    return {
        {"atom-0", "chi(D4_0)"},
        {"atom-3", "chi(D4_3)"},
        {"geometric", "chi(G2)"},
        {"geometric-3", "chi(G3)"},
        {"complement", "1 - chi(G3)"},
        {"disjoint-sum", "chi(D4_0) + chi(D4_2)"},
        {"product", "chi(G2) * chi(D2_0)"},
        {"union", "chi(D8_1 | D8_4 | D8_6)"},
        {"null-perturbation", "chi(D4_1) + alpha(1)*chi(~T4)"},
        {"null-perturbation-2", "chi(G2) + 5*alpha(-1)*chi(~T16)"},
        {"square", "chi(D6_2) * chi(D6_2)"},
        {"inclusion-exclusion", "chi(D2_0) + chi(G2) - chi(D2_0)*chi(G2)"},
        {"intersection-complement", "chi(D3_0) * (1 - chi(G5))"},
        {"dyadic-pair", "chi(D10_0 | D10_5)"},
        {"three-way", "chi(D3_0) + chi(D3_1)"},
        {"levels", "chi(D2_1 & levels(3))"},
        {"level-union", "chi(D2_1 | levels(0, 4))"},
        {"geometric-tail", "chi(G2 & T4) + chi(~T4)*chi(D2_0)"},
        {"double-complement", "1 - (1 - chi(D8_7))"},
        {"sum-of-products", "chi(G2)*chi(G3) + chi(D4_0)"},
    };
}

}  // namespace gnum
