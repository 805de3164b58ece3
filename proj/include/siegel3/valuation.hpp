// Valuation calculus along the product locus H1: lower bounds for the order of
// rational modular forms nu(T) * chi10^m, regularity, and the cusp criterion.
//
// The weight vector (2, 1, 0, -1, 0, 1, 2) on (a0..a6) encodes the known
// orders of the coordinate functions along H1; positions 0 and 6 are only
// lower bounds (>= 2), so using 2 there keeps the bound sound.
#ifndef SIEGEL3_VALUATION_HPP
#define SIEGEL3_VALUATION_HPP

#include "siegel3/invariants.hpp"

namespace siegel3 {

inline constexpr std::array<int64_t, 7> kH1Weights = {2, 1, 0, -1, 0, 1, 2};

inline int64_t h1_monomial_weight(const Monomial& m) {
    int64_t w = 0;
    for (size_t i = 0; i < 7; ++i) w += kH1Weights[i] * static_cast<int64_t>(m.e[i]);
    return w;
}

// min over monomials of sum_i w_i e_i; a sound lower bound for ord_H1(nu(T))
inline int64_t h1_lower_bound(const PolyGF3& T) {
    if (T.is_zero()) throw std::invalid_argument("h1_lower_bound: zero polynomial");
    if (!(*T.vars() == *VarSet::invariant()))
        throw std::invalid_argument("h1_lower_bound: expected a polynomial in a0..a6");
    int64_t best = INT64_MAX;
    for (const auto& t : T.terms()) best = std::min(best, h1_monomial_weight(t.m));
    return best;
}

// nu(T) * chi10^m: an invariant divided down by the chi10 localization
struct RationalForm {
    PolyGF3 T;
    uint32_t chi10_power{0};
    int64_t h1_bound{0};  // cached h1_lower_bound(T)

    RationalForm(PolyGF3 invariant_part, uint32_t m) : T(std::move(invariant_part)), chi10_power(m) {
        if (!is_invariant(T))
            throw std::invalid_argument("RationalForm: T fails the invariance oracle");
        h1_bound = h1_lower_bound(T);
    }

    uint64_t weight() const { return T.degree() + 10ull * chi10_power; }
};

// chi10 has order exactly 2 along H1, so nu(T) chi10^m is regular whenever
// h1_lower_bound(T) + 2m >= 0 (a sound sufficient condition)
inline bool is_regular(const RationalForm& phi) {
    return phi.h1_bound + 2 * static_cast<int64_t>(phi.chi10_power) >= 0;
}

// the invariant T * D^m, i.e. the image of the form under mu (mu(chi10) = D)
inline PolyGF3 mu_image(const RationalForm& phi, const PolyGF3& D) {
    if (!is_regular(phi))
        throw std::invalid_argument("mu_image: form is not certified regular");
    return phi.T * D.pow(phi.chi10_power);
}

// a regular form is a cusp form iff its invariant image is divisible by the
// discriminant D
inline bool is_cusp(const RationalForm& phi, const PolyGF3& D) {
    return exact_divide(mu_image(phi, D), D).has_value();
}

// the six generators of the ring of modular forms, as rational forms
struct ModularGenerators {
    RationalForm psi2, chi10, psi12, chi14, chi35, chi36;
};

inline ModularGenerators modular_generators(const NamedInvariants& g) {
    return ModularGenerators{
        RationalForm(g.A, 0),   // psi2,  weight 2
        RationalForm(g.D, 0),   // chi10, weight 10
        RationalForm(g.S, 0),   // psi12, weight 12
        RationalForm(g.B, 1),   // chi14 = chi_B chi10, weight 14
        RationalForm(g.E, 2),   // chi35 = nu(E D^2),   weight 35
        RationalForm(g.C, 3),   // chi36 = nu(C D^3),   weight 36
    };
}

}  // namespace siegel3

#endif
