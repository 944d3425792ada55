#pragma once

// Characteristic-free side: toric non-LC ideals, the sets of intermediate
// adjoint ideals, and the perturbation that realises each I_F as a non-LC
// ideal of a perturbed pair.

#include "toric/fixed_points.hpp"

#include <cstdint>
#include <vector>

namespace toric {

// The point m/l with l (K_X + Delta) = Div(x^m).
struct BasePointData {
    RationalVector base;

    static BasePointData from_cartier(const CartierData &c) { return {c.base()}; }
    // l must be positive.
    static BasePointData from_principal(const LatticePoint &m, std::int64_t l);
};

// <x^v : v - base in t Newt(a) + s Newt(b)>.
MonomialIdeal non_lc_ideal(SemigroupPtr amb, const BasePointData &bp, const MonomialIdeal &a, const Rational &t,
                           const MonomialIdeal &b, const Rational &s);
inline MonomialIdeal non_lc_ideal(SemigroupPtr amb, const BasePointData &bp, const MonomialIdeal &a,
                                  const Rational &t) {
    auto unit = MonomialIdeal::unit(amb);
    return non_lc_ideal(std::move(amb), bp, a, t, unit, Rational(0));
}

struct PerturbationResult {
    MonomialIdeal ideal;
    std::int64_t n;   // the 1/n at which the answer was taken
    bool agrees;      // ideal == face_ideal(F)
};

// Non-LC ideal after pushing the boundary by 1/n towards a point a of
// relint(F): <x^v : (1 + 1/n)(v - base) - a/n in P>. For P a cone this is
// the shift v - base - a/(n+1) in P. n doubles from n0 until the ideal is
// unchanged over two consecutive doublings and n is past the point where no
// lattice point can still cross a facet; the cap is 2^20 n0.
PerturbationResult face_ideal_via_perturbation(const ShiftedNewton &sn, std::size_t face, std::int64_t n0 = 1);

// All sums of the ideals sum_{tau' ⊇ tau} K_tau', with K_tau built from the
// lattice points of a bounding box classified by the face of base + P whose
// relative interior holds them.
std::vector<MonomialIdeal> intermediate_adjoint_set(SemigroupPtr amb, const BasePointData &bp, const MonomialIdeal &a,
                                                    const Rational &t);

} // namespace toric
