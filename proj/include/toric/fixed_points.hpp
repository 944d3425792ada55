#pragma once

// Fixed ideals of the Cartier algebra attached to (phi, a^t): the face ideals
// I_F of the shifted polyhedron base + P and every sum of them.

#include "toric/cartier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct ShiftedNewton {
    SemigroupPtr ambient;
    Polyhedron polytope; // P = t Newt(a), or sigma
    RationalVector base;
    FaceLattice faces;
};

ShiftedNewton shifted_newton(const TripleData &tr);
ShiftedNewton shifted_newton(SemigroupPtr amb, Polyhedron polytope, RationalVector base);

struct FixedIdealRecord {
    MonomialIdeal ideal;
    std::vector<std::size_t> generating_faces; // indices into ShiftedNewton::faces, reduced
    std::string label;
};

// K_F: lattice points of relint(base + F) ∩ S.
MonomialIdeal relint_ideal(const ShiftedNewton &sn, std::size_t face);
// I_F = sum of K_{F'} over faces F' containing F.
MonomialIdeal face_ideal(const ShiftedNewton &sn, std::size_t face);
// face_ideal for every face, computed concurrently.
std::vector<MonomialIdeal> all_face_ideals(const ShiftedNewton &sn);

constexpr std::size_t kMaxFaces = 64;

// Zero record first, then the nonzero sums in canonical order, labelled
// I, II, III, ...
std::vector<FixedIdealRecord> enumerate_fixed(const ShiftedNewton &sn);

MonomialIdeal smallest_nonzero_fixed(const ShiftedNewton &sn);
MonomialIdeal largest_fixed(const ShiftedNewton &sn);

struct Decomposition {
    std::optional<std::vector<std::size_t>> faces; // empty optional: not fixed
    std::optional<LatticePoint> witness;
    std::string reason;
};

Decomposition decompose_fixed(const ShiftedNewton &sn, const MonomialIdeal &i);

// Greedy reduction of a face set: drop faces whose ideal is already covered
// by the others.
std::vector<std::size_t> reduce_faces(const std::vector<MonomialIdeal> &face_ideals, std::vector<std::size_t> faces,
                                      const MonomialIdeal &target);

std::string roman_numeral(std::size_t n);

} // namespace toric
