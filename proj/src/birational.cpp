#include "toric/birational.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace toric {

namespace {

Polyhedron region_polyhedron(const Semigroup &amb, const MonomialIdeal &a, const Rational &t) {
    if (t == 0 || a.is_unit()) return Polyhedron::from_cone(amb.cone());
    return scale_polyhedron(newton_polyhedron(a), t);
}

} // namespace

BasePointData BasePointData::from_principal(const LatticePoint &m, std::int64_t l) {
    if (l <= 0) throw Error(ErrorKind::NegativeScale, "l must be positive");
    return {Rational(1, static_cast<unsigned long>(l)) * m.to_rational()};
}

MonomialIdeal non_lc_ideal(SemigroupPtr amb, const BasePointData &bp, const MonomialIdeal &a, const Rational &t,
                           const MonomialIdeal &b, const Rational &s) {
    if (t < 0 || s < 0) throw Error(ErrorKind::NegativeScale, "exponents must be nonnegative");
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroIdeal, "non-LC ideal of the zero ideal");
    Polyhedron region = minkowski_sum(region_polyhedron(*amb, a, t), region_polyhedron(*amb, b, s));
    return ideal_of_region(std::move(amb), region.translated(bp.base));
}

PerturbationResult face_ideal_via_perturbation(const ShiftedNewton &sn, std::size_t face, std::int64_t n0) {
    const RationalVector a = relint_point(sn.polytope, sn.faces[face]);
    auto at = [&](std::int64_t n) {
        LatticeRegion r(sn.polytope.dim());
        const Rational nn(static_cast<long>(n));
        for (const auto &h : sn.polytope.hrep())
            r.add({h.normal, (nn * h.offset + dot(h.normal, a)) / (nn + 1) + dot(h.normal, sn.base),
                   Relation::GreaterEqual});
        return ideal_of_region(sn.ambient, r);
    };

    // Lattice slacks <n, v - base> - c lie in (1/D)Z; once 1/n <= 1/(D g) with
    // g = max <n, a> - c, no lattice point changes side any more.
    BigInt den = 1, g = 0;
    for (const auto &h : sn.polytope.hrep()) {
        Rational off = h.offset + dot(h.normal, sn.base);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), off.get_den_mpz_t());
        g = std::max(g, ceil(dot(h.normal, a) - h.offset));
    }
    const BigInt threshold = den * g;

    const std::int64_t cap = n0 << 20;
    std::int64_t n = n0;
    MonomialIdeal prev = at(n);
    int unchanged = 0;
    while (unchanged < 2 || BigInt(static_cast<long>(n)) < threshold) {
        if (n > cap / 2)
            throw Error(ErrorKind::NoStabilization, "perturbation did not stabilise below n = " + std::to_string(cap));
        n *= 2;
        MonomialIdeal cur = at(n);
        unchanged = cur == prev ? unchanged + 1 : 0;
        prev = std::move(cur);
    }
    bool agrees = prev == face_ideal(sn, face);
    return {std::move(prev), n, agrees};
}

std::vector<MonomialIdeal> intermediate_adjoint_set(SemigroupPtr amb, const BasePointData &bp, const MonomialIdeal &a,
                                                    const Rational &t) {
    const Polyhedron p = region_polyhedron(*amb, a, t);
    const FaceLattice faces = face_lattice(p);
    const Cone &sigma = amb->cone();

    std::optional<Box> box;
    for (const auto &f : faces.faces()) {
        auto b = LatticeRegion::relint(p, f, bp.base).minimal_point_box(sigma);
        if (b) box = box ? box->hull(*b) : *b;
    }

    std::vector<std::vector<LatticePoint>> by_face(faces.size());
    if (box) {
        LatticeRegion closed = LatticeRegion::closed(p.translated(bp.base));
        closed.intersect(sigma);
        auto cons = integral_form(closed);
        for (const auto &v : scan_box_parallel(*box, *cons)) {
            auto f = face_of_point(p, faces, v.to_rational() - bp.base);
            if (f) by_face[*f].push_back(v);
        }
    }

    std::vector<MonomialIdeal> k;
    for (auto &pts : by_face) k.push_back(MonomialIdeal::from_generators(amb, pts));

    std::vector<MonomialIdeal> gens;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        MonomialIdeal acc = MonomialIdeal::zero(amb);
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (faces.contains(i, j)) acc = acc + k[j];
        if (!acc.is_zero()) gens.push_back(std::move(acc));
    }

    std::set<MonomialIdeal> all{MonomialIdeal::zero(amb)};
    std::deque<MonomialIdeal> queue;
    for (const auto &g : gens)
        if (all.insert(g).second) queue.push_back(g);
    while (!queue.empty()) {
        MonomialIdeal x = queue.front();
        queue.pop_front();
        for (const auto &g : gens) {
            MonomialIdeal y = x + g;
            if (all.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {all.begin(), all.end()};
}

} // namespace toric
