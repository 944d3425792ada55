#include "toric/fixed_points.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace toric {

ShiftedNewton shifted_newton(SemigroupPtr amb, Polyhedron polytope, RationalVector base) {
    if (base.dim() != amb->dim() || polytope.dim() != amb->dim())
        throw Error(ErrorKind::DimensionMismatch, "base point or polyhedron has the wrong dimension");
    FaceLattice faces = face_lattice(polytope);
    return {std::move(amb), std::move(polytope), std::move(base), std::move(faces)};
}

ShiftedNewton shifted_newton(const TripleData &tr) {
    return shifted_newton(tr.cartier().ambient(), tr.newton_region(), tr.cartier().base());
}

MonomialIdeal relint_ideal(const ShiftedNewton &sn, std::size_t face) {
    auto pts = minimal_lattice_points(sn.polytope, sn.ambient->cone(), sn.faces[face], sn.base);
    return MonomialIdeal::from_generators(sn.ambient, pts);
}

MonomialIdeal face_ideal(const ShiftedNewton &sn, std::size_t face) {
    MonomialIdeal acc = MonomialIdeal::zero(sn.ambient);
    for (std::size_t j = 0; j < sn.faces.size(); ++j)
        if (sn.faces.contains(face, j)) acc = acc + relint_ideal(sn, j);
    return acc;
}

std::vector<MonomialIdeal> all_face_ideals(const ShiftedNewton &sn) {
    const std::size_t m = sn.faces.size();
    std::vector<MonomialIdeal> k(m, MonomialIdeal::zero(sn.ambient));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < m; ++j) k[j] = relint_ideal(sn, j);

    std::vector<MonomialIdeal> out(m, MonomialIdeal::zero(sn.ambient));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (sn.faces.contains(i, j)) out[i] = out[i] + k[j];
    return out;
}

std::vector<std::size_t> reduce_faces(const std::vector<MonomialIdeal> &face_ideals, std::vector<std::size_t> faces,
                                      const MonomialIdeal &target) {
    std::sort(faces.begin(), faces.end());
    auto sum_without = [&](std::size_t skip) {
        MonomialIdeal acc = MonomialIdeal::zero(target.ambient_ptr());
        for (std::size_t k = 0; k < faces.size(); ++k)
            if (k != skip) acc = acc + face_ideals[faces[k]];
        return acc;
    };
    // Higher-dimensional faces first: their ideals are the smallest.
    for (std::size_t k = faces.size(); k-- > 0;) {
        if (sum_without(k) == target) faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return faces;
}

std::string roman_numeral(std::size_t n) {
    static const std::pair<std::size_t, const char *> table[] = {{1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"},
                                                                 {100, "C"},  {90, "XC"},  {50, "L"},  {40, "XL"},
                                                                 {10, "X"},   {9, "IX"},   {5, "V"},   {4, "IV"},
                                                                 {1, "I"}};
    std::string s;
    for (auto [v, r] : table)
        while (n >= v) {
            s += r;
            n -= v;
        }
    return s;
}

std::vector<FixedIdealRecord> enumerate_fixed(const ShiftedNewton &sn) {
    if (sn.faces.size() > kMaxFaces)
        throw Error(ErrorKind::TooManyFaces,
                    std::to_string(sn.faces.size()) + " faces exceed the limit of " + std::to_string(kMaxFaces));
    const auto ifs = all_face_ideals(sn);

    std::vector<MonomialIdeal> gens;
    for (const auto &i : ifs)
        if (!i.is_zero() && std::find(gens.begin(), gens.end(), i) == gens.end()) gens.push_back(i);

    // Closure of {I_F} under sums.
    std::set<MonomialIdeal> seen(gens.begin(), gens.end());
    std::deque<MonomialIdeal> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
        MonomialIdeal x = queue.front();
        queue.pop_front();
        for (const auto &g : gens) {
            MonomialIdeal y = x + g;
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }

    std::vector<FixedIdealRecord> out;
    out.push_back({MonomialIdeal::zero(sn.ambient), {}, "0"});
    std::size_t n = 0;
    for (const auto &ideal : seen) {
        std::vector<std::size_t> under;
        for (std::size_t f = 0; f < ifs.size(); ++f)
            if (!ifs[f].is_zero() && ideal.contains(ifs[f])) under.push_back(f);
        out.push_back({ideal, reduce_faces(ifs, std::move(under), ideal), roman_numeral(++n)});
    }
    return out;
}

MonomialIdeal smallest_nonzero_fixed(const ShiftedNewton &sn) {
    MonomialIdeal top = face_ideal(sn, sn.faces.top());
    if (top.is_zero())
        throw Error(ErrorKind::AllFixedIdealsZero, "relint(base + P) contains no point of S; every fixed ideal is 0");
    return top;
}

MonomialIdeal largest_fixed(const ShiftedNewton &sn) {
    MonomialIdeal acc = MonomialIdeal::zero(sn.ambient);
    for (const auto &i : all_face_ideals(sn)) acc = acc + i;
    return acc;
}

Decomposition decompose_fixed(const ShiftedNewton &sn, const MonomialIdeal &i) {
    if (i.is_zero()) return {std::vector<std::size_t>{}, std::nullopt, "zero ideal"};
    std::vector<std::size_t> faces;
    for (const auto &v : i.generators()) {
        auto f = face_of_point(sn.polytope, sn.faces, v.to_rational() - sn.base);
        if (!f) return {std::nullopt, v, "generator " + v.str() + " lies outside base + P"};
        if (std::find(faces.begin(), faces.end(), *f) == faces.end()) faces.push_back(*f);
    }
    const auto ifs = all_face_ideals(sn);
    MonomialIdeal rebuilt = MonomialIdeal::zero(sn.ambient);
    for (auto f : faces) rebuilt = rebuilt + ifs[f];
    if (!(rebuilt == i)) {
        for (const auto &g : rebuilt.generators())
            if (!i.contains(g))
                return {std::nullopt, g, "relint point " + g.str() + " of a face of base + P is missing from the ideal"};
    }
    return {reduce_faces(ifs, std::move(faces), i), std::nullopt, "fixed"};
}

} // namespace toric
