#include "toric/semigroup.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace toric {

namespace {

void require_same_ambient(const MonomialIdeal &i, const MonomialIdeal &j) {
    if (i.ambient_ptr() != j.ambient_ptr() && !(i.ambient() == j.ambient()))
        throw Error(ErrorKind::AmbientMismatch, "ideals live in different semigroup rings");
}

void require_nonzero(const MonomialIdeal &i, const char *op) {
    if (i.is_zero()) throw Error(ErrorKind::ZeroIdeal, std::string(op) + " of the zero ideal");
}

} // namespace

Semigroup::Semigroup(Cone c) : cone_(std::move(c)), hilbert_(hilbert_basis(cone_)) {}

std::int64_t Semigroup::max_hilbert_coordinate() const {
    std::int64_t m = 0;
    for (const auto &h : hilbert_)
        for (auto x : h) m = std::max(m, std::abs(x));
    return m;
}

SemigroupPtr make_semigroup(Cone c) { return std::make_shared<const Semigroup>(std::move(c)); }

SemigroupPtr make_semigroup(std::initializer_list<LatticePoint> rays) { return make_semigroup(cone_from_rays(rays)); }

MonomialIdeal MonomialIdeal::zero(SemigroupPtr amb) { return MonomialIdeal(std::move(amb), {}); }

MonomialIdeal MonomialIdeal::unit(SemigroupPtr amb) {
    LatticePoint origin(amb->dim());
    return MonomialIdeal(std::move(amb), {origin});
}

MonomialIdeal MonomialIdeal::from_generators(SemigroupPtr amb, std::span<const LatticePoint> pts) {
    for (const auto &p : pts) {
        if (p.dim() != amb->dim())
            throw Error(ErrorKind::DimensionMismatch, "generator " + p.str() + " has the wrong dimension");
        if (!amb->contains(p)) throw Error(ErrorKind::PointOutsideSemigroup, "generator " + p.str() + " is not in S");
    }
    auto mins = minimal_elements(std::vector<LatticePoint>(pts.begin(), pts.end()), amb->cone());
    return MonomialIdeal(std::move(amb), std::move(mins));
}

MonomialIdeal MonomialIdeal::from_generators(SemigroupPtr amb, std::initializer_list<LatticePoint> pts) {
    return from_generators(std::move(amb), std::span<const LatticePoint>(pts.begin(), pts.size()));
}

bool MonomialIdeal::contains(const LatticePoint &v) const {
    const auto &c = amb_->cone();
    return std::any_of(gens_.begin(), gens_.end(), [&](const LatticePoint &u) { return c.contains(v - u); });
}

bool MonomialIdeal::contains(const MonomialIdeal &other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const LatticePoint &g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::shifted(const LatticePoint &d) const {
    if (!amb_->contains(d)) throw Error(ErrorKind::PointOutsideSemigroup, "shift " + d.str() + " is not in S");
    std::vector<LatticePoint> g;
    g.reserve(gens_.size());
    for (const auto &u : gens_) g.push_back(u + d);
    std::sort(g.begin(), g.end());
    return MonomialIdeal(amb_, std::move(g));
}

std::string MonomialIdeal::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
    os << ']';
    return os.str();
}

bool operator==(const MonomialIdeal &a, const MonomialIdeal &b) {
    return a.gens_ == b.gens_ && (a.amb_ == b.amb_ || *a.amb_ == *b.amb_);
}

MonomialIdeal ideal_from_generators(SemigroupPtr amb, std::span<const LatticePoint> pts) {
    return MonomialIdeal::from_generators(std::move(amb), pts);
}

MonomialIdeal sum(const MonomialIdeal &i, const MonomialIdeal &j) {
    require_same_ambient(i, j);
    std::vector<LatticePoint> g(i.generators());
    g.insert(g.end(), j.generators().begin(), j.generators().end());
    return MonomialIdeal::from_generators(i.ambient_ptr(), g);
}

MonomialIdeal product(const MonomialIdeal &i, const MonomialIdeal &j) {
    require_same_ambient(i, j);
    std::vector<LatticePoint> g;
    for (const auto &a : i.generators())
        for (const auto &b : j.generators()) g.push_back(a + b);
    return MonomialIdeal::from_generators(i.ambient_ptr(), g);
}

MonomialIdeal intersection(const MonomialIdeal &i, const MonomialIdeal &j) {
    require_same_ambient(i, j);
    const auto &c = i.ambient().cone();
    std::vector<LatticePoint> g;
    for (const auto &a : i.generators()) {
        for (const auto &b : j.generators()) {
            // (a + sigma) ∩ (b + sigma)
            LatticeRegion r(c.dim());
            for (const auto &n : c.facet_normals())
                r.add({n, Rational(static_cast<long>(std::max(dot(n, a), dot(n, b)))), Relation::GreaterEqual});
            auto m = minimal_lattice_points(r, c);
            g.insert(g.end(), m.begin(), m.end());
        }
    }
    return MonomialIdeal::from_generators(i.ambient_ptr(), g);
}

Polyhedron newton_polyhedron(const MonomialIdeal &i) {
    require_nonzero(i, "Newton polyhedron");
    return newton_polyhedron(i.generators(), i.ambient().cone());
}

MonomialIdeal ideal_of_region(SemigroupPtr amb, const LatticeRegion &region) {
    auto pts = minimal_lattice_points(region, amb->cone());
    return MonomialIdeal::from_generators(std::move(amb), pts);
}

MonomialIdeal ideal_of_region(SemigroupPtr amb, const Polyhedron &region) {
    return ideal_of_region(std::move(amb), LatticeRegion::closed(region));
}

MonomialIdeal integral_closure(const MonomialIdeal &i) {
    if (i.is_zero()) return i;
    return ideal_of_region(i.ambient_ptr(), newton_polyhedron(i));
}

MonomialIdeal closure_of_power(const MonomialIdeal &i, std::int64_t k) {
    if (k < 1) throw Error(ErrorKind::NegativeScale, "power " + std::to_string(k) + " must be positive");
    if (i.is_zero()) return i;
    return ideal_of_region(i.ambient_ptr(), scale_polyhedron(newton_polyhedron(i), Rational(static_cast<long>(k))));
}

bool equals(const MonomialIdeal &i, const MonomialIdeal &j) {
    require_same_ambient(i, j);
    return i == j;
}

} // namespace toric
