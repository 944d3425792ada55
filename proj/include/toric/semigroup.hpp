#pragma once

// Monomial ideals of k[S], S = sigma ∩ M, stored through their minimal
// generators only.

#include "toric/lattice.hpp"
#include "toric/polyhedral.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace toric {

class Semigroup {
public:
    explicit Semigroup(Cone c);

    const Cone &cone() const noexcept { return cone_; }
    const std::vector<LatticePoint> &hilbert() const noexcept { return hilbert_; }
    std::size_t dim() const noexcept { return cone_.dim(); }

    // S is saturated, so membership is the facet test.
    bool contains(const LatticePoint &x) const { return cone_.contains(x); }
    // Componentwise maximum absolute coordinate over the Hilbert basis.
    std::int64_t max_hilbert_coordinate() const;

    friend bool operator==(const Semigroup &a, const Semigroup &b) { return a.cone_ == b.cone_; }

private:
    Cone cone_;
    std::vector<LatticePoint> hilbert_;
};

using SemigroupPtr = std::shared_ptr<const Semigroup>;

SemigroupPtr make_semigroup(Cone c);
SemigroupPtr make_semigroup(std::initializer_list<LatticePoint> rays);

class MonomialIdeal {
public:
    static MonomialIdeal zero(SemigroupPtr amb);
    static MonomialIdeal unit(SemigroupPtr amb);
    // Throws PointOutsideSemigroup naming the first offending point.
    static MonomialIdeal from_generators(SemigroupPtr amb, std::span<const LatticePoint> pts);
    static MonomialIdeal from_generators(SemigroupPtr amb, std::initializer_list<LatticePoint> pts);

    const Semigroup &ambient() const noexcept { return *amb_; }
    const SemigroupPtr &ambient_ptr() const noexcept { return amb_; }
    const std::vector<LatticePoint> &generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }

    bool contains(const LatticePoint &v) const;
    // Containment of ideals: other ⊆ *this.
    bool contains(const MonomialIdeal &other) const;

    // Shift every generator by d (multiplication by x^d); d must lie in S.
    MonomialIdeal shifted(const LatticePoint &d) const;

    // "0" for the zero ideal, otherwise the sorted generator list.
    std::string str() const;

    friend bool operator==(const MonomialIdeal &a, const MonomialIdeal &b);
    // Canonical order: zero first, then lexicographic on generator lists.
    friend bool operator<(const MonomialIdeal &a, const MonomialIdeal &b) { return a.gens_ < b.gens_; }

private:
    MonomialIdeal(SemigroupPtr amb, std::vector<LatticePoint> gens) : amb_(std::move(amb)), gens_(std::move(gens)) {}

    SemigroupPtr amb_;
    std::vector<LatticePoint> gens_;
};

MonomialIdeal ideal_from_generators(SemigroupPtr amb, std::span<const LatticePoint> pts);
MonomialIdeal sum(const MonomialIdeal &i, const MonomialIdeal &j);
MonomialIdeal product(const MonomialIdeal &i, const MonomialIdeal &j);
MonomialIdeal intersection(const MonomialIdeal &i, const MonomialIdeal &j);
MonomialIdeal integral_closure(const MonomialIdeal &i);
MonomialIdeal closure_of_power(const MonomialIdeal &i, std::int64_t k);
bool equals(const MonomialIdeal &i, const MonomialIdeal &j);

inline MonomialIdeal operator+(const MonomialIdeal &i, const MonomialIdeal &j) { return sum(i, j); }
inline MonomialIdeal operator*(const MonomialIdeal &i, const MonomialIdeal &j) { return product(i, j); }

// Newt(I) = conv(generators) + sigma; I must be nonzero.
Polyhedron newton_polyhedron(const MonomialIdeal &i);

// Monomial ideal generated by the lattice points of a region (intersected
// with S).
MonomialIdeal ideal_of_region(SemigroupPtr amb, const LatticeRegion &region);
MonomialIdeal ideal_of_region(SemigroupPtr amb, const Polyhedron &region);

} // namespace toric
