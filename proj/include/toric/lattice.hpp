#pragma once

// Lattice points of rational regions: exact bounding boxes for minimal
// elements, box scans (serial reference and OpenMP kernel), and the
// S-minimal antichain extraction that turns regions into ideal generators.

#include "toric/polyhedral.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

enum class Relation { GreaterEqual, Greater, Equal };

struct Constraint {
    LatticePoint normal;
    Rational offset;
    Relation rel = Relation::GreaterEqual;
};

struct Box {
    LatticePoint lower;
    LatticePoint upper;

    std::size_t dim() const noexcept { return lower.dim(); }
    bool empty() const;
    // Number of lattice points; saturates at SIZE_MAX.
    std::size_t count() const;
    bool contains(const LatticePoint &x) const;
    Box hull(const Box &o) const;
};

// A finite system of (strict, weak, or equality) linear constraints. Only its
// lattice points are of interest, so strict inequalities and equalities are
// tightened to integral weak ones before any geometry is done.
class LatticeRegion {
public:
    explicit LatticeRegion(std::size_t dim) : dim_(dim) {}

    static LatticeRegion closed(const Polyhedron &p);
    // relint(shift + f) for a face f of p.
    static LatticeRegion relint(const Polyhedron &p, const Face &f, const RationalVector &shift);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Constraint> &constraints() const noexcept { return cons_; }

    LatticeRegion &add(Constraint c);
    LatticeRegion &intersect(const Cone &c);

    bool contains(const LatticePoint &x) const;
    bool contains(const RationalVector &x) const;

    // Box holding every element of region ∩ M that is minimal for the order
    // x >= y iff x - y in `amb`; nullopt when region ∩ M is empty. The region
    // is intersected with `amb` first. Throws UnboundedMinimalSet if the
    // tightened region still contains a line.
    std::optional<Box> minimal_point_box(const Cone &amb) const;

private:
    std::size_t dim_;
    std::vector<Constraint> cons_;
};

// Integral form of a region: <normal, x> >= bound, or == bound.
struct IntegralConstraint {
    LatticePoint normal;
    std::int64_t bound;
    bool equality;
};

// Empty optional when some equality has no lattice solution.
std::optional<std::vector<IntegralConstraint>> integral_form(const LatticeRegion &r);

std::vector<LatticePoint> scan_box_serial(const Box &box, const std::vector<IntegralConstraint> &cons);
std::vector<LatticePoint> scan_box_parallel(const Box &box, const std::vector<IntegralConstraint> &cons);

// Minimal elements of a finite point set under x >= y iff x - y in amb.
std::vector<LatticePoint> minimal_elements(std::vector<LatticePoint> points, const Cone &amb);

std::vector<LatticePoint> minimal_lattice_points(const LatticeRegion &region, const Cone &amb);
std::vector<LatticePoint> minimal_lattice_points(const Polyhedron &region, const Cone &amb);
// Restricted to relint(shift + face).
std::vector<LatticePoint> minimal_lattice_points(const Polyhedron &region, const Cone &amb, const Face &face,
                                                 const RationalVector &shift);

} // namespace toric
