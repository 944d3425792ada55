#pragma once

// Exact rational cones and polyhedra in M_R, their face lattices and
// relative-interior tests. Everything here is immutable after construction.

#include "toric/arith.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace toric {

// Pointed, full-dimensional rational polyhedral cone, held in both
// descriptions. Rays and facet normals are primitive and sorted.
class Cone {
public:
    static Cone from_rays(std::span<const LatticePoint> rays);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LatticePoint> &rays() const noexcept { return rays_; }
    const std::vector<LatticePoint> &facet_normals() const noexcept { return normals_; }

    bool contains(const LatticePoint &x) const;
    bool contains(const RationalVector &x) const;

    // Sum of <x, n> over facet normals; positive on every nonzero point of the
    // cone, used to order lattice points.
    std::int64_t degree(const LatticePoint &x) const;

    Cone dual() const { return Cone(dim_, normals_, rays_); }

    friend bool operator==(const Cone &a, const Cone &b) {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.normals_ == b.normals_;
    }

private:
    Cone(std::size_t dim, std::vector<LatticePoint> rays, std::vector<LatticePoint> normals)
        : dim_(dim), rays_(std::move(rays)), normals_(std::move(normals)) {}

    std::size_t dim_ = 0;
    std::vector<LatticePoint> rays_;
    std::vector<LatticePoint> normals_;
};

Cone cone_from_rays(std::span<const LatticePoint> rays);
Cone cone_from_rays(std::initializer_list<LatticePoint> rays);
Cone dual_cone(const Cone &c);

// <normal, x> >= offset, normal primitive and integral.
struct Inequality {
    LatticePoint normal;
    Rational offset;

    Rational slack(const RationalVector &x) const { return dot(normal, x) - offset; }
    friend bool operator==(const Inequality &, const Inequality &) = default;
};

// conv(vertices) + recession with the recession cone full-dimensional and
// pointed. The inequality list is canonical (sorted, primitive normals), so
// equality of polyhedra is equality of members.
class Polyhedron {
public:
    static Polyhedron from_generators(std::span<const RationalVector> points, const Cone &recession);
    static Polyhedron from_cone(const Cone &c);

    std::size_t dim() const noexcept { return recession_.dim(); }
    const std::vector<RationalVector> &vertices() const noexcept { return vertices_; }
    const Cone &recession() const noexcept { return recession_; }
    const std::vector<Inequality> &hrep() const noexcept { return hrep_; }

    bool contains(const RationalVector &x) const;
    bool contains(const LatticePoint &x) const { return contains(x.to_rational()); }

    Polyhedron translated(const RationalVector &shift) const;

    friend bool operator==(const Polyhedron &a, const Polyhedron &b) {
        return a.vertices_ == b.vertices_ && a.recession_ == b.recession_ && a.hrep_ == b.hrep_;
    }

private:
    Polyhedron(std::vector<RationalVector> vertices, Cone recession, std::vector<Inequality> hrep)
        : vertices_(std::move(vertices)), recession_(std::move(recession)), hrep_(std::move(hrep)) {}

    std::vector<RationalVector> vertices_;
    Cone recession_;
    std::vector<Inequality> hrep_;
};

Polyhedron newton_polyhedron(std::span<const LatticePoint> generators, const Cone &sigma);
Polyhedron scale_polyhedron(const Polyhedron &p, const Rational &c);
Polyhedron minkowski_sum(const Polyhedron &p, const Polyhedron &q);

// A face is identified by the inequalities tight on it. The improper face
// has no active facets.
struct Face {
    std::vector<std::size_t> active_facets;
    int dim = 0;
    RationalVector hull_point;
    std::vector<RationalVector> hull_directions;
    std::vector<std::size_t> vertex_ids;  // into Polyhedron::vertices()
    std::vector<std::size_t> ray_ids;     // into recession().rays()

    bool is_vertex() const noexcept { return dim == 0; }
    friend bool operator==(const Face &a, const Face &b) { return a.active_facets == b.active_facets; }
};

class FaceLattice {
public:
    explicit FaceLattice(std::vector<Face> faces);

    const std::vector<Face> &faces() const noexcept { return faces_; }
    std::size_t size() const noexcept { return faces_.size(); }
    const Face &operator[](std::size_t i) const { return faces_[i]; }

    // Face i is contained in face j.
    bool contains(std::size_t i, std::size_t j) const;
    std::size_t top() const noexcept { return top_; }
    std::optional<std::size_t> find(const std::vector<std::size_t> &active) const;
    // Faces immediately above i in the order.
    std::vector<std::size_t> covers(std::size_t i) const;

private:
    std::vector<Face> faces_;
    std::size_t top_ = 0;
};

FaceLattice face_lattice(const Polyhedron &p);

// Sum of the active facet normals: vanishes on the face and is nonnegative
// relative to the polyhedron after subtracting the summed offsets.
LatticePoint supporting_functional(const Polyhedron &p, const Face &f);

bool relint_contains(const Polyhedron &p, const Face &f, const RationalVector &x);

// The unique face whose relative interior holds x; x must lie in p.
std::optional<std::size_t> face_of_point(const Polyhedron &p, const FaceLattice &faces, const RationalVector &x);

// A rational point of relint(f): barycenter of the face's vertices plus the
// sum of its recession rays.
RationalVector relint_point(const Polyhedron &p, const Face &f);

std::vector<LatticePoint> hilbert_basis(const Cone &c);

} // namespace toric
