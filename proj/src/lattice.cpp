#include "toric/lattice.hpp"
#include "toric/error.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

namespace {

constexpr std::size_t kParallelThreshold = 4096;
constexpr std::size_t kMaxScan = std::size_t{1} << 31;

bool satisfies(const std::vector<IntegralConstraint> &cons, const LatticePoint &x) {
    for (const auto &c : cons) {
        std::int64_t s = dot(c.normal, x);
        if (c.equality ? s != c.bound : s < c.bound) return false;
    }
    return true;
}

} // namespace

bool Box::empty() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (lower[i] > upper[i]) return true;
    return false;
}

std::size_t Box::count() const {
    if (empty()) return 0;
    std::size_t n = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
        auto w = static_cast<std::size_t>(upper[i] - lower[i] + 1);
        if (n > std::numeric_limits<std::size_t>::max() / w) return std::numeric_limits<std::size_t>::max();
        n *= w;
    }
    return n;
}

bool Box::contains(const LatticePoint &x) const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (x[i] < lower[i] || x[i] > upper[i]) return false;
    return true;
}

Box Box::hull(const Box &o) const {
    if (empty()) return o;
    if (o.empty()) return *this;
    Box b{lower, upper};
    for (std::size_t i = 0; i < dim(); ++i) {
        b.lower[i] = std::min(lower[i], o.lower[i]);
        b.upper[i] = std::max(upper[i], o.upper[i]);
    }
    return b;
}

LatticeRegion LatticeRegion::closed(const Polyhedron &p) {
    LatticeRegion r(p.dim());
    for (const auto &h : p.hrep()) r.add({h.normal, h.offset, Relation::GreaterEqual});
    return r;
}

LatticeRegion LatticeRegion::relint(const Polyhedron &p, const Face &f, const RationalVector &shift) {
    LatticeRegion r(p.dim());
    const auto &h = p.hrep();
    for (std::size_t j = 0; j < h.size(); ++j) {
        bool active = std::binary_search(f.active_facets.begin(), f.active_facets.end(), j);
        r.add({h[j].normal, h[j].offset + dot(h[j].normal, shift), active ? Relation::Equal : Relation::Greater});
    }
    return r;
}

LatticeRegion &LatticeRegion::add(Constraint c) {
    if (c.normal.dim() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "constraint of dimension " + std::to_string(c.normal.dim()));
    cons_.push_back(std::move(c));
    return *this;
}

LatticeRegion &LatticeRegion::intersect(const Cone &c) {
    for (const auto &n : c.facet_normals()) add({n, Rational(0), Relation::GreaterEqual});
    return *this;
}

bool LatticeRegion::contains(const RationalVector &x) const {
    for (const auto &c : cons_) {
        Rational s = dot(c.normal, x) - c.offset;
        switch (c.rel) {
        case Relation::GreaterEqual:
            if (s < 0) return false;
            break;
        case Relation::Greater:
            if (s <= 0) return false;
            break;
        case Relation::Equal:
            if (s != 0) return false;
            break;
        }
    }
    return true;
}

bool LatticeRegion::contains(const LatticePoint &x) const { return contains(x.to_rational()); }

std::optional<std::vector<IntegralConstraint>> integral_form(const LatticeRegion &r) {
    std::vector<IntegralConstraint> out;
    for (const auto &c : r.constraints()) {
        switch (c.rel) {
        case Relation::GreaterEqual:
            out.push_back({c.normal, to_int64(ceil(c.offset)), false});
            break;
        case Relation::Greater:
            out.push_back({c.normal, to_int64(floor(c.offset) + 1), false});
            break;
        case Relation::Equal:
            if (!is_integer(c.offset)) return std::nullopt;
            out.push_back({c.normal, to_int64(c.offset.get_num()), true});
            break;
        }
    }
    return out;
}

std::optional<Box> LatticeRegion::minimal_point_box(const Cone &amb) const {
    LatticeRegion r(*this);
    r.intersect(amb);
    auto cons = integral_form(r);
    if (!cons) return std::nullopt;

    const std::size_t d = dim_;
    detail::Matrix rows;
    auto push = [&](const LatticePoint &n, std::int64_t b, int sign) {
        detail::Row row;
        for (auto x : n) row.emplace_back(static_cast<long>(sign * x));
        row.emplace_back(static_cast<long>(-sign * b));
        rows.push_back(std::move(row));
    };
    for (const auto &c : *cons) {
        push(c.normal, c.bound, 1);
        if (c.equality) push(c.normal, c.bound, -1);
    }
    detail::Row t(d + 1, Rational(0));
    t[d] = 1;
    rows.push_back(t);

    auto gens = detail::cone_generators(rows, d + 1);
    if (!gens.lineality.empty())
        throw Error(ErrorKind::UnboundedMinimalSet, "region contains a line; the ambient cone is not pointed");

    std::vector<RationalVector> vertices;
    std::vector<detail::Row> rays;
    for (const auto &g : gens.rays) {
        if (g[d] > 0) {
            RationalVector v(d);
            for (std::size_t i = 0; i < d; ++i) v[i] = g[i] / g[d];
            vertices.push_back(std::move(v));
        } else {
            rays.push_back(g);
        }
    }
    if (vertices.empty()) return std::nullopt;

    Box box{LatticePoint(d), LatticePoint(d)};
    for (std::size_t i = 0; i < d; ++i) {
        Rational lo = vertices.front()[i], hi = vertices.front()[i];
        for (const auto &v : vertices) {
            lo = std::min(lo, v[i]);
            hi = std::max(hi, v[i]);
        }
        // Minimal points are a vertex-hull point plus a combination of the
        // recession rays with coefficients in [0,1).
        for (const auto &ray : rays) {
            if (ray[i] < 0) lo += ray[i];
            else hi += ray[i];
        }
        box.lower[i] = to_int64(ceil(lo));
        box.upper[i] = to_int64(floor(hi));
    }
    if (box.empty()) return std::nullopt;
    return box;
}

std::vector<LatticePoint> scan_box_serial(const Box &box, const std::vector<IntegralConstraint> &cons) {
    std::vector<LatticePoint> out;
    if (box.empty()) return out;
    const std::size_t d = box.dim();
    LatticePoint x(box.lower);
    while (true) {
        if (satisfies(cons, x)) out.push_back(x);
        std::size_t k = d;
        while (k > 0 && x[k - 1] == box.upper[k - 1]) {
            x[k - 1] = box.lower[k - 1];
            --k;
        }
        if (k == 0) break;
        ++x[k - 1];
    }
    return out;
}

std::vector<LatticePoint> scan_box_parallel(const Box &box, const std::vector<IntegralConstraint> &cons) {
    std::vector<LatticePoint> out;
    if (box.empty()) return out;
    if (box.count() > kMaxScan) throw Error(ErrorKind::UnboundedMinimalSet, "lattice scan box too large");
    const std::size_t d = box.dim();

    // One slab per value of the first coordinate; slabs come back in order.
    const auto slabs = box.upper[0] - box.lower[0] + 1;
    std::vector<std::vector<LatticePoint>> parts(static_cast<std::size_t>(slabs));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < slabs; ++s) {
        auto &local = parts[static_cast<std::size_t>(s)];
        LatticePoint x(box.lower);
        x[0] = box.lower[0] + s;
        while (true) {
            if (satisfies(cons, x)) local.push_back(x);
            std::size_t k = d;
            while (k > 1 && x[k - 1] == box.upper[k - 1]) {
                x[k - 1] = box.lower[k - 1];
                --k;
            }
            if (k == 1) break;
            ++x[k - 1];
        }
    }
    std::size_t total = 0;
    for (const auto &p : parts) total += p.size();
    out.reserve(total);
    for (auto &p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    return out;
}

std::vector<LatticePoint> minimal_elements(std::vector<LatticePoint> points, const Cone &amb) {
    std::sort(points.begin(), points.end(), [&](const LatticePoint &a, const LatticePoint &b) {
        auto da = amb.degree(a), db = amb.degree(b);
        return da != db ? da < db : a < b;
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<LatticePoint> mins;
    for (const auto &x : points) {
        bool dominated = std::any_of(mins.begin(), mins.end(), [&](const LatticePoint &m) { return amb.contains(x - m); });
        if (!dominated) mins.push_back(x);
    }
    std::sort(mins.begin(), mins.end());
    return mins;
}

std::vector<LatticePoint> minimal_lattice_points(const LatticeRegion &region, const Cone &amb) {
    auto box = region.minimal_point_box(amb);
    if (!box) return {};
    LatticeRegion r(region);
    r.intersect(amb);
    auto cons = integral_form(r);
    if (!cons) return {};
    if (box->count() > kMaxScan) throw Error(ErrorKind::UnboundedMinimalSet, "lattice scan box too large");
    auto pts = box->count() >= kParallelThreshold ? scan_box_parallel(*box, *cons) : scan_box_serial(*box, *cons);
    return minimal_elements(std::move(pts), amb);
}

std::vector<LatticePoint> minimal_lattice_points(const Polyhedron &region, const Cone &amb) {
    return minimal_lattice_points(LatticeRegion::closed(region), amb);
}

std::vector<LatticePoint> minimal_lattice_points(const Polyhedron &region, const Cone &amb, const Face &face,
                                                 const RationalVector &shift) {
    return minimal_lattice_points(LatticeRegion::relint(region, face, shift), amb);
}

} // namespace toric
