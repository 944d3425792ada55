#include "toric/polyhedral.hpp"
#include "toric/error.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

namespace {

detail::Row to_row(const LatticePoint &p) {
    detail::Row r;
    r.reserve(p.dim());
    for (auto x : p) r.emplace_back(static_cast<long>(x));
    return r;
}

detail::Row to_row(const RationalVector &p) { return detail::Row(p.begin(), p.end()); }

LatticePoint row_to_lattice(const detail::Row &r) {
    LatticePoint p(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) p[i] = to_int64(r[i].get_num());
    return p;
}

std::string list_str(const detail::Matrix &m) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << row_to_lattice(detail::primitive_row(m[i]));
    os << '}';
    return os.str();
}

void require_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b)
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

Cone Cone::from_rays(std::span<const LatticePoint> rays) {
    if (rays.empty()) throw Error(ErrorKind::NotFullDimensional, "cone with no rays");
    const std::size_t d = rays.front().dim();
    detail::Matrix rows;
    for (const auto &r : rays) {
        require_dim(r.dim(), d, "cone ray");
        if (!r.is_zero()) rows.push_back(to_row(r));
    }
    auto dual = detail::cone_generators(rows, d);

    detail::Matrix dual_span(dual.rays);
    dual_span.insert(dual_span.end(), dual.lineality.begin(), dual.lineality.end());
    auto lines = detail::nullspace(dual_span, d);
    if (!lines.empty())
        throw Error(ErrorKind::NotPointed, "cone contains the linear subspace spanned by " + list_str(lines));
    if (!dual.lineality.empty())
        throw Error(ErrorKind::NotFullDimensional,
                    "rays lie in the hyperplanes orthogonal to " + list_str(dual.lineality));

    std::vector<LatticePoint> normals;
    for (const auto &n : dual.rays) normals.push_back(row_to_lattice(n));
    std::sort(normals.begin(), normals.end());

    auto primal = detail::cone_generators(dual.rays, d);
    std::vector<LatticePoint> extreme;
    for (const auto &r : primal.rays) extreme.push_back(row_to_lattice(r));
    std::sort(extreme.begin(), extreme.end());

    // Cross-validate the two descriptions.
    for (const auto &r : rays)
        for (const auto &n : normals)
            if (dot(n, r) < 0) throw Error(ErrorKind::NotPointed, "inconsistent double description at ray " + r.str());
    for (const auto &e : extreme) {
        bool found = std::any_of(rays.begin(), rays.end(), [&](const LatticePoint &r) {
            return !r.is_zero() && primitive(r) == e;
        });
        if (!found) throw Error(ErrorKind::NotPointed, "extreme ray " + e.str() + " not among the inputs");
    }
    return Cone(d, std::move(extreme), std::move(normals));
}

bool Cone::contains(const LatticePoint &x) const {
    return std::all_of(normals_.begin(), normals_.end(), [&](const LatticePoint &n) { return dot(n, x) >= 0; });
}

bool Cone::contains(const RationalVector &x) const {
    return std::all_of(normals_.begin(), normals_.end(), [&](const LatticePoint &n) { return dot(n, x) >= 0; });
}

std::int64_t Cone::degree(const LatticePoint &x) const {
    std::int64_t s = 0;
    for (const auto &n : normals_) s += dot(n, x);
    return s;
}

Cone cone_from_rays(std::span<const LatticePoint> rays) { return Cone::from_rays(rays); }

Cone cone_from_rays(std::initializer_list<LatticePoint> rays) {
    return Cone::from_rays(std::span<const LatticePoint>(rays.begin(), rays.size()));
}

Cone dual_cone(const Cone &c) { return c.dual(); }

Polyhedron Polyhedron::from_generators(std::span<const RationalVector> points, const Cone &recession) {
    if (points.empty()) throw Error(ErrorKind::EmptyGenerators, "polyhedron needs at least one point");
    const std::size_t d = recession.dim();
    detail::Matrix rows;
    for (const auto &p : points) {
        require_dim(p.dim(), d, "polyhedron point");
        auto r = to_row(p);
        r.emplace_back(1);
        rows.push_back(std::move(r));
    }
    for (const auto &ray : recession.rays()) {
        auto r = to_row(ray);
        r.emplace_back(0);
        rows.push_back(std::move(r));
    }
    auto dual = detail::cone_generators(rows, d + 1);
    if (!dual.lineality.empty())
        throw Error(ErrorKind::NotFullDimensional, "homogenized polyhedron is not full-dimensional");

    std::vector<Inequality> hrep;
    for (const auto &n : dual.rays) {
        LatticePoint a(d);
        bool zero = true;
        for (std::size_t i = 0; i < d; ++i) {
            a[i] = to_int64(n[i].get_num());
            zero = zero && a[i] == 0;
        }
        if (zero) continue; // the face at infinity
        std::int64_t g = 0;
        for (auto x : a) g = std::gcd(g, x);
        LatticePoint prim(d);
        for (std::size_t i = 0; i < d; ++i) prim[i] = a[i] / g;
        Rational offset = -n[d] / Rational(static_cast<long>(g));
        hrep.push_back({std::move(prim), offset});
    }
    std::sort(hrep.begin(), hrep.end(), [](const Inequality &x, const Inequality &y) {
        if (x.normal != y.normal) return x.normal < y.normal;
        return x.offset < y.offset;
    });

    std::vector<RationalVector> vertices;
    for (const auto &p : points) {
        detail::Matrix tight;
        for (const auto &h : hrep) {
            Rational s = h.slack(p);
            if (s < 0) throw Error(ErrorKind::NotFullDimensional, "generator " + p.str() + " violates its own hull");
            if (s == 0) tight.push_back(to_row(h.normal));
        }
        if (detail::rank(tight) == d) vertices.push_back(p);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (const auto &ray : recession.rays())
        for (const auto &h : hrep)
            if (dot(h.normal, ray) < 0) throw Error(ErrorKind::NotFullDimensional, "recession ray leaves the hull");
    return Polyhedron(std::move(vertices), recession, std::move(hrep));
}

Polyhedron Polyhedron::from_cone(const Cone &c) {
    RationalVector origin(c.dim());
    return from_generators(std::span<const RationalVector>(&origin, 1), c);
}

bool Polyhedron::contains(const RationalVector &x) const {
    return std::all_of(hrep_.begin(), hrep_.end(), [&](const Inequality &h) { return h.slack(x) >= 0; });
}

Polyhedron Polyhedron::translated(const RationalVector &shift) const {
    std::vector<RationalVector> v;
    v.reserve(vertices_.size());
    for (const auto &x : vertices_) v.push_back(x + shift);
    std::vector<Inequality> h(hrep_);
    for (auto &ineq : h) ineq.offset += dot(ineq.normal, shift);
    return Polyhedron(std::move(v), recession_, std::move(h));
}

Polyhedron newton_polyhedron(std::span<const LatticePoint> generators, const Cone &sigma) {
    if (generators.empty()) throw Error(ErrorKind::EmptyGenerators, "Newton polyhedron of no generators");
    std::vector<RationalVector> pts;
    for (const auto &g : generators) {
        if (!sigma.contains(g)) throw Error(ErrorKind::PointOutsideSemigroup, "generator " + g.str() + " outside the cone");
        pts.push_back(g.to_rational());
    }
    return Polyhedron::from_generators(pts, sigma);
}

Polyhedron scale_polyhedron(const Polyhedron &p, const Rational &c) {
    if (c < 0) throw Error(ErrorKind::NegativeScale, "scale factor " + to_string(c));
    if (c == 0) return Polyhedron::from_cone(p.recession());
    std::vector<RationalVector> v;
    for (const auto &x : p.vertices()) v.push_back(c * x);
    return Polyhedron::from_generators(v, p.recession());
}

Polyhedron minkowski_sum(const Polyhedron &p, const Polyhedron &q) {
    require_dim(p.dim(), q.dim(), "minkowski_sum");
    std::vector<RationalVector> sums;
    for (const auto &a : p.vertices())
        for (const auto &b : q.vertices()) sums.push_back(a + b);
    if (p.recession() == q.recession()) return Polyhedron::from_generators(sums, p.recession());
    std::vector<LatticePoint> rays(p.recession().rays());
    rays.insert(rays.end(), q.recession().rays().begin(), q.recession().rays().end());
    return Polyhedron::from_generators(sums, cone_from_rays(rays));
}

FaceLattice::FaceLattice(std::vector<Face> faces) : faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), [](const Face &a, const Face &b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.active_facets < b.active_facets;
    });
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].active_facets.empty()) top_ = i;
}

bool FaceLattice::contains(std::size_t i, std::size_t j) const {
    const auto &a = faces_[i].active_facets;
    const auto &b = faces_[j].active_facets;
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<std::size_t> FaceLattice::find(const std::vector<std::size_t> &active) const {
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].active_facets == active) return i;
    return std::nullopt;
}

std::vector<std::size_t> FaceLattice::covers(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < faces_.size(); ++j)
        if (faces_[j].dim == faces_[i].dim + 1 && contains(i, j)) out.push_back(j);
    return out;
}

FaceLattice face_lattice(const Polyhedron &p) {
    const auto &hrep = p.hrep();
    const auto &verts = p.vertices();
    const auto &rays = p.recession().rays();
    const std::size_t m = hrep.size();

    // Incidence of every generator with every facet.
    std::vector<std::vector<bool>> vtight(verts.size(), std::vector<bool>(m));
    std::vector<std::vector<bool>> rtight(rays.size(), std::vector<bool>(m));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) vtight[i][j] = hrep[j].slack(verts[i]) == 0;
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) rtight[i][j] = dot(hrep[j].normal, rays[i]) == 0;

    struct Gen {
        std::vector<std::size_t> v, r;
    };
    auto closure = [&](const Gen &g) {
        std::vector<std::size_t> act;
        for (std::size_t j = 0; j < m; ++j) {
            bool all = std::all_of(g.v.begin(), g.v.end(), [&](std::size_t i) { return vtight[i][j]; }) &&
                       std::all_of(g.r.begin(), g.r.end(), [&](std::size_t i) { return rtight[i][j]; });
            if (all) act.push_back(j);
        }
        return act;
    };
    auto make_face = [&](const Gen &g, std::vector<std::size_t> act) {
        Face f;
        f.active_facets = std::move(act);
        f.vertex_ids = g.v;
        f.ray_ids = g.r;
        f.hull_point = verts[g.v.front()];
        detail::Matrix dirs;
        for (std::size_t k = 1; k < g.v.size(); ++k) dirs.push_back(to_row(verts[g.v[k]] - verts[g.v.front()]));
        for (auto i : g.r) dirs.push_back(to_row(rays[i]));
        // Independent subset, greedily.
        detail::Matrix basis;
        for (auto &d : dirs) {
            basis.push_back(d);
            if (detail::rank(basis) < basis.size()) basis.pop_back();
        }
        f.dim = static_cast<int>(basis.size());
        for (auto &b : basis) f.hull_directions.push_back(RationalVector(std::vector<Rational>(b.begin(), b.end())));
        return f;
    };

    Gen all;
    all.v.resize(verts.size());
    std::iota(all.v.begin(), all.v.end(), 0);
    all.r.resize(rays.size());
    std::iota(all.r.begin(), all.r.end(), 0);

    std::map<std::vector<std::size_t>, Gen> seen;
    std::vector<std::vector<std::size_t>> queue;
    auto top_act = closure(all);
    seen.emplace(top_act, all);
    queue.push_back(top_act);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto act = queue[qi];
        Gen g = seen.at(act);
        for (std::size_t j = 0; j < m; ++j) {
            if (std::binary_search(act.begin(), act.end(), j)) continue;
            Gen h;
            for (auto i : g.v)
                if (vtight[i][j]) h.v.push_back(i);
            if (h.v.empty()) continue;
            for (auto i : g.r)
                if (rtight[i][j]) h.r.push_back(i);
            auto hact = closure(h);
            if (seen.emplace(hact, h).second) queue.push_back(hact);
        }
    }
    std::vector<Face> faces;
    for (auto &[act, g] : seen) faces.push_back(make_face(g, act));
    return FaceLattice(std::move(faces));
}

LatticePoint supporting_functional(const Polyhedron &p, const Face &f) {
    LatticePoint s(p.dim());
    for (auto j : f.active_facets) s += p.hrep()[j].normal;
    return s;
}

bool relint_contains(const Polyhedron &p, const Face &f, const RationalVector &x) {
    const auto &h = p.hrep();
    for (std::size_t j = 0; j < h.size(); ++j) {
        Rational s = h[j].slack(x);
        bool active = std::binary_search(f.active_facets.begin(), f.active_facets.end(), j);
        if (active ? s != 0 : s <= 0) return false;
    }
    return true;
}

std::optional<std::size_t> face_of_point(const Polyhedron &p, const FaceLattice &faces, const RationalVector &x) {
    std::vector<std::size_t> act;
    for (std::size_t j = 0; j < p.hrep().size(); ++j) {
        Rational s = p.hrep()[j].slack(x);
        if (s < 0) return std::nullopt;
        if (s == 0) act.push_back(j);
    }
    return faces.find(act);
}

RationalVector relint_point(const Polyhedron &p, const Face &f) {
    RationalVector c(p.dim());
    for (auto i : f.vertex_ids) c += p.vertices()[i];
    c *= Rational(1, static_cast<unsigned long>(f.vertex_ids.size()));
    for (auto i : f.ray_ids) c += p.recession().rays()[i].to_rational();
    return c;
}

std::vector<LatticePoint> hilbert_basis(const Cone &c) {
    const std::size_t d = c.dim();
    LatticePoint lo(d), hi(d);
    for (const auto &r : c.rays())
        for (std::size_t i = 0; i < d; ++i) {
            if (r[i] < 0) lo[i] += r[i];
            else hi[i] += r[i];
        }
    // Irreducible elements lie in the zonotope spanned by the rays, hence in
    // this box; anything outside is a ray plus a cone point.
    std::vector<LatticePoint> cand;
    LatticePoint x(lo);
    while (true) {
        if (!x.is_zero() && c.contains(x)) cand.push_back(x);
        std::size_t k = 0;
        while (k < d && x[k] == hi[k]) {
            x[k] = lo[k];
            ++k;
        }
        if (k == d) break;
        ++x[k];
    }
    std::sort(cand.begin(), cand.end(), [&](const LatticePoint &a, const LatticePoint &b) {
        auto da = c.degree(a), db = c.degree(b);
        return da != db ? da < db : a < b;
    });
    std::vector<LatticePoint> basis;
    for (const auto &v : cand) {
        bool reducible = std::any_of(basis.begin(), basis.end(), [&](const LatticePoint &h) {
            return c.contains(v - h);
        });
        if (!reducible) basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

} // namespace toric
