#include "support/common.hpp"
#include "support/properties.hpp"

#include <algorithm>

using namespace toric;

TEST_CASE("double description is consistent") {
    gen::Rng rng(41);
    for (int it = 0; it < 200; ++it) {
        auto s = props::random_semigroup(rng);
        auto p = props::random_polyhedron(rng, s);
        for (const auto &v : p.vertices())
            for (const auto &h : p.hrep()) CHECK(h.slack(v) >= 0);
        for (const auto &ray : p.recession().rays())
            for (const auto &h : p.hrep()) CHECK(dot(h.normal, ray) >= 0);
        // Every hrep facet is tight on some vertex.
        for (const auto &h : p.hrep())
            CHECK(std::any_of(p.vertices().begin(), p.vertices().end(), [&](const RationalVector &v) { return h.slack(v) == 0; }));
        CHECK(p.recession().facet_normals() == oracle::hull_normals(p.recession().rays()));
    }
}

TEST_CASE("minimal lattice points form an antichain that every region point dominates") {
    gen::Rng rng(43);
    for (int it = 0; it < 150; ++it) {
        auto s = props::random_semigroup(rng);
        auto p = props::random_polyhedron(rng, s);
        const Cone &c = s->cone();
        auto mins = minimal_lattice_points(p, c);
        for (const auto &a : mins)
            for (const auto &b : mins)
                if (!(a == b)) CHECK_FALSE(c.contains(a - b));
        for (int k = 0; k < 20; ++k) {
            auto x = props::near_point(rng, p);
            if (!p.contains(x) || !c.contains(x)) continue;
            CHECK(std::any_of(mins.begin(), mins.end(), [&](const LatticePoint &m) { return c.contains(x - m); }));
        }
    }
}

TEST_CASE("ideal algebra") {
    gen::Rng rng(47);
    for (int it = 0; it < 200; ++it) {
        auto s = props::random_semigroup(rng);
        auto i = gen::ideal(rng, s), j = gen::ideal(rng, s), k = gen::ideal(rng, s);
        CHECK(MonomialIdeal::from_generators(s, i.generators()) == i);
        CHECK(i * (j + k) == i * j + i * k);
        CHECK(i + j == j + i);
        CHECK(i * j == j * i);
        auto m = intersection(i, j);
        CHECK(i.contains(m));
        CHECK((i + j).contains(i));
        CHECK(j.contains(m));
        for (const auto &g : i.generators())
            for (const auto &h : s->hilbert()) CHECK(i.contains(g + h));
        for (int t = 0; t < 10; ++t) {
            auto x = gen::semigroup_point(rng, *s, 5);
            CHECK(m.contains(x) == (i.contains(x) && j.contains(x)));
            CHECK((i + j).contains(x) == (i.contains(x) || j.contains(x)));
            if (i.contains(x))
                for (const auto &h : s->hilbert()) CHECK(i.contains(x + h));
        }
    }
}
