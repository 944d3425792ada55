#include "toric/oracle.hpp"
#include "toric/birational.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

namespace {

std::vector<std::int64_t> admissible_up_to(const TripleData &tr, std::int64_t max_n) {
    if (max_n < tr.period())
        throw Error(ErrorKind::InadmissibleExponent,
                    "N = " + std::to_string(max_n) + " is below the period " + std::to_string(tr.period()));
    std::vector<std::int64_t> ns;
    for (std::int64_t n = tr.period(); n <= max_n; n += tr.period()) ns.push_back(n);
    return ns;
}

std::optional<LatticePoint> first_outside(const MonomialIdeal &image, const MonomialIdeal &i) {
    for (const auto &g : image.generators())
        if (!i.contains(g)) return g;
    return std::nullopt;
}

// images[u][k]: generators of cartier_step(<pool[u]>, ns[k]).
using StepCache = std::vector<std::vector<std::vector<LatticePoint>>>;

StepCache principal_steps(const TripleData &tr, const std::vector<LatticePoint> &pool,
                          const std::vector<std::int64_t> &ns, bool parallel) {
    StepCache cache(pool.size(), std::vector<std::vector<LatticePoint>>(ns.size()));
    const auto &amb = tr.cartier().ambient();
    const auto total = static_cast<std::int64_t>(pool.size() * ns.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        auto u = static_cast<std::size_t>(idx) / ns.size();
        auto k = static_cast<std::size_t>(idx) % ns.size();
        cache[u][k] = cartier_step(tr, MonomialIdeal::from_generators(amb, {pool[u]}), ns[k]).generators();
    }
    return cache;
}

void antichains(const std::vector<LatticePoint> &pool, const Cone &sigma, std::vector<std::size_t> &cur,
                std::size_t from, std::vector<std::vector<std::size_t>> &out) {
    out.push_back(cur);
    for (std::size_t i = from; i < pool.size(); ++i) {
        bool comparable = std::any_of(cur.begin(), cur.end(), [&](std::size_t j) {
            return sigma.contains(pool[i] - pool[j]) || sigma.contains(pool[j] - pool[i]);
        });
        if (comparable) continue;
        cur.push_back(i);
        antichains(pool, sigma, cur, i + 1, out);
        cur.pop_back();
    }
}

std::vector<MonomialIdeal> brute_force(const TripleData &tr, const BoxSpec &box, std::int64_t max_n,
                                       std::size_t pool_cap, bool parallel) {
    const auto ns = admissible_up_to(tr, max_n);
    const auto pool = candidate_pool(tr, box);
    if (pool.size() > pool_cap)
        throw Error(ErrorKind::PoolTooLarge, "candidate pool has " + std::to_string(pool.size()) +
                                                 " points, cap is " + std::to_string(pool_cap));
    const auto &amb = tr.cartier().ambient();
    const Cone &sigma = amb->cone();
    const auto cache = principal_steps(tr, pool, ns, parallel);

    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> cur;
    antichains(pool, sigma, cur, 0, chains);

    const auto m = static_cast<std::int64_t>(chains.size());
    std::vector<char> fixed(chains.size(), 0);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::int64_t c = 0; c < m; ++c) {
        const auto &ch = chains[static_cast<std::size_t>(c)];
        auto in_ideal = [&](const LatticePoint &x) {
            return std::any_of(ch.begin(), ch.end(), [&](std::size_t j) { return sigma.contains(x - pool[j]); });
        };
        bool ok = true;
        for (std::size_t j : ch) {
            for (const auto &img : cache[j])
                if (!std::all_of(img.begin(), img.end(), in_ideal)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        fixed[static_cast<std::size_t>(c)] = ok;
    }

    std::vector<MonomialIdeal> out;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        if (!fixed[c]) continue;
        std::vector<LatticePoint> gens;
        for (auto j : chains[c]) gens.push_back(pool[j]);
        out.push_back(MonomialIdeal::from_generators(amb, gens));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string list_str(const std::vector<MonomialIdeal> &l) {
    std::string s = "{";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? ", " : "") + l[i].str();
    return s + "}";
}

} // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Fixed: return "fixed";
    case Verdict::NotFixed: return "not_fixed";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

BoxSpec BoxSpec::for_triple(const TripleData &tr, std::int64_t margin) {
    const auto sn = shifted_newton(tr);
    const Cone &sigma = sn.ambient->cone();
    const std::size_t d = sigma.dim();
    BoxSpec spec{{}, Box{LatticePoint(d), LatticePoint(d)}};
    for (std::size_t i = 0; i < d; ++i) spec.box.lower[i] = 1; // empty until a face contributes
    for (const auto &f : sn.faces.faces()) {
        auto b = LatticeRegion::relint(sn.polytope, f, sn.base).minimal_point_box(sigma);
        if (!b) continue;
        for (std::size_t i = 0; i < d; ++i) {
            b->lower[i] -= margin;
            b->upper[i] += margin;
        }
        spec.box = spec.box.hull(*b);
        spec.parts.push_back(std::move(*b));
    }
    return spec;
}

bool BoxSpec::contains(const LatticePoint &x) const {
    return std::any_of(parts.begin(), parts.end(), [&](const Box &b) { return b.contains(x); });
}

VerifyResult verify_fixed(const TripleData &tr, const MonomialIdeal &i, std::int64_t max_n,
                          std::optional<std::int64_t> probe_n) {
    const auto ns = admissible_up_to(tr, max_n);
    VerifyResult r;
    r.checked_up_to = ns.back();
    if (i.is_zero()) {
        r.reason = "zero ideal";
        return r;
    }

    for (auto n : ns) {
        if (auto g = first_outside(cartier_step(tr, i, n), i)) {
            r.verdict = Verdict::NotFixed;
            r.witness = *g;
            r.reason = "x^" + g->str() + " lies in the step image for n = " + std::to_string(n) + " but not in I";
            return r;
        }
    }

    const Polyhedron p = tr.newton_region();
    const auto &c = tr.cartier();
    const std::int64_t n = tr.period();
    const CartierData phin = c.iterate(n);
    for (const auto &v : i.generators()) {
        if (!p.contains(v.to_rational() - c.base())) {
            r.verdict = Verdict::NotFixed;
            r.witness = v;
            r.reason = "generator x^" + v.str() + " is not in the sum of step images: v - base lies outside P";
            return r;
        }
        // z = x^{(q^n-1)v + w_n} x^v maps to x^v.
        LatticePoint z = (phin.q() - 1) * v + phin.w() + v;
        auto img = phi_on_monomial(phin, z);
        if (!img || !(*img == v)) {
            r.verdict = Verdict::NotFixed;
            r.witness = v;
            r.reason = "witness monomial for x^" + v.str() + " does not map back";
            return r;
        }
    }

    if (probe_n && *probe_n > max_n) {
        std::int64_t pn = (*probe_n / tr.period()) * tr.period();
        if (pn > max_n) {
            if (auto g = first_outside(cartier_step(tr, i, pn), i)) {
                r.verdict = Verdict::Inconclusive;
                r.witness = *g;
                r.reason = "passes up to N but the probe at n = " + std::to_string(pn) + " escapes I";
                return r;
            }
        }
    }
    r.reason = "step images contained in I for all admissible n <= " + std::to_string(r.checked_up_to) +
               "; every generator recovered";
    return r;
}

std::vector<LatticePoint> candidate_pool(const TripleData &tr, const BoxSpec &box) {
    if (box.box.empty()) return {};
    const Polyhedron p = tr.newton_region();
    LatticeRegion r = LatticeRegion::closed(p.translated(tr.cartier().base()));
    r.intersect(tr.cartier().ambient()->cone());
    auto cons = integral_form(r);
    auto pts = scan_box_serial(box.box, *cons);
    std::erase_if(pts, [&](const LatticePoint &x) { return !box.contains(x); });
    return pts;
}

std::vector<MonomialIdeal> brute_force_enumerate(const TripleData &tr, const BoxSpec &box, std::int64_t max_n,
                                                 std::size_t pool_cap) {
    return brute_force(tr, box, max_n, pool_cap, true);
}

std::vector<MonomialIdeal> brute_force_enumerate_serial(const TripleData &tr, const BoxSpec &box, std::int64_t max_n,
                                                        std::size_t pool_cap) {
    return brute_force(tr, box, max_n, pool_cap, false);
}

bool CrossReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

CrossReport cross_validate(const TripleData &tr, std::int64_t max_n, std::int64_t margin, std::size_t pool_cap) {
    CrossReport rep;
    auto check = [&](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const auto &c = tr.cartier();
    const auto &amb = c.ambient();
    const auto sn = shifted_newton(tr);

    std::vector<MonomialIdeal> listed;
    for (const auto &rec : enumerate_fixed(sn)) listed.push_back(rec.ideal);
    std::sort(listed.begin(), listed.end());
    check("enumerate", true, std::to_string(listed.size()) + " fixed ideals " + list_str(listed));

    auto adj = intermediate_adjoint_set(amb, BasePointData::from_cartier(c), tr.a_ideal(), tr.t());
    check("adjoint_set_equals_enumeration", adj == listed, list_str(adj));

    try {
        auto bf = brute_force_enumerate(tr, BoxSpec::for_triple(tr, margin), max_n, pool_cap);
        check("brute_force_equals_enumeration", bf == listed, list_str(bf));
    } catch (const Error &e) {
        check("brute_force_equals_enumeration", false, std::string("oracle unavailable: ") + e.what());
    }

    std::string bad;
    for (const auto &i : listed) {
        auto v = verify_fixed(tr, i, max_n);
        if (v.verdict != Verdict::Fixed) bad += i.str() + ": " + v.reason + "; ";
    }
    check("every_listed_ideal_verifies", bad.empty(),
          bad.empty() ? "checked for admissible n <= " + std::to_string(max_n) : bad);

    bad.clear();
    for (const auto &i : listed)
        for (const auto &j : listed) {
            if (!std::binary_search(listed.begin(), listed.end(), i + j)) bad += "sum " + i.str() + " + " + j.str() + "; ";
            if (!std::binary_search(listed.begin(), listed.end(), intersection(i, j)))
                bad += "intersection " + i.str() + " ∩ " + j.str() + "; ";
        }
    check("closed_under_sum_and_intersection", bad.empty(), bad);

    MonomialIdeal largest = largest_fixed(sn);
    bool is_max = std::all_of(listed.begin(), listed.end(), [&](const MonomialIdeal &i) { return largest.contains(i); });
    check("largest_is_maximum", is_max && std::binary_search(listed.begin(), listed.end(), largest), largest.str());
    auto nlc = non_lc_ideal(amb, BasePointData::from_cartier(c), tr.a_ideal(), tr.t());
    check("largest_equals_non_lc", nlc == largest, nlc.str());

    if (largest.is_zero()) {
        check("smallest_is_minimum", listed.size() == 1, "all fixed ideals are zero");
    } else {
        MonomialIdeal smallest = smallest_nonzero_fixed(sn);
        bool is_min = std::all_of(listed.begin(), listed.end(),
                                  [&](const MonomialIdeal &i) { return i.is_zero() || i.contains(smallest); });
        check("smallest_is_minimum", is_min && std::binary_search(listed.begin(), listed.end(), smallest),
              smallest.str());
    }

    if (tr.a_ideal().is_unit() || tr.t() == 0) {
        auto s = stable_image(c);
        check("largest_equals_stable_image", s == largest, s.str());
    }

    bad.clear();
    for (std::size_t f = 0; f < sn.faces.size(); ++f) {
        auto pr = face_ideal_via_perturbation(sn, f, tr.period());
        if (!pr.agrees) bad += "face " + std::to_string(f) + ": " + pr.ideal.str() + "; ";
    }
    check("perturbation_matches_face_ideals", bad.empty(), bad);
    return rep;
}

} // namespace toric
