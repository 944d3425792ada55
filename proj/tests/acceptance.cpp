// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "support/instances_lists.hpp"
#include "support/properties.hpp"

#include "toric/birational.hpp"
#include "toric/error.hpp"
#include "toric/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace toric;

namespace {

// Pinned limits. Generator sets are compared exactly; only time has slack.
constexpr double kEnumerateSeconds = 1.0;
constexpr double kBruteForceSeconds = 30.0;
constexpr double kPropertySeconds = 60.0;
constexpr std::size_t kPropertyCases = 1000;
constexpr std::int64_t kMargin = 1;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Named {
    std::string name;
    TripleData tr;
};

std::vector<Named> pair_instances() {
    std::vector<Named> out;
    for (const auto &p : testing::pair_instances()) out.push_back({p.name, testing::pair13(p.w, p.p, p.e)});
    return out;
}

std::vector<Named> all_instances() {
    auto out = pair_instances();
    out.push_back({"triple a=<(2,1),(1,3)> t=1/2 p=3", testing::triple13()});
    out.push_back({"orthant a=<(2,0),(0,2)> t=2/5 p=3", testing::triple_orthant()});
    return out;
}

std::vector<MonomialIdeal> listed(const TripleData &tr) {
    auto v = testing::ideals_of(enumerate_fixed(shifted_newton(tr)));
    std::sort(v.begin(), v.end());
    return v;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        if (pass) detail = why;
        pass = false;
    }
};

Outcome criterion1() {
    Outcome o;
    for (const auto &[name, tr] : pair_instances()) {
        auto t0 = Clock::now();
        auto got = testing::gen_lists(listed(tr));
        double s = seconds_since(t0);
        if (got != testing::expected_lists().at(name)) o.fail(name + ": list differs");
        if (s > kEnumerateSeconds) o.fail(name + ": took " + std::to_string(s) + " s");
    }
    if (o.pass) o.detail = "9 pair instances match the expected lists";
    return o;
}

Outcome criterion2() {
    Outcome o;
    double worst = 0;
    for (const auto &[name, tr] : all_instances()) {
        auto t0 = Clock::now();
        try {
            auto bf = brute_force_enumerate(tr, BoxSpec::for_triple(tr, kMargin), 3 * tr.period());
            if (bf != listed(tr)) o.fail(name + ": brute force differs");
        } catch (const Error &e) {
            o.fail(name + ": " + e.what());
        }
        double s = seconds_since(t0);
        worst = std::max(worst, s);
        if (s > kBruteForceSeconds) o.fail(name + ": took " + std::to_string(s) + " s");
    }
    if (o.pass) o.detail = "11 instances, slowest " + std::to_string(worst) + " s";
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t n = 0;
    for (const auto &[name, tr] : all_instances())
        for (const auto &i : listed(tr)) {
            ++n;
            auto v = verify_fixed(tr, i, 3 * tr.period());
            if (v.verdict != Verdict::Fixed) o.fail(name + ": " + i.str() + " " + v.reason);
        }
    auto tr3 = testing::pair13({-1, -2}, 3);
    auto bad = verify_fixed(tr3, MonomialIdeal::from_generators(tr3.cartier().ambient(), {{1, 1}}), 3);
    if (bad.verdict != Verdict::NotFixed || bad.witness != LatticePoint{1, 2})
        o.fail("<(1,1)> at q=3 was not rejected with witness (1,2)");
    if (o.pass) o.detail = std::to_string(n) + " ideals verified; <(1,1)> rejected with witness (1,2)";
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const auto &[name, tr] : all_instances()) {
        auto l = listed(tr);
        for (const auto &a : l)
            for (const auto &b : l) {
                if (!std::binary_search(l.begin(), l.end(), a + b)) o.fail(name + ": sum " + a.str() + " + " + b.str());
                if (!std::binary_search(l.begin(), l.end(), intersection(a, b)))
                    o.fail(name + ": intersection " + a.str() + " and " + b.str());
            }
    }
    if (o.pass) o.detail = "sums and intersections stay in every list";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::size_t faces = 0;
    for (const auto &[name, tr] : pair_instances()) {
        auto sn = shifted_newton(tr);
        auto adj = intermediate_adjoint_set(sn.ambient, BasePointData::from_cartier(tr.cartier()), tr.a_ideal(), tr.t());
        if (adj != listed(tr)) o.fail(name + ": adjoint set differs");
        for (std::size_t f = 0; f < sn.faces.size(); ++f, ++faces)
            if (!(face_ideal_via_perturbation(sn, f, tr.period()).ideal == face_ideal(sn, f)))
                o.fail(name + ": perturbation differs at face " + std::to_string(f));
    }
    if (o.pass) o.detail = "adjoint sets equal, " + std::to_string(faces) + " faces recovered by perturbation";
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const auto &[name, tr] : all_instances()) {
        auto sn = shifted_newton(tr);
        auto l = listed(tr);
        auto small = smallest_nonzero_fixed(sn);
        auto large = largest_fixed(sn);
        for (const auto &i : l) {
            if (!large.contains(i)) o.fail(name + ": largest does not contain " + i.str());
            if (!i.is_zero() && !i.contains(small)) o.fail(name + ": " + i.str() + " misses the smallest");
        }
        if (!std::binary_search(l.begin(), l.end(), small) || !std::binary_search(l.begin(), l.end(), large))
            o.fail(name + ": extremal ideal not listed");
        if (!(large == non_lc_ideal(sn.ambient, BasePointData::from_cartier(tr.cartier()), tr.a_ideal(), tr.t())))
            o.fail(name + ": largest differs from the non-LC ideal");
        if (tr.degenerate() && !(large == stable_image(tr.cartier()))) o.fail(name + ": largest differs from S(phi)");
    }
    if (o.pass) o.detail = "minimum, maximum, non-LC ideal and stable image agree";
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (const auto &[name, tr] : pair_instances()) {
        auto tr2 = TripleData::create(tr.cartier().iterate(2), tr.a_ideal(), tr.t());
        if (listed(tr) != listed(tr2)) o.fail(name + ": phi^2 enumeration differs");
        auto bf1 = brute_force_enumerate(tr, BoxSpec::for_triple(tr, kMargin), 3);
        auto bf2 = brute_force_enumerate(tr2, BoxSpec::for_triple(tr2, kMargin), 3);
        if (bf1 != bf2) o.fail(name + ": phi^2 brute force differs");
    }
    auto base = listed(testing::pair13({-1, -2}, 2));
    for (LatticePoint d : {LatticePoint{1, 0}, LatticePoint{1, 2}}) {
        // psi = phi(x^{(q-1)d} -) has twist w - (q-1)d.
        auto tw = listed(testing::pair13(LatticePoint{-1, -2} - d, 2));
        auto s = testing::cone13();
        auto dr = MonomialIdeal::from_generators(s, {d});
        for (const auto &j : base)
            if (!std::binary_search(tw.begin(), tw.end(), MonomialIdeal::from_generators(s, j.shifted(d).generators())))
                o.fail("d = " + d.str() + ": " + j.str() + " shifted is not fixed");
        for (const auto &k : tw) {
            if (!dr.contains(k)) continue;
            std::vector<LatticePoint> back;
            for (const auto &g : k.generators()) back.push_back(g - d);
            if (!std::binary_search(base.begin(), base.end(), MonomialIdeal::from_generators(s, back)))
                o.fail("d = " + d.str() + ": " + k.str() + " is not a shift of a fixed ideal");
        }
    }
    if (o.pass) o.detail = "phi and phi^2 lists agree on 9 pairs; twists by (1,0), (1,2) correspond";
    return o;
}

Outcome criterion8() {
    Outcome o;
    auto t0 = Clock::now();
    auto suites = props::all_suites(kPropertyCases);
    double s = seconds_since(t0);
    for (const auto &r : suites) {
        if (r.cases < kPropertyCases) o.fail(r.name + ": only " + std::to_string(r.cases) + " cases");
        if (!r.ok()) o.fail(r.name + ": " + r.failures.front());
    }
    if (s > kPropertySeconds) o.fail("took " + std::to_string(s) + " s");
    if (o.pass) o.detail = "5 suites x " + std::to_string(kPropertyCases) + " cases in " + std::to_string(s) + " s";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"final-example reproduction", criterion1}, {"oracle completeness", criterion2},
        {"fixedness verification", criterion3},    {"lattice closure", criterion4},
        {"theory equality", criterion5},           {"extremal consistency", criterion6},
        {"structural invariants", criterion7},     {"geometry substrate properties", criterion8}};
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
