#pragma once

// Brute-force checks that do not go through the face lattice: direct
// fixedness verification of a given ideal and exhaustive enumeration of the
// fixed ideals generated inside a lattice box.

#include "toric/fixed_points.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

// A minimal generator v of a fixed ideal I lies in some relint(base + F) and
// I contains K_F, so v is minimal in K_F. Candidates therefore only need to
// come from the minimal-point boxes of the regions relint(base + F).
struct BoxSpec {
    std::vector<Box> parts; // one per face, widened by the margin
    Box box;                // hull of the parts

    static BoxSpec for_triple(const TripleData &tr, std::int64_t margin);
    bool contains(const LatticePoint &x) const;
};

enum class Verdict { Fixed, NotFixed, Inconclusive };

std::string_view to_string(Verdict v);

struct VerifyResult {
    Verdict verdict = Verdict::Fixed;
    std::optional<LatticePoint> witness;
    std::string reason;
    std::int64_t checked_up_to = 0;
};

// The step images phi^n(closure(a^{t(q^n-1)}) I) are compared with I for
// every admissible n <= max_n. Each minimal generator v is recovered from the
// monomial x^{(q^n-1)v + w_n} x^v, which lies in the step input exactly when
// v - base lies in P. With probe_n > max_n, a verdict that passes up to max_n
// but not at probe_n is reported as Inconclusive.
VerifyResult verify_fixed(const TripleData &tr, const MonomialIdeal &i, std::int64_t max_n,
                          std::optional<std::int64_t> probe_n = std::nullopt);

constexpr std::size_t kDefaultPoolCap = 20;

// Lattice points of the box parts inside S ∩ (base + P).
std::vector<LatticePoint> candidate_pool(const TripleData &tr, const BoxSpec &box);

// Every ideal generated by an antichain of the candidate pool that passes the
// fixedness check for all admissible n <= max_n; zero ideal included. Sorted.
std::vector<MonomialIdeal> brute_force_enumerate(const TripleData &tr, const BoxSpec &box, std::int64_t max_n,
                                                 std::size_t pool_cap = kDefaultPoolCap);
std::vector<MonomialIdeal> brute_force_enumerate_serial(const TripleData &tr, const BoxSpec &box, std::int64_t max_n,
                                                        std::size_t pool_cap = kDefaultPoolCap);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct CrossReport {
    std::vector<CheckResult> checks;

    bool ok() const;
};

CrossReport cross_validate(const TripleData &tr, std::int64_t max_n, std::int64_t margin,
                           std::size_t pool_cap = kDefaultPoolCap);

} // namespace toric
