#pragma once

// Toric p^{-e}-linear maps phi(x^u) = x^{(u-w)/p^e}, their iterates, the
// Cartier-algebra operator attached to a^t, stable images, and the dictionary
// between w and the boundary divisor Delta.

#include "toric/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

class CartierData {
public:
    // p must be prime and e >= 1. When `strict` is set, a map that does not
    // send R into R (Delta not effective) is rejected; otherwise this is only
    // recorded in maps_into_ring() and images are truncated to S.
    static CartierData create(SemigroupPtr amb, std::int64_t p, std::int64_t e, LatticePoint w, bool strict = false);

    const SemigroupPtr &ambient() const noexcept { return amb_; }
    std::int64_t p() const noexcept { return p_; }
    std::int64_t e() const noexcept { return e_; }
    std::int64_t q() const noexcept { return q_; }
    const LatticePoint &w() const noexcept { return w_; }
    // w / (1 - p^e)
    const RationalVector &base() const noexcept { return base_; }
    bool maps_into_ring() const noexcept { return maps_into_ring_; }

    // phi^n, i.e. exponent e*n and twist w (p^{en} - 1) / (p^e - 1).
    CartierData iterate(std::int64_t n) const;
    // psi_n(-) = phi^n(x^d -).
    CartierData twisted(const LatticePoint &d, std::int64_t n) const;

private:
    CartierData() = default;

    SemigroupPtr amb_;
    std::int64_t p_ = 0, e_ = 0, q_ = 0;
    LatticePoint w_;
    RationalVector base_;
    bool maps_into_ring_ = true;
};

bool is_prime(std::int64_t p);

// Twist of phi^n: w (q^n - 1)/(q - 1).
LatticePoint iterated_twist(const LatticePoint &w, std::int64_t q, std::int64_t n);

std::optional<LatticePoint> phi_on_monomial(const CartierData &c, const LatticePoint &u);
MonomialIdeal phi_on_ideal(const CartierData &c, const MonomialIdeal &i);

class TripleData {
public:
    // Throws PDividesDenominator when p divides the denominator of t, and
    // ZeroIdeal for a = 0.
    static TripleData create(CartierData c, MonomialIdeal a, Rational t);

    const CartierData &cartier() const noexcept { return cartier_; }
    const MonomialIdeal &a_ideal() const noexcept { return a_; }
    const Rational &t() const noexcept { return t_; }
    std::int64_t period() const noexcept { return period_; }
    bool degenerate() const { return t_ == 0 || a_.is_unit(); }

    // P = t Newt(a), or sigma when degenerate.
    Polyhedron newton_region() const;
    // t (q^n - 1); n must be admissible.
    BigInt exponent(std::int64_t n) const;
    bool admissible(std::int64_t n) const { return n >= 1 && n % period_ == 0; }

private:
    TripleData(CartierData c, MonomialIdeal a, Rational t, std::int64_t period)
        : cartier_(std::move(c)), a_(std::move(a)), t_(std::move(t)), period_(period) {}

    CartierData cartier_;
    MonomialIdeal a_;
    Rational t_;
    std::int64_t period_;
};

// Least n >= 1 with t (p^{en} - 1) integral.
std::int64_t admissible_exponents(const Rational &t, std::int64_t p, std::int64_t e);
inline std::int64_t admissible_exponents(const TripleData &t) { return t.period(); }

// phi^n( closure(a^{t(q^n-1)}) * I ).
MonomialIdeal cartier_step(const TripleData &tr, const MonomialIdeal &i, std::int64_t n);
// Sum of cartier_step over admissible n <= max_n.
MonomialIdeal cartier_operator(const TripleData &tr, const MonomialIdeal &i, std::int64_t max_n);

struct StableImageResult {
    MonomialIdeal ideal;
    std::vector<MonomialIdeal> chain; // R, phi(R), phi^2(R), ... up to the fixed point
};

StableImageResult stable_image_chain(const CartierData &c, int max_iter = 64);
MonomialIdeal stable_image(const CartierData &c, int max_iter = 64);
MonomialIdeal twisted_stable_image(const CartierData &c, const LatticePoint &d, std::int64_t n, int max_iter = 64);

// Coefficients of Delta along the torus-invariant prime divisors, one per
// facet of sigma in the order of Cone::facet_normals().
struct DivisorData {
    std::vector<Rational> coefficients;

    bool effective() const;
};

// Solves <w, v_i> = (1 - p^e)(d_i - 1). With `strict`, Delta must be
// effective.
LatticePoint divisor_to_w(const Cone &sigma, const DivisorData &delta, std::int64_t p, std::int64_t e,
                          bool strict = false);
DivisorData w_to_divisor(const Cone &sigma, const LatticePoint &w, std::int64_t p, std::int64_t e);

} // namespace toric
