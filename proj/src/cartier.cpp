#include "toric/cartier.hpp"
#include "toric/error.hpp"

#include "linalg.hpp"

#include <sstream>

namespace toric {

namespace {

// Lattice points m of S with q m - shift in k Newt(a), where `scaled_newt`
// is k Newt(a) (sigma when k = 0).
std::vector<LatticePoint> preimage_points(const Polyhedron &scaled_newt, const LatticePoint &shift, std::int64_t q,
                                          const Cone &sigma) {
    LatticeRegion r(sigma.dim());
    const Rational qq(static_cast<long>(q));
    const RationalVector s = shift.to_rational();
    for (const auto &h : scaled_newt.hrep())
        r.add({h.normal, (h.offset + dot(h.normal, s)) / qq, Relation::GreaterEqual});
    return minimal_lattice_points(r, sigma);
}

} // namespace

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

LatticePoint iterated_twist(const LatticePoint &w, std::int64_t q, std::int64_t n) {
    // 1 + q + ... + q^{n-1}
    std::int64_t geometric = 0, power = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        geometric += power;
        if (i + 1 < n) power = checked_pow(q, i + 1);
    }
    return geometric * w;
}

CartierData CartierData::create(SemigroupPtr amb, std::int64_t p, std::int64_t e, LatticePoint w, bool strict) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidCartierData, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error(ErrorKind::InvalidCartierData, "e = " + std::to_string(e) + " must be positive");
    if (w.dim() != amb->dim()) throw Error(ErrorKind::DimensionMismatch, "w has the wrong dimension");
    CartierData c;
    c.amb_ = std::move(amb);
    c.p_ = p;
    c.e_ = e;
    c.q_ = checked_pow(p, e);
    c.w_ = std::move(w);
    c.base_ = Rational(1, 1) / Rational(1 - c.q_) * c.w_.to_rational();

    // The box [-qH, qH]^d covers a full residue system mod q.
    const std::size_t d = c.amb_->dim();
    const std::int64_t r = c.q_ * std::max<std::int64_t>(1, c.amb_->max_hilbert_coordinate());
    Box box{LatticePoint(d), LatticePoint(d)};
    for (std::size_t i = 0; i < d; ++i) {
        box.lower[i] = -r;
        box.upper[i] = r;
    }
    std::vector<IntegralConstraint> in_s;
    for (const auto &n : c.amb_->cone().facet_normals()) in_s.push_back({n, 0, false});
    for (const auto &u : scan_box_serial(box, in_s)) {
        LatticePoint diff = u - c.w_;
        bool integral = std::all_of(diff.begin(), diff.end(), [&](std::int64_t x) { return x % c.q_ == 0; });
        if (!integral) continue;
        LatticePoint img(d);
        for (std::size_t i = 0; i < d; ++i) img[i] = diff[i] / c.q_;
        if (!c.amb_->contains(img)) {
            c.maps_into_ring_ = false;
            if (strict)
                throw Error(ErrorKind::InvalidCartierData,
                            "phi sends x^" + u.str() + " to x^" + img.str() + " outside R (Delta not effective)");
            break;
        }
    }
    return c;
}

CartierData CartierData::iterate(std::int64_t n) const {
    if (n < 1) throw Error(ErrorKind::InadmissibleExponent, "iterate exponent must be positive");
    CartierData c(*this);
    c.e_ = e_ * n;
    c.q_ = checked_pow(q_, n);
    c.w_ = iterated_twist(w_, q_, n);
    c.base_ = base_; // unchanged by iteration
    return c;
}

CartierData CartierData::twisted(const LatticePoint &d, std::int64_t n) const {
    if (!amb_->contains(d)) throw Error(ErrorKind::PointOutsideSemigroup, "twist " + d.str() + " is not in S");
    CartierData c = iterate(n);
    c.w_ = c.w_ - d;
    c.base_ = Rational(1, 1) / Rational(1 - c.q_) * c.w_.to_rational();
    return c;
}

std::optional<LatticePoint> phi_on_monomial(const CartierData &c, const LatticePoint &u) {
    LatticePoint diff = u - c.w();
    LatticePoint img(diff.dim());
    for (std::size_t i = 0; i < diff.dim(); ++i) {
        if (diff[i] % c.q() != 0) return std::nullopt;
        img[i] = diff[i] / c.q();
    }
    if (!c.ambient()->contains(img)) return std::nullopt;
    return img;
}

MonomialIdeal phi_on_ideal(const CartierData &c, const MonomialIdeal &i) {
    const auto &sigma = c.ambient()->cone();
    const auto cone_region = Polyhedron::from_cone(sigma);
    std::vector<LatticePoint> gens;
    for (const auto &u : i.generators()) {
        auto pts = preimage_points(cone_region, u - c.w(), c.q(), sigma);
        gens.insert(gens.end(), pts.begin(), pts.end());
    }
    return MonomialIdeal::from_generators(c.ambient(), gens);
}

std::int64_t admissible_exponents(const Rational &t, std::int64_t p, std::int64_t e) {
    const BigInt &den = t.get_den();
    if (den % p == 0)
        throw Error(ErrorKind::PDividesDenominator,
                    "t = " + to_string(t) + " has p = " + std::to_string(p) + " in its denominator");
    if (den == 1) return 1;
    const BigInt q = [&] {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
        return r;
    }();
    BigInt x = q % den;
    std::int64_t n = 1;
    while (x != 1) {
        x = (x * q) % den;
        ++n;
    }
    return n;
}

TripleData TripleData::create(CartierData c, MonomialIdeal a, Rational t) {
    if (t < 0) throw Error(ErrorKind::NegativeScale, "t = " + to_string(t) + " must be nonnegative");
    if (a.is_zero()) throw Error(ErrorKind::ZeroIdeal, "the ideal a must be nonzero");
    if (!(a.ambient() == *c.ambient())) throw Error(ErrorKind::AmbientMismatch, "a lives in a different ring");
    std::int64_t period = admissible_exponents(t, c.p(), c.e());
    return TripleData(std::move(c), std::move(a), std::move(t), period);
}

Polyhedron TripleData::newton_region() const {
    if (degenerate()) return Polyhedron::from_cone(cartier_.ambient()->cone());
    return scale_polyhedron(newton_polyhedron(a_), t_);
}

BigInt TripleData::exponent(std::int64_t n) const {
    if (!admissible(n))
        throw Error(ErrorKind::InadmissibleExponent,
                    "n = " + std::to_string(n) + " is not a multiple of the period " + std::to_string(period_));
    BigInt qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(cartier_.q()), static_cast<unsigned long>(n));
    Rational k = t_ * Rational(qn - 1);
    return k.get_num();
}

MonomialIdeal cartier_step(const TripleData &tr, const MonomialIdeal &i, std::int64_t n) {
    const BigInt k = tr.exponent(n);
    const CartierData phin = tr.cartier().iterate(n);
    const auto &sigma = tr.cartier().ambient()->cone();
    const Polyhedron region = (k == 0 || tr.a_ideal().is_unit())
                                  ? Polyhedron::from_cone(sigma)
                                  : scale_polyhedron(newton_polyhedron(tr.a_ideal()), Rational(k));
    std::vector<LatticePoint> gens;
    for (const auto &u : i.generators()) {
        auto pts = preimage_points(region, u - phin.w(), phin.q(), sigma);
        gens.insert(gens.end(), pts.begin(), pts.end());
    }
    return MonomialIdeal::from_generators(tr.cartier().ambient(), gens);
}

MonomialIdeal cartier_operator(const TripleData &tr, const MonomialIdeal &i, std::int64_t max_n) {
    if (max_n < tr.period())
        throw Error(ErrorKind::InadmissibleExponent,
                    "N = " + std::to_string(max_n) + " is below the period " + std::to_string(tr.period()));
    MonomialIdeal acc = MonomialIdeal::zero(tr.cartier().ambient());
    for (std::int64_t n = tr.period(); n <= max_n; n += tr.period()) acc = acc + cartier_step(tr, i, n);
    return acc;
}

StableImageResult stable_image_chain(const CartierData &c, int max_iter) {
    std::vector<MonomialIdeal> chain{MonomialIdeal::unit(c.ambient())};
    for (int k = 0; k < max_iter; ++k) {
        MonomialIdeal next = phi_on_ideal(c, chain.back());
        if (next == chain.back()) return {next, std::move(chain)};
        chain.push_back(std::move(next));
    }
    std::ostringstream os;
    os << "no fixed point after " << max_iter << " iterations; chain:";
    for (const auto &i : chain) os << ' ' << i.str();
    throw Error(ErrorKind::NoStabilization, os.str());
}

MonomialIdeal stable_image(const CartierData &c, int max_iter) { return stable_image_chain(c, max_iter).ideal; }

MonomialIdeal twisted_stable_image(const CartierData &c, const LatticePoint &d, std::int64_t n, int max_iter) {
    return stable_image(c.twisted(d, n), max_iter);
}

bool DivisorData::effective() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational &x) { return x >= 0; });
}

LatticePoint divisor_to_w(const Cone &sigma, const DivisorData &delta, std::int64_t p, std::int64_t e, bool strict) {
    const auto &normals = sigma.facet_normals();
    if (delta.coefficients.size() != normals.size())
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(normals.size()) +
                                                      " divisor coefficients, got " +
                                                      std::to_string(delta.coefficients.size()));
    if (strict && !delta.effective()) throw Error(ErrorKind::InvalidCartierData, "Delta is not effective");
    if (!is_prime(p) || e < 1) throw Error(ErrorKind::InvalidCartierData, "invalid characteristic data");
    const Rational q(static_cast<long>(checked_pow(p, e)));
    detail::Matrix a;
    detail::Row b;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        detail::Row row;
        for (auto x : normals[i]) row.emplace_back(static_cast<long>(x));
        a.push_back(std::move(row));
        b.push_back((1 - q) * (delta.coefficients[i] - 1));
    }
    auto sol = detail::solve(a, b, sigma.dim());
    if (!sol) throw Error(ErrorKind::NotPrincipal, "K_X + Delta is not Q-Cartier on this cone");
    RationalVector w(std::vector<Rational>(sol->begin(), sol->end()));
    if (!w.is_integral())
        throw Error(ErrorKind::IndexNotCoprime,
                    "(1 - p^e)(K_X + Delta) is not principal for p^e = " + to_string(q) + ": solution w = " + w.str() +
                        " is not integral (the index of K_X + Delta must not be divisible by p)");
    return w.to_lattice();
}

DivisorData w_to_divisor(const Cone &sigma, const LatticePoint &w, std::int64_t p, std::int64_t e) {
    const Rational qm1(static_cast<long>(checked_pow(p, e) - 1));
    DivisorData d;
    for (const auto &n : sigma.facet_normals()) d.coefficients.push_back(1 - Rational(static_cast<long>(dot(n, w))) / qm1);
    return d;
}

} // namespace toric
