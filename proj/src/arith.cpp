#include "toric/arith.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace toric {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::NegativeScale: return "NegativeScale";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnboundedMinimalSet: return "UnboundedMinimalSet";
    case ErrorKind::PointOutsideSemigroup: return "PointOutsideSemigroup";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::InvalidCartierData: return "InvalidCartierData";
    case ErrorKind::PDividesDenominator: return "PDividesDenominator";
    case ErrorKind::InadmissibleExponent: return "InadmissibleExponent";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::IndexNotCoprime: return "IndexNotCoprime";
    case ErrorKind::AllFixedIdealsZero: return "AllFixedIdealsZero";
    case ErrorKind::TooManyFaces: return "TooManyFaces";
    case ErrorKind::PoolTooLarge: return "PoolTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

Rational parse_rational(const std::string &text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
    auto valid = [](const std::string &part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den))
        throw Error(ErrorKind::ParseError, "malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    BigInt n(num), d(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt floor(const Rational &q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt ceil(const Rational &q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integer(const Rational &q) { return q.get_den() == 1; }

std::int64_t to_int64(const BigInt &z) {
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

namespace {

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("lattice arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorKind::DimensionMismatch,
                    "vectors of dimension " + std::to_string(a) + " and " + std::to_string(b));
}

} // namespace

bool LatticePoint::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

RationalVector LatticePoint::to_rational() const {
    RationalVector r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = Rational(static_cast<long>(c_[i]));
    return r;
}

std::string LatticePoint::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

LatticePoint &LatticePoint::operator+=(const LatticePoint &o) {
    require_same_dim(dim(), o.dim());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = narrow(static_cast<__int128>(c_[i]) + o.c_[i]);
    return *this;
}

LatticePoint &LatticePoint::operator-=(const LatticePoint &o) {
    require_same_dim(dim(), o.dim());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = narrow(static_cast<__int128>(c_[i]) - o.c_[i]);
    return *this;
}

LatticePoint operator*(std::int64_t k, const LatticePoint &a) {
    LatticePoint r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = narrow(static_cast<__int128>(k) * a[i]);
    return r;
}

LatticePoint LatticePoint::operator-() const { return -1 * *this; }

std::ostream &operator<<(std::ostream &os, const LatticePoint &p) {
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
    return os << ')';
}

bool RationalVector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return x == 0; });
}

bool RationalVector::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return is_integer(x); });
}

LatticePoint RationalVector::to_lattice() const {
    LatticePoint p(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) p[i] = to_int64(c_[i].get_num());
    return p;
}

std::string RationalVector::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

RationalVector &RationalVector::operator+=(const RationalVector &o) {
    require_same_dim(dim(), o.dim());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RationalVector &RationalVector::operator-=(const RationalVector &o) {
    require_same_dim(dim(), o.dim());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RationalVector &RationalVector::operator*=(const Rational &k) {
    for (auto &x : c_) x *= k;
    return *this;
}

bool operator<(const RationalVector &a, const RationalVector &b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end(),
                                        [](const Rational &x, const Rational &y) { return x < y; });
}

std::ostream &operator<<(std::ostream &os, const RationalVector &p) {
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << to_string(p[i]);
    return os << ')';
}

Rational dot(const LatticePoint &n, const RationalVector &x) {
    require_same_dim(n.dim(), x.dim());
    Rational s(0);
    for (std::size_t i = 0; i < n.dim(); ++i) s += Rational(static_cast<long>(n[i])) * x[i];
    return s;
}

std::int64_t dot(const LatticePoint &n, const LatticePoint &x) {
    require_same_dim(n.dim(), x.dim());
    __int128 s = 0;
    for (std::size_t i = 0; i < n.dim(); ++i) s += static_cast<__int128>(n[i]) * x[i];
    return narrow(s);
}

LatticePoint primitive_direction(const RationalVector &v) {
    BigInt l = 1;
    for (const auto &x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> num;
    BigInt g = 0;
    for (const auto &x : v) {
        BigInt z = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        num.push_back(z);
    }
    if (g == 0) throw std::invalid_argument("primitive_direction of the zero vector");
    LatticePoint p(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) p[i] = to_int64(num[i] / g);
    return p;
}

LatticePoint primitive(const LatticePoint &v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 0) throw std::invalid_argument("primitive of the zero vector");
    LatticePoint p(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) p[i] = v[i] / g;
    return p;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    __int128 r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = static_cast<__int128>(narrow(r)) * base;
    return narrow(r);
}

} // namespace toric
