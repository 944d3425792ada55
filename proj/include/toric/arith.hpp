#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Rational = mpq_class;
using BigInt = mpz_class;

Rational parse_rational(const std::string &text);
std::string to_string(const Rational &q);
BigInt floor(const Rational &q);
BigInt ceil(const Rational &q);
bool is_integer(const Rational &q);

// Throws std::overflow_error when the value leaves the 64-bit range.
std::int64_t to_int64(const BigInt &z);

class RationalVector;

// An exponent vector in the character lattice M.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::size_t dim) : c_(dim, 0) {}
    LatticePoint(std::initializer_list<std::int64_t> init) : c_(init) {}
    explicit LatticePoint(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}

    std::size_t dim() const noexcept { return c_.size(); }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }
    std::int64_t &operator[](std::size_t i) { return c_[i]; }
    auto begin() const noexcept { return c_.begin(); }
    auto end() const noexcept { return c_.end(); }
    const std::vector<std::int64_t> &coords() const noexcept { return c_; }

    bool is_zero() const noexcept;
    RationalVector to_rational() const;
    std::string str() const;

    LatticePoint &operator+=(const LatticePoint &o);
    LatticePoint &operator-=(const LatticePoint &o);
    friend LatticePoint operator+(LatticePoint a, const LatticePoint &b) { return a += b; }
    friend LatticePoint operator-(LatticePoint a, const LatticePoint &b) { return a -= b; }
    friend LatticePoint operator*(std::int64_t k, const LatticePoint &a);
    LatticePoint operator-() const;

    friend bool operator==(const LatticePoint &, const LatticePoint &) = default;
    friend auto operator<=>(const LatticePoint &a, const LatticePoint &b) { return a.c_ <=> b.c_; }

private:
    std::vector<std::int64_t> c_;
};

std::ostream &operator<<(std::ostream &os, const LatticePoint &p);

// A point of M_R with exact rational coordinates.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : c_(dim, Rational(0)) {}
    RationalVector(std::initializer_list<Rational> init) : c_(init) {}
    explicit RationalVector(std::vector<Rational> coords) : c_(std::move(coords)) {}

    std::size_t dim() const noexcept { return c_.size(); }
    const Rational &operator[](std::size_t i) const { return c_[i]; }
    Rational &operator[](std::size_t i) { return c_[i]; }
    auto begin() const noexcept { return c_.begin(); }
    auto end() const noexcept { return c_.end(); }

    bool is_zero() const;
    bool is_integral() const;
    // Only valid when is_integral().
    LatticePoint to_lattice() const;
    std::string str() const;

    RationalVector &operator+=(const RationalVector &o);
    RationalVector &operator-=(const RationalVector &o);
    RationalVector &operator*=(const Rational &k);
    friend RationalVector operator+(RationalVector a, const RationalVector &b) { return a += b; }
    friend RationalVector operator-(RationalVector a, const RationalVector &b) { return a -= b; }
    friend RationalVector operator*(const Rational &k, RationalVector a) { return a *= k; }

    friend bool operator==(const RationalVector &a, const RationalVector &b) { return a.c_ == b.c_; }
    friend bool operator<(const RationalVector &a, const RationalVector &b);

private:
    std::vector<Rational> c_;
};

std::ostream &operator<<(std::ostream &os, const RationalVector &p);

Rational dot(const LatticePoint &n, const RationalVector &x);
std::int64_t dot(const LatticePoint &n, const LatticePoint &x);

// Smallest positive integer multiple of v; v must be nonzero.
LatticePoint primitive_direction(const RationalVector &v);
LatticePoint primitive(const LatticePoint &v);

std::int64_t checked_pow(std::int64_t base, std::int64_t exp);

} // namespace toric
