#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinfeit/numtheory.hpp"
#include "spinfeit/rational.hpp"

namespace spinfeit {

// Raised by CycloNumber::parse; offset is the 0-based character position.
class LiteralError : public Error {
  public:
    LiteralError(const std::string& msg, std::size_t offset) : Error(msg), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1} reduced mod Phi_N.
class CycloNumber {
  public:
    CycloNumber() = default;
    CycloNumber(const Rational& r);  // NOLINT: implicit on purpose, rationals embed
    CycloNumber(std::int64_t v) : CycloNumber(make_rational(v)) {}  // NOLINT
    CycloNumber(int v) : CycloNumber(make_rational(v)) {}  // NOLINT

    static CycloNumber root_of_unity(std::int64_t n, std::int64_t k);
    // Builds sum c_k z_N^k for arbitrary (unreduced) exponents.
    static CycloNumber from_terms(std::int64_t n, const std::vector<std::pair<std::int64_t, Rational>>& terms);
    static CycloNumber parse(const std::string& text);

    std::int64_t order() const { return order_; }
    // Nonzero coefficients in the reduced basis, exponents ascending.
    const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Throws unless rational.
    Rational rational_value() const;

    // Same number with ambient order m (a multiple of order()).
    CycloNumber lift(std::int64_t m) const;
    // Same number in the smallest cyclotomic field containing it.
    CycloNumber shrink() const;
    // Image under z_N -> z_N^k; requires gcd(k, N) = 1.
    CycloNumber galois(std::int64_t k) const;
    CycloNumber conj() const { return galois(-1); }

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    CycloNumber& operator*=(const Rational& r);
    CycloNumber& operator/=(const Rational& r);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator*(CycloNumber a, const Rational& r) { return a *= r; }
    friend CycloNumber operator/(CycloNumber a, const Rational& r) { return a /= r; }
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    // Canonical literal: shrunk to the conductor, terms by ascending exponent.
    std::string to_string() const;
    // Debug only; nothing in the library relies on it.
    std::complex<double> approx() const;

  private:
    CycloNumber(std::int64_t n, std::vector<std::pair<int, Rational>> terms) : order_(n), terms_(std::move(terms)) {}
    static CycloNumber reduce(std::int64_t n, const std::map<std::int64_t, Rational>& byexp);

    std::int64_t order_ = 1;
    std::vector<std::pair<int, Rational>> terms_;
};

CycloNumber root_of_unity(std::int64_t n, std::int64_t k);
// x with x*x = d, built from quadratic Gauss sums: positive real for d > 0, i*sqrt|d| for d < 0.
CycloNumber sqrt_int(std::int64_t d);
CycloNumber galois(const CycloNumber& x, std::int64_t k);

// Q(values) as conductor c plus the subgroup of (Z/c)^x fixing it.
struct FieldDescriptor {
    std::int64_t conductor = 1;
    std::vector<std::int64_t> stabilizer{0};  // all elements, ascending

    std::int64_t degree() const;
    std::vector<std::int64_t> generators() const;
    bool contains_unit(std::int64_t k) const;
    std::string to_string() const;
    bool operator==(const FieldDescriptor& o) const = default;
};

FieldDescriptor conductor_of_set(const std::vector<CycloNumber>& values);
std::int64_t conductor(const CycloNumber& x);
// The field Q(sqrt d), computed from sqrt_int(d).
FieldDescriptor quadratic_field(std::int64_t d);

// Phi_n coefficients, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

}  // namespace spinfeit
