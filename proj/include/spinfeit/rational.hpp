#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace spinfeit {

using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational r{mpz_class(std::to_string(num)), mpz_class(std::to_string(den))};
    r.canonicalize();
    return r;
}

// 2^e for any integer e.
inline Rational pow2(int e) {
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    Rational r(1, 1);
    r.get_den() = p;
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Converts an integral rational to int64; throws std::range_error otherwise.
std::int64_t to_int64(const Rational& r);

}  // namespace spinfeit
