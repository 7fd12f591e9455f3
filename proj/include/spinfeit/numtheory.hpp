#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinfeit {

// Base exception for contract violations inside the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Nonnegative residue of a mod m (m > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

// Prime factorization as (p, e) pairs with p ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);

// Residues in [1, n) coprime to n; for n = 1 returns {0}.
std::vector<std::int64_t> units_mod(std::int64_t n);

// Inverse of a modulo m; throws if gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Legendre symbol (a|p) for an odd prime p.
int legendre(std::int64_t a, std::int64_t p);

// Smallest primitive root modulo the odd prime p.
std::int64_t primitive_root(std::int64_t p);

// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::int64_t mult_order(std::int64_t a, std::int64_t m);

std::int64_t factorial(int n);

// Lifts u (coprime to m) to a residue modulo big that is coprime to big and
// congruent to u mod m; requires m | big.
std::int64_t lift_unit(std::int64_t u, std::int64_t m, std::int64_t big);

}  // namespace spinfeit
