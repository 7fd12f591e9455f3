#include "spinfeit/numtheory.hpp"

#include <numeric>

namespace spinfeit {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw Error("factorize: nonpositive argument");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

int mobius(std::int64_t n) {
    int s = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
    if (n == 1) return {0};
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    return out;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t r0 = m, r1 = mod_floor(a, m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw Error("inverse_mod: not invertible");
    return mod_floor(s0, m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    __int128 r = 1 % m, b = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1) r = r * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(r);
}

int legendre(std::int64_t a, std::int64_t p) {
    std::int64_t r = mod_floor(a, p);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t primitive_root(std::int64_t p) {
    auto primes = prime_divisors(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : primes)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return 1;  // p = 2
}

std::int64_t mult_order(std::int64_t a, std::int64_t m) {
    if (m == 1) return 1;
    std::int64_t x = mod_floor(a, m), k = 1;
    while (x != 1) {
        x = x * mod_floor(a, m) % m;
        ++k;
        if (k > m) throw Error("mult_order: not a unit");
    }
    return k;
}

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::int64_t lift_unit(std::int64_t u, std::int64_t m, std::int64_t big) {
    if (big % m != 0) throw Error("lift_unit: modulus does not divide target");
    std::int64_t k = mod_floor(u, m);
    for (std::int64_t t = 0; t < big / m; ++t) {
        std::int64_t c = k + t * m;
        if (std::gcd(c, big) == 1) return big == 1 ? 0 : c % big;
    }
    throw Error("lift_unit: no coprime lift");
}

}  // namespace spinfeit
