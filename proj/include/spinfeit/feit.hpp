#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "spinfeit/chartable.hpp"

namespace spinfeit {

std::int64_t char_conductor(const CharacterTable& t, int chi);

struct FeitVerdict {
    int chi = 0;
    std::int64_t conductor = 1;
    std::optional<int> witness;  // a class whose elements have order c(chi)
};

// One verdict per character; the search over classes runs in parallel.
std::vector<FeitVerdict> feit_check(const CharacterTable& t);
bool feit_holds(const std::vector<FeitVerdict>& v);

// Multiplicity of lambda_a : g -> zeta_m^a in chi restricted to <g>, for
// a = 0..m-1, where m = o(g). Throws ValidationError if one is not a
// nonnegative integer.
std::vector<std::int64_t> cyclic_multiplicities(const CharacterTable& t, int chi, int cls);

struct CyclicWitness {
    int cls = 0;
    std::int64_t a = 0;  // lambda_a has order o(g)/gcd(a, o(g)) = c(chi)
    std::int64_t multiplicity = 0;
};

std::optional<CyclicWitness> conjecture_e_cyclic(const CharacterTable& t, int chi);

std::set<std::int64_t> value_conductors(const CharacterTable& t, int chi);

// Order of u in Z/m.
std::int64_t additive_order(std::int64_t u, std::int64_t m);

// k with gcd(k, o(v)) = 1 and o(u) | o(kv + u) in Z/m, m odd. Built prime by
// prime and glued with the CRT; a linear scan is kept as a fallback.
std::int64_t roots_witness(std::int64_t m, std::int64_t u, std::int64_t v);
bool roots_valid(std::int64_t m, std::int64_t u, std::int64_t v, std::int64_t k);

}  // namespace spinfeit
