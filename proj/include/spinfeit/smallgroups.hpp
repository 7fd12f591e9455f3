#pragma once

#include <cstdint>
#include <vector>

#include "spinfeit/chartable.hpp"

namespace spinfeit {

CharacterTable cyclic_table(std::int64_t n);

// G = C_p x| K with K = Z/e1 x Z/e2 abelian, (k1, k2) acting on C_p as
// x -> x^(r1^k1 r2^k2). Z0 is the kernel of the action, H its image in (Z/p)^x.
struct Metacyclic {
    std::int64_t p = 3;
    std::int64_t e1 = 1, e2 = 1;
    std::int64_t r1 = 1, r2 = 1;

    std::int64_t order() const { return p * e1 * e2; }
    std::int64_t action(std::int64_t k1, std::int64_t k2) const;
    std::vector<std::int64_t> image() const;  // H, ascending
};

// Classes: x^v k with v = 0 or an H-orbit representative on the nonzero residues.
struct MetaClass {
    std::int64_t v = 0;
    std::int64_t k1 = 0, k2 = 0;
};

// Characters: the linear ones of K inflated (induced = false, (a1, a2)), then
// the induced ones from C_p x Z0: lambda_u tensored with the K-character
// (a1, a2) restricted to Z0, u an H-orbit representative.
struct MetaChar {
    bool induced = false;
    std::int64_t u = 0;
    std::int64_t a1 = 0, a2 = 0;
};

struct MetacyclicTable {
    Metacyclic group;
    std::vector<MetaClass> classes;
    std::vector<MetaChar> chars;
    CharacterTable table;
    std::vector<std::int64_t> orbit_rep;  // indexed by residue mod p; 0 maps to 0

    // Class of x^v (k1, k2).
    int class_of(std::int64_t v, std::int64_t k1, std::int64_t k2) const;
};

MetacyclicTable metacyclic_table(const Metacyclic& g);

// The Frobenius group C_p x| C_{(p-1)/2}, p an odd prime.
MetacyclicTable frobenius_half(std::int64_t p);

// Dihedral group C_N x| <c> of order 2N, N odd. Classes 1, a^l (1 <= l <= (N-1)/2), c;
// characters 1, sgn, lambda_t (1 <= t <= (N-1)/2) with lambda_t(a^l) = rho^{tl} + rho^{-tl}.
CharacterTable dihedral_table(std::int64_t n);
int dihedral_class_of_power(std::int64_t n, std::int64_t l);  // class of a^l

// SL_2(q), q = 2^f >= 4. Classes 1, c (unipotent), a^l (1 <= l <= q/2-1),
// b^m (1 <= m <= q/2); characters 1, St, chi_i (1 <= i <= q/2-1), theta_j (1 <= j <= q/2).
CharacterTable sl2_even_table(std::int64_t q);
int sl2_class_a(std::int64_t q, std::int64_t l);
int sl2_class_b(std::int64_t q, std::int64_t m);
int sl2_char_chi(std::int64_t q, std::int64_t i);
int sl2_char_theta(std::int64_t q, std::int64_t j);

}  // namespace spinfeit
