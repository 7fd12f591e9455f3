#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinfeit/cyclo.hpp"
#include "spinfeit/partition.hpp"
#include "spinfeit/spinchar.hpp"

namespace spinfeit {

// The sufficient criterion a witness pair goes through.
// MultOne: [chi_U, mu] = 1 with equal stabilizers.
// InnerCentral: Aut(X)_chi = Inn(X), chi and mu over the same character of Z(X).
// OddIndexReal and PGroupCoprime are listed for completeness; no family here uses them.
enum class Sufficient { MultOne, InnerCentral, OddIndexReal, PGroupCoprime, None };
std::string to_string(Sufficient s);

struct PairReport {
    std::string group;
    std::string character;
    std::string subgroup;
    std::string partner;
    std::int64_t multiplicity = 0;
    bool field_equal = false;
    bool stabilizer_equal = false;
    Sufficient sufficient = Sufficient::None;
    FieldDescriptor chi_field;
    FieldDescriptor mu_field;
    // Route-specific checks, by name.
    std::vector<std::pair<std::string, bool>> checks;
    std::string note;

    bool ok() const;
    std::string to_string() const;
};

// Labels 0..n-1 of characters of X and U. The outer group acts through
// gamma_gens, the Galois group (Z/conductor)^x through galois[k].
struct StabilizerSetup {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> gamma_gens;
    std::int64_t conductor = 1;
    std::map<std::int64_t, std::vector<int>> galois;
};

struct StabilizerResult {
    bool equal = false;
    bool gamma_equal = false;  // Gamma_chi = Gamma_mu
    // First of the four criteria (1 = a label is rational, 2 = a label is
    // Gamma-stable, 3 = quadratic field with Galois orbit = Gamma orbit,
    // 4 = quadratic field and odd |Gamma|) whose hypotheses hold; 0 if none.
    int criterion = 0;
    std::size_t chi_stabilizer = 0;  // sizes inside Gamma x Galois
    std::size_t mu_stabilizer = 0;
};

// Throws if the two actions do not commute or are not permutations.
StabilizerResult stabilizer_pair_equal(const StabilizerSetup& s, int chi, int mu);

// Class function rows and the outer generators acting on classes of X and of U
// (each pair comes from the same automorphism). The label sets are the orbits
// of chi and mu under both actions; chi is label 0 and mu the first U label.
struct OrbitData {
    StabilizerSetup setup;
    int chi = 0;
    int mu = 0;
    std::vector<std::vector<CycloNumber>> rows;  // by label
};
OrbitData build_setup(const std::vector<CycloNumber>& chi_row, const std::vector<CycloNumber>& mu_row,
                      const std::vector<std::pair<std::vector<int>, std::vector<int>>>& gammas);

// Branching constituent of lambda (non-symmetric) not conjugate to any
// branching constituent, chosen by the case analysis for n >= 6 and by
// search below. When the recursion on the inner partition lands on a
// clashing constituent (it can, through an inner partition of size 2) the
// search is used instead.
Partition conjugate_free_constituent(const Partition& lam);

PairReport res_an_witness(const Partition& lam);

struct WreathResult {
    std::int64_t k = 0, l = 0;
    std::int64_t elements = 0;
    Rational multiplicity;  // [chi^{lambda_n} restricted to S_k wr S_l, phi]
    Rational phi_norm;      // [phi, phi]
    std::int64_t phi_degree = 0;
    bool phi_vanishes_off_support = false;
};
// The default bound admits kl <= 9 only ((3,3) has 1296 elements; (3,5) has
// 933120). Pass a larger limit to opt in.
WreathResult wreath_mult(int k, int l, std::int64_t limit = 100000);

// Symmetric hook (n+1)/2, 1^{(n-1)/2}.
Partition symmetric_hook(int n);
// wreath_limit bounds the element summation for composite symmetric hooks.
PairReport an_pair_check(const Partition& lam, std::int64_t wreath_limit = 100000);

PairReport spin_pair_witness(const Partition& lam, SplitSign sign);
PairReport basic_spin_prime_check(std::int64_t p, SplitSign sign = SplitSign::Plus);

struct Sl2Check {
    std::int64_t q = 0;
    bool decompositions = false;    // both displayed restriction identities, all indices
    bool divisibility_equiv = false; // the two divisibility conditions agree with the actual stabilizers
    std::vector<PairReport> pairs;
};
Sl2Check sl2_even_pair_check(std::int64_t q);

}  // namespace spinfeit
