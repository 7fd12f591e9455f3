#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinfeit/chartable.hpp"
#include "spinfeit/cover.hpp"
#include "spinfeit/cyclo.hpp"
#include "spinfeit/partition.hpp"

namespace spinfeit {

enum class SpinKind { CoverS, CoverA, CoverSYoung, CoverAYoung };

bool is_young(SpinKind k);
bool is_alternating(SpinKind k);

// Spin irreducible: phi (covers of S) or psi (covers of A) with shape mu, or
// (mu, nu) for Young subgroups, and an optional sign.
struct SpinLabel {
    SpinKind kind = SpinKind::CoverS;
    Partition mu;
    Partition nu;
    SplitSign sign = SplitSign::None;
    int n() const { return mu.n() + nu.n(); }
    // n - l(mu) - l(nu) even.
    bool even() const;
    std::string to_string() const;
    bool operator==(const SpinLabel& o) const = default;
};

// [Q_lambda, p_mu].
Rational q_inner(const Partition& lam, const Partition& mu);

// A cached cover group: the preimage of S_m x S_k (or its even part).
const CoverGroup& cover_group(int m, int k, bool alternating);

// Spin irreducibles of the group, in a fixed order: shapes in enumeration
// order, + before -. For Young kinds k >= 1; characters that vanish
// identically (only possible for a block of size 1) are dropped.
std::vector<SpinLabel> spin_labels(SpinKind kind, int m, int k = 0);

// Values of full-group spin characters on the class (mu, assoc, z) of s~^mu.
CycloNumber phi_value(const Partition& lam, SplitSign sign, const Partition& mu, bool z);
CycloNumber psi_value(const Partition& lam, SplitSign sign, const Partition& mu, SplitSign assoc, bool z);

// Value of a full-group label at an element of its cover group.
CycloNumber spin_value_at(const SpinLabel& label, const CoverElement& g);
// Value on class cls of the matching cover group.
CycloNumber spin_value(const SpinLabel& label, int cls);
// Young value at x*y, x in the cover of S_m and y in the cover of S_k.
CycloNumber young_cover_value(const SpinLabel& label, const CoverElement& x, const CoverElement& y);

// The group a label lives on.
const CoverGroup& label_group(const SpinLabel& label);
std::vector<CycloNumber> spin_row(const SpinLabel& label);

// Closed-form field of values.
FieldDescriptor spin_field(const SpinLabel& label);

// Sign relating s~^mu s~^nu (blocks side by side) to s~^(mu+nu) on the
// difference of a split pair: -1 to the number of pairs mu_i < nu_j of equal parity.
int union_sign(const Partition& mu, const Partition& nu);

// Closed-form restriction multiplicity [chi restricted to H : eta] where chi is a
// full label and eta a Young label of the same parity kind. Covers of S_n use the
// full branching theorem; covers of A_n only the case lambda = mu + nu. In the
// case lambda = mu + nu the sign pairing is twisted by union_sign(mu, nu).
std::int64_t spin_branch_mult(const SpinLabel& chi, const SpinLabel& eta);

// Class index in G of each class of H (H inside G, same n).
std::vector<int> fusion(const CoverGroup& h, const CoverGroup& g);
// [chi restricted to H, eta] from values, exact.
CycloNumber restriction_inner(const CoverGroup& h, const std::vector<int>& fus,
                              const std::vector<CycloNumber>& chi_on_g, const std::vector<CycloNumber>& eta_on_h);
// Same as spin_branch_mult but by summing restricted values over classes.
std::int64_t spin_branch_mult_brute(const SpinLabel& chi, const SpinLabel& eta);

// Character table of a full cover group (k = 0): ordinary characters
// inflated, then the spin characters.
CharacterTable cover_table(const CoverGroup& g);
// full_table(CoverS, n) / full_table(CoverA, n).
CharacterTable full_table(SpinKind kind, int n);

// Character labels of cover_table, in row order.
struct CoverCharLabel {
    bool spin = false;
    SpinLabel spin_label;             // when spin
    AnCharLabel ordinary;             // otherwise; sign None for covers of S_n
    std::string to_string() const;
};
std::vector<CoverCharLabel> cover_char_labels(const CoverGroup& g);

}  // namespace spinfeit
