#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinfeit/chartable.hpp"
#include "spinfeit/partition.hpp"
#include "spinfeit/permutation.hpp"

namespace spinfeit {

// chi^lambda on cycle type mu, by Murnaghan-Nakayama.
std::int64_t sn_char_value(const Partition& lam, const Partition& mu);

// Power-map image of a cycle type: each a-cycle becomes gcd(a,p) cycles of length a/gcd(a,p).
Partition power_cycle_type(const Partition& mu, std::int64_t p);

// Characters in enumeration order (trivial first); classes in reverse
// enumeration order so the identity is class 0.
CharacterTable sn_table(int n);

enum class SplitSign { None, Plus, Minus };

struct AnCharLabel {
    Partition lam;
    SplitSign sign = SplitSign::None;
    std::string to_string() const;
};

struct AnClass {
    Partition cycle_type;
    SplitSign sign = SplitSign::None;  // Plus: class of s^mu, Minus: of s_1 s^mu s_1
    Permutation rep;
    std::string to_string() const;
};

// Cycle types of A_n with all parts odd and distinct split.
bool an_class_splits(const Partition& mu);

// Class list of A_n: even cycle types in reverse enumeration order, split
// types contributing the Plus class then the Minus class.
std::vector<AnClass> an_classes(int n);
// Index of the A_n-class of an even permutation in an_classes(n).
int an_classify(const Permutation& g);

// Characters: one per pair {lambda, lambda'} with lambda >= lambda' (restriction),
// and theta^+ then theta^- for symmetric lambda. theta^+ takes the +sqrt value
// on the Plus class of cycle type h(lambda).
std::vector<AnCharLabel> an_char_labels(int n);
CycloNumber an_char_value(const AnCharLabel& chi, const AnClass& cls);
CharacterTable an_table(int n);

// [chi^lambda restricted to S_a x S_b, chi^alpha x chi^beta].
std::int64_t restrict_mult_young(const Partition& lam, int a, int b, const Partition& alpha, const Partition& beta);

// Partitions obtained by removing one removable cell, top to bottom.
std::vector<Partition> branch(const Partition& lam);

}  // namespace spinfeit
