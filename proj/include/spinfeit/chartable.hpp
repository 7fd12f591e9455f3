#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinfeit/cyclo.hpp"

namespace spinfeit {

struct ClassInfo {
    std::int64_t size = 1;
    std::int64_t order = 1;
    std::map<std::int64_t, int> power;  // prime p -> class of g^p
    std::string label;
};

// Thrown when a table breaks one of its invariants. where names the class or
// character involved (-1 when the failure is global).
class ValidationError : public Error {
  public:
    ValidationError(const std::string& msg, int where = -1) : Error(msg), where_(where) {}
    int where() const { return where_; }

  private:
    int where_;
};

struct CharacterTable {
    std::string name;
    std::int64_t group_order = 1;
    std::int64_t exponent = 1;
    std::vector<ClassInfo> classes;
    std::vector<std::string> char_labels;
    std::vector<std::vector<CycloNumber>> values;  // [character][class]

    int num_classes() const { return static_cast<int>(classes.size()); }
    int num_chars() const { return static_cast<int>(values.size()); }
    const CycloNumber& value(int chi, int cls) const {
        return values[static_cast<std::size_t>(chi)][static_cast<std::size_t>(cls)];
    }
    const std::vector<CycloNumber>& row(int chi) const { return values[static_cast<std::size_t>(chi)]; }
    std::vector<CycloNumber> column(int cls) const;
    Rational degree(int chi) const { return value(chi, 0).rational_value(); }

    // Class of g^k for g in class cls and any integer k. Primes dividing the
    // exponent go through the stored maps; the remaining factor is coprime to
    // o(g) and is resolved by matching Galois-conjugate columns.
    int power_class(int cls, std::int64_t k) const;

    // Distinct primes dividing the exponent.
    std::vector<std::int64_t> primes() const;

    bool operator==(const CharacterTable& o) const;

  private:
    mutable std::map<std::pair<int, std::int64_t>, int> galois_cache_;
};

struct ValidationOptions {
    bool orthogonality = true;
    bool galois = true;
};

// Checks sizes, orders, power maps, Galois consistency and (by default)
// both orthogonality relations, all exactly. Throws ValidationError.
void validate(const CharacterTable& t, const ValidationOptions& opt = {});

// (1/|G|) sum_C |C| a(C) conj(b(C)) for class functions a, b.
CycloNumber inner_product(const CharacterTable& t, const std::vector<CycloNumber>& a,
                          const std::vector<CycloNumber>& b);

// Sum of terms lifted lazily: terms are bucketed by ambient order so that
// most additions happen in small fields.
class BucketSum {
  public:
    void add(const CycloNumber& x);
    CycloNumber total() const;

  private:
    std::map<std::int64_t, CycloNumber> buckets_;
};

}  // namespace spinfeit
