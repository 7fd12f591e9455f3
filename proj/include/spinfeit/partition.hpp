#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace spinfeit {

// A partition of n: weakly decreasing positive parts, no trailing zeros.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Sorts arbitrary positive parts into a partition (zeros are dropped).
    static Partition from_parts(std::vector<int> parts);
    // Parses "3,1,1", "(3,1,1)", "3 1 1" or "" / "()" for the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    // Part i (0-based), or 0 past the end.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    bool is_strict() const;
    bool all_odd() const;
    // n - length even.
    bool is_even() const { return (n_ - length()) % 2 == 0; }

    std::string to_string() const;

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class PartitionFamily { All, Odd, Strict, StrictEven, StrictOdd, Even };

bool in_family(const Partition& p, PartitionFamily f);

// All members of the family, lexicographically descending.
std::vector<Partition> enumerate(int n, PartitionFamily family);

struct PartitionStats {
    int ell;
    std::int64_t z;
    bool even;
    Partition conjugate;
    bool is_symmetric;
};

PartitionStats stats(const Partition& p);

// z_lambda = prod m_i! i^{m_i}; requires n <= 20.
std::int64_t z_value(const Partition& p);
Partition conjugate(const Partition& p);
bool dominates(const Partition& lam, const Partition& mu);
Partition disjoint_union(const Partition& a, const Partition& b);
// Principal hook lengths, strictly decreasing.
std::vector<int> diagonal_hooks(const Partition& p);
// (1-based row, partition with that row's last cell removed), top to bottom.
std::vector<std::pair<int, Partition>> removable_cells(const Partition& p);
// lcm of the parts (1 for the empty partition).
std::int64_t lcm_of_parts(const Partition& p);
// Number of standard tableaux, by the hook length formula.
std::int64_t hook_dimension(const Partition& p);

}  // namespace spinfeit
