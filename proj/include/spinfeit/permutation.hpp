#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinfeit/partition.hpp"

namespace spinfeit {

// Permutation of {0, ..., n-1} stored as its image list.
// Products compose right to left: (a * b)(i) = a(b(i)).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(int n);  // identity
    explicit Permutation(std::vector<int> images);

    // s_j swaps the 1-based points j and j+1.
    static Permutation adjacent(int n, int j);
    // Product of adjacent transpositions s_{w_1} s_{w_2} ... in that order.
    static Permutation from_word(int n, const std::vector<int>& word);
    static Permutation cycle(int n, const std::vector<int>& points);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;
    std::vector<std::vector<int>> cycles() const;  // including fixed points
    Partition cycle_type() const;
    bool is_even() const;
    std::int64_t order() const;
    Permutation pow(std::int64_t k) const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    auto operator<=>(const Permutation& o) const = default;

    std::string to_string() const;  // cycle notation, 1-based

  private:
    std::vector<int> img_;
};

// Generator word of the canonical element s^lambda = (s_1 ... s_{l_1 - 1})(s_{l_1 + 1} ...)...
std::vector<int> canonical_word(const Partition& lam);
Permutation canonical_perm(const Partition& lam);

// Reduced word w with p = s_{w_1} ... s_{w_k}.
std::vector<int> reduced_word(const Permutation& p);

// pi with pi * sigma * pi^{-1} = target; both must share a cycle type.
Permutation conjugator(const Permutation& sigma, const Permutation& target);

// All permutations of {0..n-1} in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

}  // namespace spinfeit
