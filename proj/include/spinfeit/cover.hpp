#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinfeit/ordchar.hpp"
#include "spinfeit/partition.hpp"
#include "spinfeit/permutation.hpp"

namespace spinfeit {

// Element z^zbit * L(perm) of the double cover of S_n, where L(perm) is the
// product of the generators along reduced_word(perm).
struct CoverElement {
    Permutation perm;
    bool z = false;
    bool operator==(const CoverElement& o) const = default;
};

// Arithmetic in the double cover of S_n with generators s~_j, s~_j^2 = z,
// (s~_j s~_{j+1})^3 = z and s~_k s~_l = z s~_l s~_k for |k-l| > 1. Products are
// decided in the Clifford realization s~_j -> i (g_j - g_{j+1}) / sqrt 2,
// which is faithful on the cover and only ever applied to a single vector.
class SpinCover {
  public:
    explicit SpinCover(int n);
    int n() const { return n_; }

    CoverElement identity() const { return {Permutation(n_), false}; }
    CoverElement central() const { return {Permutation(n_), true}; }
    // z^zcount * s~_{w_1} s~_{w_2} ...
    CoverElement from_word(const std::vector<int>& word, int zcount = 0) const;
    CoverElement generator(int j) const { return from_word({j}); }
    CoverElement mul(const CoverElement& a, const CoverElement& b) const;
    CoverElement inverse(const CoverElement& a) const;
    CoverElement pow(const CoverElement& a, std::int64_t k) const;
    CoverElement conj(const CoverElement& g, const CoverElement& x) const;  // g x g^{-1}
    std::int64_t order(const CoverElement& a) const;

  private:
    struct Vec;
    Vec apply_word(const std::vector<int>& word) const;
    bool same_sign(const Vec& a, const Vec& b) const;

    int n_;
    int dim_;
    // gamma_j e_r = phase * e_{target}; phase as a power of i.
    std::vector<std::vector<int>> gtarget_;
    std::vector<std::vector<int>> gphase_;
};

const SpinCover& spin_cover(int n);

// One conjugacy class of a cover group H, the preimage of S_m x S_k
// (intersected with A_{m+k} when alternating). k = 0 gives the full cover.
struct CoverClass {
    Partition alpha;  // cycle type on the first block
    Partition beta;   // cycle type on the second block (empty when k = 0)
    SplitSign assoc = SplitSign::None;  // Minus: conjugate by t of the Plus representative
    bool z = false;         // representative z * s~ rather than s~
    bool lift_split = true; // false: s~ and z s~ are conjugate, z is meaningless
    std::int64_t size = 1;
    std::int64_t order = 1;
    CoverElement rep;       // in the cover of S_{m+k}
    std::string label() const;
};

class CoverGroup {
  public:
    CoverGroup(int m, int k, bool alternating);
    int m() const { return m_; }
    int k() const { return k_; }
    int n() const { return m_ + k_; }
    bool alternating() const { return alt_; }
    std::int64_t order() const { return order_; }
    const SpinCover& cover() const { return spin_cover(n()); }
    std::string name() const;

    const std::vector<CoverClass>& classes() const { return classes_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    bool contains(const CoverElement& g) const;
    int classify(const CoverElement& g) const;
    // Class of x^p for each class.
    int power_class(int cls, std::int64_t p) const;
    // Class of t g t^{-1} for g in class cls; t must normalize H.
    int conjugate_class(const CoverElement& t, int cls) const;
    // An element of the cover of S_n outside this group that normalizes it:
    // s~_1, or s~_{m+1} when m <= 1. Only meaningful when such a swap is odd.
    CoverElement odd_normalizer() const;

    // g = x * y with x, y lifted from the two blocks; x in the cover of S_m,
    // y in the cover of S_k (trivial when k = 0).
    std::pair<CoverElement, CoverElement> decompose(const CoverElement& g) const;
    CoverElement embed_first(const CoverElement& x) const;
    CoverElement embed_second(const CoverElement& y) const;

  private:
    struct Base {
        Partition alpha, beta;
        SplitSign assoc;
        Permutation sigma;
        CoverElement rep;
        std::vector<Permutation> centralizer;  // generators in S_m x S_k
        bool lift_split;
        int first_class;
    };
    bool has_odd() const { return m_ >= 2 || k_ >= 2; }
    Permutation block_conjugator(const Permutation& from, const Permutation& to) const;
    std::pair<Partition, Partition> block_types(const Permutation& p) const;

    int m_, k_;
    bool alt_;
    std::int64_t order_;
    std::vector<Base> bases_;
    std::vector<CoverClass> classes_;
};

}  // namespace spinfeit
