#include "spinfeit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spinfeit/numtheory.hpp"

namespace spinfeit {

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) { std::iota(img_.begin(), img_.end(), 0); }

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) throw Error("Permutation: not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::adjacent(int n, int j) {
    if (j < 1 || j >= n) throw Error("Permutation::adjacent: index out of range");
    Permutation p(n);
    std::swap(p.img_[static_cast<std::size_t>(j - 1)], p.img_[static_cast<std::size_t>(j)]);
    return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
    Permutation p(n);
    for (int j : word) {
        if (j < 1 || j >= n) throw Error("Permutation::from_word: generator out of range");
        // p * s_j: swap the images of positions j-1 and j
        std::swap(p.img_[static_cast<std::size_t>(j - 1)], p.img_[static_cast<std::size_t>(j)]);
    }
    return p;
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
    Permutation p(n);
    for (std::size_t i = 0; i < points.size(); ++i)
        p.img_[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p(size());
    for (int i = 0; i < size(); ++i) p.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> c;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    return Partition::from_parts(std::move(lens));
}

bool Permutation::is_even() const {
    int s = 0;
    for (const auto& c : cycles()) s += static_cast<int>(c.size()) - 1;
    return s % 2 == 0;
}

std::int64_t Permutation::order() const { return lcm_of_parts(cycle_type()); }

Permutation Permutation::pow(std::int64_t k) const {
    Permutation p(size());
    for (const auto& c : cycles()) {
        const std::int64_t len = static_cast<std::int64_t>(c.size());
        for (std::int64_t i = 0; i < len; ++i)
            p.img_[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])] =
                c[static_cast<std::size_t>(mod_floor(i + k, len))];
    }
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Error("Permutation: size mismatch in product");
    Permutation p(a.size());
    for (int i = 0; i < a.size(); ++i) p.img_[static_cast<std::size_t>(i)] = a(b(i));
    return p;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
        os << ')';
    }
    if (!any) os << "()";
    return os.str();
}

std::vector<int> canonical_word(const Partition& lam) {
    std::vector<int> w;
    int base = 0;
    for (int a : lam.parts()) {
        for (int j = base + 1; j < base + a; ++j) w.push_back(j);
        base += a;
    }
    return w;
}

Permutation canonical_perm(const Partition& lam) { return Permutation::from_word(lam.n(), canonical_word(lam)); }

std::vector<int> reduced_word(const Permutation& p) {
    // Bubble p down to the identity by right multiplication with descents.
    std::vector<int> img = p.images();
    std::vector<int> w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < img.size(); ++i) {
            if (img[i] > img[i + 1]) {
                std::swap(img[i], img[i + 1]);
                w.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
        }
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Permutation conjugator(const Permutation& sigma, const Permutation& target) {
    if (sigma.size() != target.size()) throw Error("conjugator: size mismatch");
    auto by_length = [](std::vector<std::vector<int>> cs) {
        std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
        return cs;
    };
    auto cs = by_length(sigma.cycles());
    auto ct = by_length(target.cycles());
    if (cs.size() != ct.size()) throw Error("conjugator: cycle types differ");
    std::vector<int> img(static_cast<std::size_t>(sigma.size()));
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].size() != ct[k].size()) throw Error("conjugator: cycle types differ");
        for (std::size_t i = 0; i < cs[k].size(); ++i) img[static_cast<std::size_t>(cs[k][i])] = ct[k][i];
    }
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace spinfeit
