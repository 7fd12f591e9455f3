#include <doctest.h>

#include <map>
#include <random>

#include "spinfeit/cover.hpp"

using namespace spinfeit;

namespace {

bool lemma_split_s(const Partition& mu) {
    return mu.all_odd() || in_family(mu, PartitionFamily::StrictOdd);
}
bool lemma_split_a(const Partition& mu) {
    return mu.all_odd() || in_family(mu, PartitionFamily::StrictEven);
}

std::vector<CoverElement> all_elements(const CoverGroup& g) {
    std::vector<CoverElement> out;
    for (const auto& p : all_permutations(g.n()))
        for (bool z : {false, true}) {
            CoverElement e{p, z};
            if (g.contains(e)) out.push_back(e);
        }
    return out;
}

}  // namespace

TEST_CASE("defining relations hold") {
    for (int n = 2; n <= 9; ++n) {
        const SpinCover& c = spin_cover(n);
        for (int j = 1; j < n; ++j) {
            const auto s = c.generator(j);
            CHECK(c.mul(s, s) == c.central());
            if (j + 1 < n) {
                const auto st = c.mul(s, c.generator(j + 1));
                CHECK(c.pow(st, 3) == c.central());
            }
            for (int l = j + 2; l < n; ++l)
                CHECK(c.mul(s, c.generator(l)) == c.mul(c.central(), c.mul(c.generator(l), s)));
        }
    }
}

TEST_CASE("group axioms on random elements") {
    std::mt19937 rng(7);
    const SpinCover& c = spin_cover(7);
    auto rnd = [&] {
        std::vector<int> w;
        for (int i = 0; i < 12; ++i) w.push_back(1 + static_cast<int>(rng() % 6));
        return c.from_word(w, static_cast<int>(rng() % 2));
    };
    for (int t = 0; t < 50; ++t) {
        const auto a = rnd(), b = rnd(), d = rnd();
        CHECK(c.mul(c.mul(a, b), d) == c.mul(a, c.mul(b, d)));
        CHECK(c.mul(a, c.inverse(a)) == c.identity());
        CHECK(c.mul(c.central(), a) == c.mul(a, c.central()));
    }
}

TEST_CASE("class splitting matches the splitting lemmas") {
    for (int n = 1; n <= 9; ++n) {
        for (bool alt : {false, true}) {
            if (alt && n < 2) continue;
            const CoverGroup g(n, 0, alt);
            std::int64_t total = 0;
            for (const auto& cl : g.classes()) {
                total += cl.size;
                CHECK(cl.lift_split == (alt ? lemma_split_a(cl.alpha) : lemma_split_s(cl.alpha)));
                CHECK((cl.assoc != SplitSign::None) == (alt && an_class_splits(cl.alpha)));
            }
            CHECK(total == g.order());
        }
    }
}

TEST_CASE("examples for n = 4") {
    const CoverGroup g(4, 0, false);
    int found22 = 0, found4 = 0;
    for (const auto& cl : g.classes()) {
        if (cl.alpha == Partition{2, 2}) {
            ++found22;
            CHECK(cl.size == 6);
        }
        if (cl.alpha == Partition{4}) {
            ++found4;
            CHECK(cl.size == 6);
        }
    }
    CHECK(found22 == 1);
    CHECK(found4 == 2);
    CHECK(g.classes()[0].size == 1);
    CHECK(g.classes()[1].size == 1);
    CHECK(g.classes()[1].rep == spin_cover(4).central());
}

TEST_CASE("classification against brute force orbits") {
    const std::vector<std::tuple<int, int, bool>> groups = {
        {4, 0, false}, {4, 0, true}, {5, 0, true}, {5, 0, false}, {3, 2, false}, {3, 2, true},
        {2, 2, true},  {4, 1, true}, {1, 3, true}, {2, 3, false}, {1, 1, true}, {3, 3, true}};
    for (const auto& [m, k, alt] : groups) {
        const CoverGroup g(m, k, alt);
        const SpinCover& c = g.cover();
        const auto elems = all_elements(g);
        CHECK(static_cast<std::int64_t>(elems.size()) == g.order());
        std::map<int, std::int64_t> counts;
        std::vector<int> cls(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            cls[i] = g.classify(elems[i]);
            ++counts[cls[i]];
            CHECK(c.order(elems[i]) == g.classes()[static_cast<std::size_t>(cls[i])].order);
        }
        for (int i = 0; i < g.num_classes(); ++i) CHECK(counts[i] == g.classes()[static_cast<std::size_t>(i)].size);
        // classes are unions of orbits: conjugating by a few elements keeps the label
        for (std::size_t i = 0; i < elems.size(); i += 3)
            for (std::size_t h = 1; h < elems.size(); h += elems.size() / 5 + 1)
                CHECK(g.classify(c.conj(elems[h], elems[i])) == cls[i]);
        // distinct classes are not conjugate: the class of a representative is itself
        for (int i = 0; i < g.num_classes(); ++i) CHECK(g.classify(g.classes()[static_cast<std::size_t>(i)].rep) == i);
    }
}

TEST_CASE("decomposition into blocks") {
    const CoverGroup g(3, 3, false);
    const SpinCover& c = g.cover();
    for (const auto& cl : g.classes()) {
        const auto [x, y] = g.decompose(cl.rep);
        CHECK(c.mul(g.embed_first(x), g.embed_second(y)) == cl.rep);
        CHECK(x.perm.cycle_type() == cl.alpha);
        CHECK(y.perm.cycle_type() == cl.beta);
    }
}
