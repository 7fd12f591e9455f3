#include <doctest.h>

#include <algorithm>
#include <set>

#include "spinfeit/partition.hpp"

using namespace spinfeit;

TEST_CASE("enumerate families") {
    CHECK(enumerate(4, PartitionFamily::Strict) == std::vector<Partition>{{4}, {3, 1}});
    CHECK(enumerate(4, PartitionFamily::Odd) == std::vector<Partition>{{3, 1}, {1, 1, 1, 1}});
    CHECK(enumerate(4, PartitionFamily::StrictOdd) == std::vector<Partition>{{4}});
    CHECK(enumerate(4, PartitionFamily::StrictEven) == std::vector<Partition>{{3, 1}});
    CHECK(enumerate(0, PartitionFamily::All) == std::vector<Partition>{Partition{}});
    CHECK(enumerate(5, PartitionFamily::All).size() == 7);
    CHECK(enumerate(10, PartitionFamily::All).size() == 42);
}

TEST_CASE("enumeration is descending and duplicate free") {
    for (int n = 0; n <= 12; ++n) {
        auto all = enumerate(n, PartitionFamily::All);
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
    }
}

TEST_CASE("strict and odd partitions are equinumerous") {
    for (int n = 0; n <= 20; ++n)
        CHECK(enumerate(n, PartitionFamily::Strict).size() == enumerate(n, PartitionFamily::Odd).size());
}

TEST_CASE("stats") {
    auto s = stats({1, 1, 1});
    CHECK(s.z == 6);
    CHECK(s.ell == 3);
    CHECK(s.even);
    auto t = stats({3, 1});
    CHECK(t.z == 3);
    CHECK(t.even);
    auto u = stats({3, 2, 1});
    CHECK(u.conjugate == Partition{3, 2, 1});
    CHECK(u.is_symmetric);
    CHECK(z_value({2, 2, 1}) == 8);
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate(n, PartitionFamily::All)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("z sums to one over n!") {
    // sum 1/z_lambda over P(n) is 1; check via common denominator n!
    for (int n = 1; n <= 10; ++n) {
        std::int64_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        std::int64_t total = 0;
        for (const auto& p : enumerate(n, PartitionFamily::All)) total += fact / z_value(p);
        CHECK(total == fact);
    }
}

TEST_CASE("dominance") {
    CHECK(dominates({2, 2}, {2, 1, 1}));
    CHECK_FALSE(dominates({2, 1, 1}, {2, 2}));
    CHECK_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}));
    CHECK_FALSE(dominates({2, 2, 2}, {3, 1, 1, 1}));
    CHECK_THROWS(dominates({2}, {1}));
}

TEST_CASE("dominance is a partial order") {
    for (int n = 1; n <= 10; ++n) {
        auto all = enumerate(n, PartitionFamily::All);
        for (const auto& a : all) {
            CHECK(dominates(a, a));
            for (const auto& b : all) {
                if (a != b && dominates(a, b)) CHECK_FALSE(dominates(b, a));
                if (n <= 7 && dominates(a, b))
                    for (const auto& c : all)
                        if (dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("disjoint union") {
    CHECK(disjoint_union({3, 1}, {2}) == Partition{3, 2, 1});
    CHECK(disjoint_union({3}, {3}) == Partition{3, 3});
    CHECK_FALSE(disjoint_union({3}, {3}).is_strict());
    CHECK(disjoint_union({4}, {}) == Partition{4});
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= 5; ++k)
            for (const auto& a : enumerate(m, PartitionFamily::Strict))
                for (const auto& b : enumerate(k, PartitionFamily::Strict)) {
                    Partition u = disjoint_union(a, b);
                    CHECK(u.length() == a.length() + b.length());
                    CHECK(u.is_even() == (a.is_even() == b.is_even()));
                    if (u.is_strict()) CHECK(z_value(u) == z_value(a) * z_value(b));
                }
}

TEST_CASE("diagonal hooks") {
    CHECK(diagonal_hooks({3, 1, 1}) == std::vector<int>{5});
    CHECK(diagonal_hooks({3, 2, 1}) == std::vector<int>{5, 1});
    for (int m = 1; m <= 11; m += 2) {
        std::vector<int> parts{(m + 1) / 2};
        for (int i = 0; i < (m - 1) / 2; ++i) parts.push_back(1);
        CHECK(diagonal_hooks(Partition(parts)) == std::vector<int>{m});
    }
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : enumerate(n, PartitionFamily::All)) {
            auto h = diagonal_hooks(p);
            for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i - 1] > h[i]);
            if (stats(p).is_symmetric) {
                int s = 0;
                for (int x : h) s += x;
                CHECK(s == n);
            }
        }
}

TEST_CASE("removable cells") {
    using RC = std::vector<std::pair<int, Partition>>;
    CHECK(removable_cells({3, 1}) == RC{{1, {2, 1}}, {2, {3}}});
    CHECK(removable_cells({2, 2}) == RC{{2, {2, 1}}});
    CHECK(removable_cells({6}) == RC{{1, {5}}});
    CHECK_THROWS(removable_cells(Partition{}));
}

TEST_CASE("hook length dimension and parsing") {
    CHECK(hook_dimension({2, 1}) == 2);
    CHECK(hook_dimension({3, 2, 1}) == 16);
    CHECK(hook_dimension({4, 4}) == 14);
    CHECK(Partition::parse("(3,1,1)") == Partition{3, 1, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK_THROWS(Partition::parse("3,x"));
    CHECK_THROWS(Partition({1, 2}));
}
