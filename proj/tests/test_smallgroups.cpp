#include <doctest.h>

#include "spinfeit/numtheory.hpp"
#include "spinfeit/smallgroups.hpp"

using namespace spinfeit;

namespace {

Rational degree_square_sum(const CharacterTable& t) {
    Rational s = 0;
    for (int i = 0; i < t.num_chars(); ++i) s += t.degree(i) * t.degree(i);
    return s;
}

}  // namespace

TEST_CASE("cyclic tables") {
    for (std::int64_t n : {1, 2, 3, 8, 15}) {
        const auto t = cyclic_table(n);
        CHECK_NOTHROW(validate(t));
        CHECK(t.num_classes() == n);
    }
}

TEST_CASE("Frobenius groups C_p : C_(p-1)/2") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const auto m = frobenius_half(p);
        CHECK_NOTHROW(validate(m.table));
        CHECK(m.table.group_order == p * (p - 1) / 2);
        // (p-1)/2 linear characters and two of degree (p-1)/2.
        int induced = 0;
        for (int i = 0; i < m.table.num_chars(); ++i)
            if (m.chars[static_cast<std::size_t>(i)].induced) {
                ++induced;
                CHECK(m.table.degree(i) == (p - 1) / 2);
            }
        CHECK(induced == 2);
        CHECK(degree_square_sum(m.table) == m.table.group_order);
    }
}

TEST_CASE("metacyclic groups with a kernel") {
    // C7 : (C3 x C2) with C2 central, and C7 : C6 acting through C3.
    for (const Metacyclic g : {Metacyclic{7, 3, 2, 2, 1}, Metacyclic{7, 6, 1, 2, 1}, Metacyclic{5, 4, 1, 4, 1}}) {
        const auto m = metacyclic_table(g);
        CHECK_NOTHROW(validate(m.table));
        CHECK(m.table.group_order == g.order());
        CHECK(degree_square_sum(m.table) == g.order());
        CHECK(m.class_of(0, 0, 0) == 0);
    }
}

TEST_CASE("class_of is constant on conjugacy classes") {
    const Metacyclic g{7, 3, 2, 2, 1};
    const auto m = metacyclic_table(g);
    // x^v k with k acting nontrivially are all conjugate; x^v is conjugate to x^(v * action(k)).
    for (std::int64_t v = 0; v < 7; ++v) CHECK(m.class_of(v, 1, 0) == m.class_of(0, 1, 0));
    for (std::int64_t v = 1; v < 7; ++v)
        CHECK(m.class_of(v * g.action(1, 0) % 7, 0, 0) == m.class_of(v, 0, 0));
}

TEST_CASE("dihedral tables") {
    for (std::int64_t n : {3, 5, 7, 9, 15, 17, 33}) {
        const auto t = dihedral_table(n);
        CHECK_NOTHROW(validate(t));
        CHECK(t.group_order == 2 * n);
        CHECK(t.num_classes() == (n - 1) / 2 + 2);
        CHECK(dihedral_class_of_power(n, 1) == dihedral_class_of_power(n, n - 1));
        CHECK(dihedral_class_of_power(n, n) == 0);
    }
    CHECK_THROWS(dihedral_table(4));
}

TEST_CASE("SL2 over fields of characteristic 2") {
    for (std::int64_t q : {4, 8, 16, 32}) {
        const auto t = sl2_even_table(q);
        CHECK_NOTHROW(validate(t));
        CHECK(t.group_order == q * (q * q - 1));
        CHECK(t.num_classes() == q + 1);
        CHECK(degree_square_sum(t) == q * (q * q - 1));
        CHECK(t.degree(1) == q);
        CHECK(t.degree(sl2_char_chi(q, 1)) == q + 1);
        CHECK(t.degree(sl2_char_theta(q, 1)) == q - 1);
        CHECK(sl2_class_a(q, 1) == sl2_class_a(q, q - 2));
        CHECK(sl2_class_b(q, 1) == sl2_class_b(q, q));
    }
    CHECK_THROWS(sl2_even_table(6));
}

TEST_CASE("SL2(4) is A5") {
    const auto t = sl2_even_table(4);
    // Degrees 1, 4, 5, 3, 3.
    std::vector<Rational> d;
    for (int i = 0; i < t.num_chars(); ++i) d.push_back(t.degree(i));
    CHECK(d == std::vector<Rational>{1, 4, 5, 3, 3});
}
