#include <doctest.h>

#include <algorithm>

#include "spinfeit/inductive.hpp"
#include "spinfeit/ordchar.hpp"

using namespace spinfeit;

namespace {

std::vector<int> swap01(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::swap(p[0], p[1]);
    return p;
}

bool has_check(const PairReport& r, const std::string& name) {
    return std::any_of(r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.first == name && c.second; });
}

}  // namespace

TEST_CASE("stabilizers: rational labels with equal outer stabilizers") {
    // Labels chi0, chi1, mu0, mu1; Gamma swaps chi0/chi1 and mu0/mu1, Galois trivial.
    StabilizerSetup s;
    s.labels = {"chi0", "chi1", "mu0", "mu1"};
    s.gamma_gens = {{1, 0, 3, 2}};
    s.conductor = 1;
    s.galois[1] = {0, 1, 2, 3};
    const auto r = stabilizer_pair_equal(s, 0, 2);
    CHECK(r.equal);
    CHECK(r.gamma_equal);
    CHECK(r.criterion == 1);
}

TEST_CASE("stabilizers: split pair with Galois orbit equal to the Gamma orbit") {
    // theta+- of A5 against mu+- with Q(sqrt 5); Gamma and sigma_2 both swap.
    StabilizerSetup s;
    s.labels = {"t+", "t-", "m+", "m-"};
    s.gamma_gens = {{1, 0, 3, 2}};
    s.conductor = 5;
    for (std::int64_t k : {1, 4}) s.galois[k] = {0, 1, 2, 3};
    for (std::int64_t k : {2, 3}) s.galois[k] = {1, 0, 3, 2};
    const auto r = stabilizer_pair_equal(s, 0, 2);
    CHECK(r.equal);
    CHECK(r.criterion == 3);
    CHECK(r.chi_stabilizer == 4);
}

TEST_CASE("stabilizers: mismatched actions") {
    StabilizerSetup s;
    s.labels = {"c0", "c1", "m0"};
    s.gamma_gens = {{1, 0, 2}};
    s.galois[1] = {0, 1, 2};
    const auto r = stabilizer_pair_equal(s, 0, 2);
    CHECK_FALSE(r.equal);
    CHECK_FALSE(r.gamma_equal);
    CHECK(r.criterion == 0);
    StabilizerSetup bad = s;
    bad.gamma_gens = {{0, 0, 2}};
    CHECK_THROWS(stabilizer_pair_equal(bad, 0, 2));
}

TEST_CASE("stabilizers: noncommuting actions are rejected") {
    StabilizerSetup s;
    s.labels = {"a", "b", "c"};
    s.gamma_gens = {{1, 0, 2}};
    s.galois[1] = {0, 1, 2};
    s.galois[2] = {0, 2, 1};
    CHECK_THROWS(stabilizer_pair_equal(s, 0, 1));
}

TEST_CASE("build_setup on the A5 split pair restricted to A4") {
    const auto x = an_classes(5), u = an_classes(4);
    const AnCharLabel th{Partition{3, 1, 1}, SplitSign::Plus};
    std::vector<CycloNumber> chi, mu;
    for (const auto& c : x) chi.push_back(an_char_value(th, c));
    for (const auto& c : u) mu.push_back(an_char_value({Partition{3, 1}, SplitSign::None}, c));
    std::vector<int> px, pu;
    const Permutation t(swap01(5)), t4(swap01(4));
    for (const auto& c : x) px.push_back(an_classify(t * c.rep * t));
    for (const auto& c : u) pu.push_back(an_classify(t4 * c.rep * t4));
    const auto od = build_setup(chi, mu, {{px, pu}});
    CHECK(od.setup.labels.size() == 3);  // theta+, theta-, chi^(3,1)
    CHECK(od.setup.conductor == 5);
    const auto r = stabilizer_pair_equal(od.setup, od.chi, od.mu);
    // mu is fixed by everything, theta+ is not: the stabilizers differ.
    CHECK_FALSE(r.equal);
}

TEST_CASE("conjugate-free constituents") {
    // A (5,1)-type row longer than the column: the bottom box.
    CHECK(conjugate_free_constituent(Partition{5, 1}) == Partition{5});
    CHECK(conjugate_free_constituent(Partition{2}) == Partition{1});
    CHECK_THROWS(conjugate_free_constituent(Partition{2, 1}));
    // The inner recursion passes through (2) here and would give the symmetric (4,2,1,1).
    const Partition d = conjugate_free_constituent(Partition{4, 3, 1, 1});
    CHECK(d != conjugate(d));
    for (int n = 2; n <= 10; ++n)
        for (const auto& lam : enumerate(n, PartitionFamily::All)) {
            if (conjugate(lam) == lam) continue;
            const Partition dl = conjugate_free_constituent(lam);
            const auto ds = branch(lam);
            CHECK(std::find(ds.begin(), ds.end(), dl) != ds.end());
            if (n > 2) {
                CHECK(conjugate(dl) != dl);
                for (const auto& e : ds) CHECK(conjugate(e) != dl);
            }
        }
}

TEST_CASE("res-an reports") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& lam : enumerate(n, PartitionFamily::All)) {
            if (conjugate(lam) == lam) continue;
            const auto r = res_an_witness(lam);
            CHECK_MESSAGE(r.ok(), r.to_string());
            CHECK(r.multiplicity == 1);
            CHECK(r.chi_field.conductor == 1);
            CHECK(r.sufficient == Sufficient::MultOne);
        }
    CHECK_THROWS(res_an_witness(Partition{2, 1}));
}

TEST_CASE("an-ord: symmetric hooks of prime size") {
    for (int p : {3, 5, 7, 11}) {
        const auto r = an_pair_check(symmetric_hook(p));
        CHECK_MESSAGE(r.ok(), r.to_string());
        CHECK(r.sufficient == Sufficient::InnerCentral);
        CHECK(r.field_equal);
        CHECK(has_check(r, "mu_degree"));
        CHECK(r.multiplicity > 0);
    }
    CHECK(an_pair_check(symmetric_hook(5)).chi_field == quadratic_field(5));
    CHECK(an_pair_check(symmetric_hook(7)).chi_field == quadratic_field(-7));
}

TEST_CASE("an-ord: the remaining symmetric partitions") {
    // (3,2,1): last diagonal hook 1, restriction to A5.
    const auto r6 = an_pair_check(Partition{3, 2, 1});
    CHECK(r6.ok());
    CHECK(r6.subgroup == "A5");
    CHECK(r6.multiplicity == 1);
    CHECK(r6.chi_field == quadratic_field(5));
    // (3,3,2): hooks 5 and 3, the Young-subgroup route.
    const auto r8 = an_pair_check(Partition{3, 3, 2});
    CHECK(r8.ok());
    CHECK(r8.multiplicity == 1);
    CHECK(r8.chi_field == quadratic_field(-15));
    CHECK(has_check(r8, "lr_multiplicity"));
    for (int n = 3; n <= 9; ++n)
        for (const auto& lam : enumerate(n, PartitionFamily::All)) {
            if (conjugate(lam) != lam) continue;
            const auto r = an_pair_check(lam);
            CHECK_MESSAGE(r.ok(), r.to_string());
        }
    CHECK_THROWS(an_pair_check(Partition{3, 1}));
}

TEST_CASE("wreath: S_3 wr S_3 inside S_9") {
    const auto w = wreath_mult(3, 3);
    CHECK(w.elements == 1296);
    CHECK(w.multiplicity == 1);
    CHECK(w.phi_norm == 1);
    CHECK(w.phi_degree == 16);
    CHECK(w.phi_vanishes_off_support);
    CHECK_THROWS(wreath_mult(5, 3));
    CHECK_THROWS(wreath_mult(3, 4));
}

TEST_CASE("spin witnesses from the spec") {
    const auto a = spin_pair_witness(Partition{4, 1}, SplitSign::None);
    CHECK(a.ok());
    CHECK(a.partner == SpinLabel{SpinKind::CoverAYoung, Partition{4}, Partition{1}, SplitSign::None}.to_string());
    CHECK(a.multiplicity == 1);
    CHECK(a.chi_field.conductor == 1);
    CHECK(a.mu_field.conductor == 1);
    const auto b = spin_pair_witness(Partition{3, 2}, SplitSign::None);
    CHECK(b.ok());
    CHECK(b.subgroup.find("2.A3,2") != std::string::npos);
    const auto c = spin_pair_witness(Partition{4, 2, 1}, SplitSign::Plus);
    CHECK(c.ok());
    CHECK(c.chi_field.degree() == 2);
    CHECK(c.note.find("(b)") != std::string::npos);
    CHECK_THROWS(spin_pair_witness(Partition{5}, SplitSign::Plus));
    CHECK_THROWS(spin_pair_witness(Partition{3, 1, 1}, SplitSign::None));
}

TEST_CASE("spin witnesses, n <= 8") {
    for (int n = 5; n <= 8; ++n)
        for (const auto& lam : enumerate(n, PartitionFamily::Strict)) {
            if (lam.length() < 2) continue;
            for (SplitSign s : {SplitSign::Plus, SplitSign::Minus}) {
                const auto r = spin_pair_witness(lam, s);
                CHECK_MESSAGE(r.ok(), r.to_string());
                CHECK(has_check(r, "mult_closed_form"));
                CHECK(has_check(r, "dichotomy"));
            }
        }
}

TEST_CASE("basic spin at primes") {
    const auto r5 = basic_spin_prime_check(5);
    CHECK(r5.ok());
    CHECK(r5.chi_field == quadratic_field(5));
    CHECK(r5.mu_field == quadratic_field(5));
    const auto r7 = basic_spin_prime_check(7, SplitSign::Minus);
    CHECK(r7.ok());
    CHECK(r7.chi_field == quadratic_field(-7));
    CHECK(has_check(r7, "torus_relation"));
    CHECK(has_check(r7, "central_match"));
    CHECK_THROWS(basic_spin_prime_check(9));
}

TEST_CASE("SL2(2^f) pairs") {
    for (std::int64_t q : {4, 8, 16}) {
        const auto c = sl2_even_pair_check(q);
        CHECK(c.decompositions);
        CHECK(c.divisibility_equiv);
        for (const auto& r : c.pairs) CHECK_MESSAGE(r.ok(), r.to_string());
    }
    const auto c8 = sl2_even_pair_check(8);
    // chi_1 pairs with lambda_2 of D14, theta_1 with lambda_2 of D18.
    CHECK(c8.pairs.front().character == "chi_1");
    CHECK(c8.pairs.front().partner.rfind("lambda_2", 0) == 0);
    const auto th = std::find_if(c8.pairs.begin(), c8.pairs.end(), [](const PairReport& r) { return r.character == "theta_1"; });
    REQUIRE(th != c8.pairs.end());
    CHECK(th->partner.rfind("lambda_2", 0) == 0);
    CHECK(th->multiplicity == 1);
    CHECK_THROWS(sl2_even_pair_check(12));
}
