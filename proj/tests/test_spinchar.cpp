#include <doctest.h>

#include <algorithm>

#include "spinfeit/spinchar.hpp"

using namespace spinfeit;

namespace {

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

SpinLabel full(SpinKind k, Partition lam, SplitSign s = SplitSign::None) { return {k, std::move(lam), Partition{}, s}; }
SpinLabel young(SpinKind k, Partition mu, Partition nu, SplitSign s = SplitSign::None) {
    return {k, std::move(mu), std::move(nu), s};
}

}  // namespace

TEST_CASE("values from the spec") {
    CHECK(phi_value(Partition{3}, SplitSign::None, ones(3), false) == CycloNumber(2));
    const CycloNumber r2 = sqrt_int(2);
    CHECK(phi_value(Partition{4}, SplitSign::Plus, Partition{4}, false) == -r2);
    CHECK(phi_value(Partition{4}, SplitSign::Minus, Partition{4}, false) == r2);
    // The O-branch term -1/2 and the i sqrt3 / 2 term add up.
    const CycloNumber w = (CycloNumber(-1) + sqrt_int(-3)) / make_rational(2);
    CHECK(psi_value(Partition{3, 1}, SplitSign::Plus, Partition{3, 1}, SplitSign::Plus, false) == w);
    CHECK(psi_value(Partition{3, 1}, SplitSign::Minus, Partition{3, 1}, SplitSign::Plus, false) == w.conj());
    CHECK(psi_value(Partition{3, 1}, SplitSign::Plus, Partition{3, 1}, SplitSign::Minus, false) == w.conj());
    CHECK(psi_value(Partition{3, 1}, SplitSign::Plus, Partition{3, 1}, SplitSign::Plus, true) == -w);
    CHECK_THROWS(phi_value(Partition{4}, SplitSign::None, Partition{4}, false));
    CHECK_THROWS(psi_value(Partition{3, 1}, SplitSign::None, Partition{3, 1}, SplitSign::None, false));
}

TEST_CASE("full cover tables validate") {
    for (int n = 1; n <= 7; ++n) {
        CHECK_NOTHROW(validate(full_table(SpinKind::CoverS, n)));
        if (n >= 2) CHECK_NOTHROW(validate(full_table(SpinKind::CoverA, n)));
    }
}

TEST_CASE("cover of S_3 and of A_4") {
    const auto t = full_table(SpinKind::CoverS, 3);
    CHECK(t.group_order == 12);
    Rational s = 0;
    for (int i = 0; i < t.num_chars(); ++i) s += t.degree(i) * t.degree(i);
    CHECK(s == 12);

    const auto a = full_table(SpinKind::CoverA, 4);
    CHECK(a.group_order == 24);
    std::vector<std::int64_t> deg;
    for (int i = 0; i < a.num_chars(); ++i) deg.push_back(to_int64(a.degree(i)));
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3});
    // one involution: the central z
    int involution_classes = 0;
    for (const auto& c : a.classes) involution_classes += c.order == 2;
    CHECK(involution_classes == 1);
}

TEST_CASE("z acts as -1 exactly on spin characters") {
    for (int n = 2; n <= 7; ++n)
        for (bool alt : {false, true}) {
            const CoverGroup& g = cover_group(n, 0, alt);
            const auto t = cover_table(g);
            const auto labels = cover_char_labels(g);
            REQUIRE(g.classes()[1].rep == g.cover().central());
            for (int i = 0; i < t.num_chars(); ++i) {
                const CycloNumber d = t.value(i, 0);
                CHECK(t.value(i, 1) == (labels[static_cast<std::size_t>(i)].spin ? -d : d));
            }
        }
}

TEST_CASE("basic spin degrees") {
    for (int n = 1; n <= 10; ++n) {
        const SplitSign s = Partition{n}.is_even() ? SplitSign::None : SplitSign::Plus;
        const CycloNumber d = phi_value(Partition{n}, s, ones(n), false);
        CHECK(d == CycloNumber(std::int64_t{1} << ((n - 1) / 2)));
    }
}

TEST_CASE("restriction from the cover of S_n to the cover of A_n") {
    for (int n = 2; n <= 8; ++n) {
        const CoverGroup& gs = cover_group(n, 0, false);
        const CoverGroup& ga = cover_group(n, 0, true);
        const auto fus = fusion(ga, gs);
        for (const auto& lam : enumerate(n, PartitionFamily::Strict)) {
            for (int c = 0; c < ga.num_classes(); ++c) {
                const auto& cl = gs.classes()[static_cast<std::size_t>(fus[static_cast<std::size_t>(c)])];
                if (lam.is_even()) {
                    const auto sum = spin_value(full(SpinKind::CoverA, lam, SplitSign::Plus), c) +
                                     spin_value(full(SpinKind::CoverA, lam, SplitSign::Minus), c);
                    if (n == 1) continue;
                    CHECK(sum == phi_value(lam, SplitSign::None, cl.alpha, cl.z));
                } else {
                    for (SplitSign s : {SplitSign::Plus, SplitSign::Minus})
                        CHECK(spin_value(full(SpinKind::CoverA, lam), c) == phi_value(lam, s, cl.alpha, cl.z));
                }
            }
        }
    }
}

TEST_CASE("Young spin characters are orthonormal") {
    for (int n = 2; n <= 7; ++n)
        for (int m = 1; m < n; ++m)
            for (SpinKind k : {SpinKind::CoverSYoung, SpinKind::CoverAYoung}) {
                const auto labels = spin_labels(k, m, n - m);
                const CoverGroup& h = cover_group(m, n - m, is_alternating(k));
                std::vector<int> id(static_cast<std::size_t>(h.num_classes()));
                for (int c = 0; c < h.num_classes(); ++c) id[static_cast<std::size_t>(c)] = c;
                std::vector<std::vector<CycloNumber>> rows;
                for (const auto& l : labels) rows.push_back(spin_row(l));
                for (std::size_t i = 0; i < rows.size(); ++i)
                    for (std::size_t j = i; j < rows.size(); ++j)
                        CHECK(restriction_inner(h, id, rows[i], rows[j]) == CycloNumber(i == j ? 1 : 0));
                // sum of squared degrees of spin characters is half the group order
                Rational s = 0;
                for (const auto& r : rows) s += r[0].rational_value() * r[0].rational_value();
                CHECK(s * 2 == make_rational(h.order()));
            }
}

TEST_CASE("Young values: zero branches and the odd-odd case") {
    const SpinCover& c3 = spin_cover(3);
    const SpinCover& c2 = spin_cover(2);
    // TMNS(ii): (2,1) and (2) are both odd; x odd gives 0.
    const SpinLabel l = young(SpinKind::CoverSYoung, Partition{2, 1}, Partition{2});
    CHECK(young_cover_value(l, c3.generator(1), c2.identity()).is_zero());
    // TMNA(ii) off the even part: +-i phi_+ phi_+
    for (SplitSign s : {SplitSign::Plus, SplitSign::Minus}) {
        const SpinLabel a = young(SpinKind::CoverAYoung, Partition{2, 1}, Partition{2}, s);
        const auto x = c3.from_word({1, 2, 1});
        const auto y = c2.generator(1);
        const CycloNumber want = root_of_unity(4, 1) * phi_value(Partition{2, 1}, SplitSign::Plus, Partition{2, 1}, false) *
                                 phi_value(Partition{2}, SplitSign::Plus, Partition{2}, false) *
                                 make_rational(s == SplitSign::Plus ? 1 : -1);
        const CoverGroup& gx = cover_group(3, 0, false);
        const auto& cx = gx.classes()[static_cast<std::size_t>(gx.classify(x))];
        CHECK(young_cover_value(a, x, y) ==
              want * make_rational(cx.z ? -1 : 1) * make_rational(cx.alpha == Partition{2, 1} ? 1 : 0));
    }
    // TMNS(i): product of the factors for two even shapes
    const SpinLabel e = young(SpinKind::CoverSYoung, Partition{3}, Partition{1});
    CHECK(young_cover_value(e, c3.identity(), spin_cover(1).identity()) == CycloNumber(2));
}

TEST_CASE("closed-form fields agree with actual values") {
    for (int n = 1; n <= 7; ++n)
        for (SpinKind k : {SpinKind::CoverS, SpinKind::CoverA}) {
            if (k == SpinKind::CoverA && n < 2) continue;
            for (const auto& l : spin_labels(k, n)) CHECK(spin_field(l) == conductor_of_set(spin_row(l)));
        }
    for (int n = 2; n <= 7; ++n)
        for (int m = 1; m < n; ++m)
            for (SpinKind k : {SpinKind::CoverSYoung, SpinKind::CoverAYoung})
                for (const auto& l : spin_labels(k, m, n - m)) CHECK(spin_field(l) == conductor_of_set(spin_row(l)));
    CHECK(spin_field(full(SpinKind::CoverA, Partition{3, 1}, SplitSign::Plus)).conductor == 3);
    CHECK(spin_field(full(SpinKind::CoverS, Partition{4}, SplitSign::Plus)).conductor == 8);
    CHECK(spin_field(full(SpinKind::CoverA, Partition{4})).conductor == 1);
}

TEST_CASE("branching examples") {
    CHECK(spin_branch_mult(full(SpinKind::CoverS, Partition{3, 1}),
                           young(SpinKind::CoverSYoung, Partition{3}, Partition{1})) == 1);
    for (SplitSign s : {SplitSign::Plus, SplitSign::Minus}) {
        const SplitSign o = s == SplitSign::Plus ? SplitSign::Minus : SplitSign::Plus;
        const auto chi = full(SpinKind::CoverS, Partition{3, 2}, s);
        CHECK(spin_branch_mult(chi, young(SpinKind::CoverSYoung, Partition{3}, Partition{2}, s)) == 1);
        CHECK(spin_branch_mult(chi, young(SpinKind::CoverSYoung, Partition{3}, Partition{2}, o)) == 0);
        CHECK(spin_branch_mult_brute(chi, young(SpinKind::CoverSYoung, Partition{3}, Partition{2}, s)) == 1);
    }
    CHECK_THROWS(spin_branch_mult(full(SpinKind::CoverS, Partition{3, 1}),
                                  young(SpinKind::CoverSYoung, Partition{3}, Partition{2})));
}

TEST_CASE("union sign twists the exceptional pairing") {
    CHECK(union_sign(Partition{3}, Partition{2}) == 1);
    CHECK(union_sign(Partition{2, 1}, Partition{3}) == -1);
    CHECK(union_sign(Partition{1}, Partition{3, 2}) == -1);
    // The untwisted rule would pair phi_+ with phi_+ here; the restricted values say otherwise.
    const auto chi = full(SpinKind::CoverS, Partition{3, 2, 1}, SplitSign::Plus);
    CHECK(spin_branch_mult_brute(chi, young(SpinKind::CoverSYoung, Partition{2, 1}, Partition{3}, SplitSign::Plus)) == 0);
    CHECK(spin_branch_mult_brute(chi, young(SpinKind::CoverSYoung, Partition{2, 1}, Partition{3}, SplitSign::Minus)) == 1);
}

TEST_CASE("closed-form branching equals restricted inner products") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m < n; ++m) {
            for (const auto& chi : spin_labels(SpinKind::CoverS, n))
                for (const auto& eta : spin_labels(SpinKind::CoverSYoung, m, n - m))
                    CHECK(spin_branch_mult(chi, eta) == spin_branch_mult_brute(chi, eta));
            for (const auto& chi : spin_labels(SpinKind::CoverA, n))
                for (const auto& eta : spin_labels(SpinKind::CoverAYoung, m, n - m))
                    if (chi.mu == disjoint_union(eta.mu, eta.nu))
                        CHECK(spin_branch_mult(chi, eta) == spin_branch_mult_brute(chi, eta));
        }
}
