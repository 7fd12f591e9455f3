// One PASS/FAIL line per acceptance criterion. Exit status 0 iff the set of
// failing criteria equals the set given by --expect-fail (empty by default).

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "ctab_corpus.hpp"
#include "spinfeit/feit.hpp"
#include "spinfeit/inductive.hpp"

using namespace spinfeit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Outcome orthogonality() {
    const auto t0 = std::chrono::steady_clock::now();
    int tables = 0;
    std::string bad;
    auto check = [&](const CharacterTable& t) {
        ++tables;
        try {
            validate(t);
        } catch (const ValidationError& e) {
            if (bad.empty()) bad = t.name + ": " + e.what();
        }
    };
    for (int n = 1; n <= 9; ++n) check(sn_table(n));
    for (int n = 2; n <= 9; ++n) check(an_table(n));
    for (int n = 1; n <= 8; ++n) check(full_table(SpinKind::CoverS, n));
    for (int n = 2; n <= 8; ++n) check(full_table(SpinKind::CoverA, n));
    const double s = seconds_since(t0);
    if (!bad.empty()) return {false, bad};
    return {s < 60, std::to_string(tables) + " tables exact, " + secs(s)};
}

// Shifted standard tableaux of strict shape lambda, by removing corner boxes.
std::int64_t shifted_tableaux(const Partition& lam, std::map<Partition, std::int64_t>& memo) {
    if (lam.n() <= 1) return 1;
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    std::int64_t s = 0;
    const auto p = lam.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto q = p;
        --q[i];
        if (i + 1 < q.size() && q[i] <= q[i + 1]) continue;  // must stay strict
        if (q[i] == 0) q.pop_back();
        s += shifted_tableaux(Partition::from_parts(q), memo);
    }
    return memo[lam] = s;
}

Outcome basic_spin_degree() {
    std::map<Partition, std::int64_t> memo;
    for (int n = 4; n <= 10; ++n) {
        const Partition lam{n};
        const SplitSign s = lam.is_even() ? SplitSign::None : SplitSign::Plus;
        const CycloNumber d = phi_value(lam, s, ones(n), false);
        const std::int64_t want = std::int64_t{1} << ((n - 1) / 2);
        // Oracle: 2^floor((n - l)/2) times the number of shifted standard tableaux.
        const std::int64_t oracle = (std::int64_t{1} << ((n - lam.length()) / 2)) * shifted_tableaux(lam, memo);
        if (d != CycloNumber(want) || oracle != want)
            return {false, "n=" + std::to_string(n) + ": value " + d.to_string() + ", oracle " + std::to_string(oracle)};
    }
    // The same count for every strict lambda, as a cross-check of the oracle.
    for (int n = 4; n <= 10; ++n)
        for (const auto& lam : enumerate(n, PartitionFamily::Strict)) {
            const SplitSign s = lam.is_even() ? SplitSign::None : SplitSign::Plus;
            const std::int64_t oracle = (std::int64_t{1} << ((n - lam.length()) / 2)) * shifted_tableaux(lam, memo);
            if (phi_value(lam, s, ones(n), false) != CycloNumber(oracle))
                return {false, "degree of " + lam.to_string() + " differs from the tableau count"};
        }
    return {true, "n = 4..10, tableau oracle agrees for all strict lambda"};
}

Outcome branching() {
    std::int64_t pairs = 0;
    for (int n = 2; n <= 7; ++n)
        for (int m = 1; m < n; ++m) {
            for (const auto& chi : spin_labels(SpinKind::CoverS, n))
                for (const auto& eta : spin_labels(SpinKind::CoverSYoung, m, n - m)) {
                    ++pairs;
                    if (spin_branch_mult(chi, eta) != spin_branch_mult_brute(chi, eta))
                        return {false, chi.to_string() + " vs " + eta.to_string()};
                }
            for (const auto& chi : spin_labels(SpinKind::CoverA, n))
                for (const auto& eta : spin_labels(SpinKind::CoverAYoung, m, n - m)) {
                    if (chi.mu != disjoint_union(eta.mu, eta.nu)) continue;
                    ++pairs;
                    if (spin_branch_mult(chi, eta) != spin_branch_mult_brute(chi, eta))
                        return {false, chi.to_string() + " vs " + eta.to_string()};
                }
        }
    return {true, std::to_string(pairs) + " (chi, eta) pairs, n <= 7"};
}

Outcome fields() {
    std::int64_t labels = 0;
    for (int n = 1; n <= 9; ++n)
        for (SpinKind k : {SpinKind::CoverS, SpinKind::CoverA}) {
            if (k == SpinKind::CoverA && n < 2) continue;
            for (const auto& l : spin_labels(k, n)) {
                ++labels;
                if (spin_field(l) != conductor_of_set(spin_row(l))) return {false, l.to_string()};
            }
        }
    for (int n = 2; n <= 9; ++n)
        for (int m = 1; m < n; ++m)
            for (SpinKind k : {SpinKind::CoverSYoung, SpinKind::CoverAYoung})
                for (const auto& l : spin_labels(k, m, n - m)) {
                    ++labels;
                    if (spin_field(l) != conductor_of_set(spin_row(l))) return {false, l.to_string()};
                }
    return {true, std::to_string(labels) + " labels, n <= 9"};
}

Outcome feit() {
    std::vector<CharacterTable> ts;
    for (int n = 1; n <= 9; ++n) ts.push_back(sn_table(n));
    for (int n = 2; n <= 9; ++n) ts.push_back(an_table(n));
    for (int n = 1; n <= 9; ++n) ts.push_back(full_table(SpinKind::CoverS, n));
    for (int n = 2; n <= 9; ++n) ts.push_back(full_table(SpinKind::CoverA, n));
    for (std::int64_t q : {4, 8, 16, 32}) ts.push_back(sl2_even_table(q));
    std::int64_t chars = 0;
    for (const auto& t : ts) {
        const auto v = feit_check(t);
        chars += static_cast<std::int64_t>(v.size());
        for (const auto& x : v)
            if (!x.witness) return {false, t.name + " char " + std::to_string(x.chi) + " c=" + std::to_string(x.conductor)};
    }
    return {true, std::to_string(chars) + " characters in " + std::to_string(ts.size()) + " tables"};
}

Outcome reports(const std::vector<PairReport>& rs, const std::string& what) {
    for (const auto& r : rs)
        if (!r.ok()) return {false, r.to_string()};
    return {true, std::to_string(rs.size()) + " " + what};
}

Outcome res_an() {
    std::vector<PairReport> rs;
    for (int n = 2; n <= 10; ++n)
        for (const auto& lam : enumerate(n, PartitionFamily::All))
            if (conjugate(lam) != lam) {
                rs.push_back(res_an_witness(lam));
                if (rs.back().multiplicity != 1) return {false, rs.back().to_string()};
            }
    return reports(rs, "non-symmetric partitions, n = 2..10");
}

Outcome an_ord() {
    std::vector<PairReport> rs;
    // Every symmetric lambda of n <= 9 (prime hooks 5 and 7 among them), then p = 11.
    for (int n = 3; n <= 9; ++n)
        for (const auto& lam : enumerate(n, PartitionFamily::All))
            if (conjugate(lam) == lam) rs.push_back(an_pair_check(lam));
    rs.push_back(an_pair_check(symmetric_hook(11)));
    // Multiplicity one is the route for cases (b) and (c); hooks are witnessed otherwise.
    for (const auto& r : rs)
        if (!r.field_equal || (r.note.find("hook") == std::string::npos && r.multiplicity != 1))
            return {false, r.to_string()};
    return reports(rs, "symmetric partitions (n <= 9 and the hook of 11)");
}

Outcome wreath() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto w = wreath_mult(3, 3);
    const double s = seconds_since(t0);
    std::ostringstream os;
    os << w.elements << " elements, multiplicity " << w.multiplicity << ", " << secs(s);
    return {w.elements == 1296 && w.multiplicity == 1 && w.phi_norm == 1 && s < 5, os.str()};
}

Outcome spin() {
    std::vector<PairReport> rs;
    for (int n = 5; n <= 9; ++n)
        for (const auto& lam : enumerate(n, PartitionFamily::Strict)) {
            if (lam.length() < 2) continue;
            rs.push_back(spin_pair_witness(lam, SplitSign::Plus));
            if (lam.is_even()) rs.push_back(spin_pair_witness(lam, SplitSign::Minus));
        }
    return reports(rs, "non-basic spin characters, n = 5..9");
}

Outcome sl2() {
    std::size_t pairs = 0;
    for (std::int64_t q : {8, 16}) {
        const auto c = sl2_even_pair_check(q);
        if (!c.decompositions) return {false, "q=" + std::to_string(q) + ": restriction identity fails"};
        if (!c.divisibility_equiv) return {false, "q=" + std::to_string(q) + ": stabilizer conditions disagree"};
        for (const auto& r : c.pairs)
            if (!r.ok()) return {false, r.to_string()};
        pairs += c.pairs.size();
    }
    return {true, std::to_string(pairs) + " pairs, q = 8, 16"};
}

Outcome roots() {
    std::int64_t cases = 0;
    for (std::int64_t m = 1; m <= 225; m += 2)
        for (std::int64_t u = 0; u < m; ++u)
            for (std::int64_t v = 0; v < m; ++v) {
                ++cases;
                const std::int64_t k = roots_witness(m, u, v);
                if (!roots_valid(m, u, v, k))
                    return {false, "m=" + std::to_string(m) + " u=" + std::to_string(u) + " v=" + std::to_string(v)};
            }
    return {true, std::to_string(cases) + " (m, u, v) triples, odd m <= 225"};
}

Outcome s5_remark() {
    const auto t = sn_table(5);
    int chi = -1, cls = -1;
    for (int i = 0; i < t.num_chars(); ++i)
        if (t.char_labels[static_cast<std::size_t>(i)] == "(3,1,1)") chi = i;
    for (int c = 0; c < t.num_classes(); ++c)
        if (t.classes[static_cast<std::size_t>(c)].order == 6) cls = c;
    if (chi < 0 || cls < 0) return {false, "S5 table lacks (3,1,1) or an order-6 class"};
    const auto m = cyclic_multiplicities(t, chi, cls);
    std::ostringstream os;
    os << "multiplicities of lambda_0..5 on C6:";
    std::int64_t order6 = 0;
    for (std::size_t a = 0; a < m.size(); ++a) {
        os << " " << m[a];
        if (6 / std::gcd<std::int64_t>(static_cast<std::int64_t>(a), 6) == 6) order6 += m[a];
    }
    os << "; order-6 constituents: " << order6;
    return {order6 == 0, os.str()};
}

Outcome ctab() {
    const auto ts = corpus::tables();
    for (const auto& t : ts) {
        const std::string a = write_ctab(t);
        const auto p = parse_ctab(a);
        if (!(p == t) || write_ctab(p) != a) return {false, t.name + " does not round-trip"};
    }
    std::size_t mutations = 0, random = 0;
    for (const auto& t : ts)
        for (const auto& m : corpus::breaking_mutations(t)) {
            ++mutations;
            try {
                parse_ctab(m.text);
                return {false, t.name + ": accepted mutation '" + m.what + "'"};
            } catch (const CtabError&) {
            }
        }
    unsigned seed = 1;
    for (const auto& t : ts)
        for (const auto& s : corpus::random_mutations(write_ctab(t), seed++, 40)) {
            ++random;
            try {
                const auto p = parse_ctab(s);
                if (!(parse_ctab(write_ctab(p)) == p)) return {false, "accepted mutation does not round-trip"};
            } catch (const CtabError&) {
            } catch (const std::exception& e) {
                return {false, std::string("mutation escaped: ") + e.what()};
            }
        }
    return {true, std::to_string(ts.size()) + " tables round-trip; " + std::to_string(mutations) +
                      " breaking mutations rejected; " + std::to_string(random) + " random mutations handled"};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expect_fail;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) expect_fail.insert(std::stoi(tok));
        } else {
            std::cerr << "usage: acceptance [--expect-fail i,j,...]\n";
            return 2;
        }
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"orthogonality", orthogonality}, {"basic spin degree", basic_spin_degree},
        {"spin branching", branching},    {"spin fields", fields},
        {"Feit verdicts", feit},          {"res-an", res_an},
        {"an-ord", an_ord},               {"wreath (3,3)", wreath},
        {"spin witnesses", spin},         {"SL2(2^f)", sl2},
        {"roots lemma", roots},           {"S5 cyclic remark", s5_remark},
        {"ctab", ctab}};
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) failed.insert(id);
        std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << criteria[i].first << ": " << o.detail << std::endl;
    }
    if (failed == expect_fail) return 0;
    std::cout << "failing set differs from the expected one\n";
    return 1;
}
