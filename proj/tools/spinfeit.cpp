// Command-line front end: table generation, Feit and Conjecture E checks on
// ctab files, witness-pair verification and Q-function queries.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "spinfeit/ctab.hpp"
#include "spinfeit/feit.hpp"
#include "spinfeit/inductive.hpp"
#include "spinfeit/omega.hpp"
#include "spinfeit/ordchar.hpp"
#include "spinfeit/smallgroups.hpp"
#include "spinfeit/spinchar.hpp"

using namespace spinfeit;
using json = nlohmann::ordered_json;

namespace {

json to_json(const PairReport& r) {
    json checks = json::object();
    for (const auto& [k, v] : r.checks) checks[k] = v;
    return {{"ok", r.ok()},
            {"group", r.group},
            {"character", r.character},
            {"subgroup", r.subgroup},
            {"partner", r.partner},
            {"multiplicity", r.multiplicity},
            {"field_equal", r.field_equal},
            {"stabilizer_equal", r.stabilizer_equal},
            {"sufficient_condition", to_string(r.sufficient)},
            {"chi_field", r.chi_field.to_string()},
            {"mu_field", r.mu_field.to_string()},
            {"checks", checks},
            {"note", r.note}};
}

CharacterTable generate(const std::string& family, int n, std::int64_t q) {
    if (family == "sn") return sn_table(n);
    if (family == "an") return an_table(n);
    if (family == "cover-s") return full_table(SpinKind::CoverS, n);
    if (family == "cover-a") return full_table(SpinKind::CoverA, n);
    if (family == "sl2even") return sl2_even_table(q);
    throw Error("unknown family " + family);
}

int run_verify(const std::string& what, int n, bool allow_large, bool as_json) {
    const std::int64_t limit = allow_large ? 20000000 : 100000;
    std::vector<PairReport> reports;
    std::vector<std::string> extra;
    bool extra_ok = true;
    if (what == "res-an") {
        for (const auto& lam : enumerate(n, PartitionFamily::All))
            if (conjugate(lam) != lam) reports.push_back(res_an_witness(lam));
    } else if (what == "an-ord") {
        for (const auto& lam : enumerate(n, PartitionFamily::All))
            if (conjugate(lam) == lam) reports.push_back(an_pair_check(lam, limit));
    } else if (what == "wreath") {
        bool any = false;
        for (int k = 3; k * 3 <= n; k += 2) {
            if (n % k != 0 || (n / k) % 2 == 0) continue;
            any = true;
            const auto w = wreath_mult(k, n / k, limit);
            const bool ok = w.multiplicity == 1 && w.phi_norm == 1 && w.phi_vanishes_off_support;
            extra_ok = extra_ok && ok;
            std::ostringstream os;
            os << (ok ? "PASS" : "FAIL") << " S" << k << " wr S" << n / k << ": elements=" << w.elements
               << " mult=" << w.multiplicity << " [phi,phi]=" << w.phi_norm << " phi(1)=" << w.phi_degree
               << " splits=" << (w.phi_vanishes_off_support ? "yes" : "no");
            extra.push_back(os.str());
        }
        if (!any) throw Error("wreath: n must be a product of two odd factors >= 3");
    } else if (what == "spin") {
        for (const auto& lam : enumerate(n, PartitionFamily::Strict)) {
            if (lam.length() < 2) continue;
            reports.push_back(spin_pair_witness(lam, SplitSign::Plus));
            if (lam.is_even()) reports.push_back(spin_pair_witness(lam, SplitSign::Minus));
        }
    } else if (what == "basic-spin") {
        reports.push_back(basic_spin_prime_check(n, SplitSign::Plus));
        reports.push_back(basic_spin_prime_check(n, SplitSign::Minus));
    } else if (what == "sl2") {
        const auto c = sl2_even_pair_check(n);
        reports = c.pairs;
        extra_ok = c.decompositions && c.divisibility_equiv;
        extra.push_back(std::string(c.decompositions ? "PASS" : "FAIL") + " restriction identities");
        extra.push_back(std::string(c.divisibility_equiv ? "PASS" : "FAIL") + " stabilizer divisibility conditions");
    } else {
        throw Error("unknown verification " + what);
    }
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.ok() ? 0 : 1;
    for (const auto& l : extra) failed += l.rfind("PASS", 0) == 0 ? 0 : 1;
    const std::size_t total = reports.size() + extra.size();
    const bool ok = failed == 0 && extra_ok;
    if (as_json) {
        json out = {{"verify", what}, {"n", n}, {"ok", ok}, {"reports", json::array()}, {"lines", extra}};
        for (const auto& r : reports) out["reports"].push_back(to_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_string() << "\n";
        for (const auto& l : extra) std::cout << l << "\n";
        std::cout << what << " n=" << n << ": " << total - failed << "/" << total << " checks pass"
                  << (ok ? "" : ", FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int run_feit(const std::vector<std::string>& files, bool validate_tables, bool as_json) {
    bool all = true;
    json out = json::array();
    for (const auto& f : files) {
        const auto t = read_ctab_file(f, validate_tables);
        const auto v = feit_check(t);
        const bool ok = feit_holds(v);
        all = all && ok;
        if (as_json) {
            json rows = json::array();
            for (const auto& x : v)
                rows.push_back({{"char", x.chi},
                                {"conductor", x.conductor},
                                {"witness", x.witness ? json(*x.witness) : json(nullptr)}});
            out.push_back({{"file", f}, {"group", t.name}, {"ok", ok}, {"characters", rows}});
            continue;
        }
        for (const auto& x : v) {
            std::cout << (x.witness ? "PASS " : "FAIL ") << t.name << " char " << x.chi << " "
                      << t.char_labels[static_cast<std::size_t>(x.chi)] << " c=" << x.conductor;
            if (x.witness)
                std::cout << " class " << *x.witness << " (order "
                          << t.classes[static_cast<std::size_t>(*x.witness)].order << ")";
            std::cout << "\n";
        }
        std::cout << f << ": " << (ok ? "Feit holds" : "Feit FAILS") << " for " << v.size() << " characters\n";
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return all ? 0 : 1;
}

int run_conje(const std::string& file, int only, bool validate_tables, bool as_json) {
    const auto t = read_ctab_file(file, validate_tables);
    bool all = true;
    json out = json::array();
    for (int chi = 0; chi < t.num_chars(); ++chi) {
        if (only >= 0 && chi != only) continue;
        const auto w = conjecture_e_cyclic(t, chi);
        all = all && w.has_value();
        const auto c = char_conductor(t, chi);
        if (as_json) {
            json j = {{"char", chi}, {"conductor", c}, {"ok", w.has_value()}};
            if (w) j["witness"] = {{"class", w->cls}, {"a", w->a}, {"multiplicity", w->multiplicity}};
            out.push_back(j);
            continue;
        }
        std::cout << (w ? "PASS " : "FAIL ") << t.name << " char " << chi << " c=" << c;
        if (w)
            std::cout << " class " << w->cls << " lambda_" << w->a << " mult " << w->multiplicity;
        std::cout << "\n";
    }
    if (only >= t.num_chars()) throw Error("no character " + std::to_string(only));
    if (as_json) std::cout << out.dump(2) << "\n";
    return all ? 0 : 1;
}

std::string show(const OmegaElement& f, const std::string& basis) {
    if (basis == "p") return f.to_string("p");
    const auto coords = basis == "Q" ? expand_in_Q(f) : expand_in_q(f);
    OmegaElement tmp(f.degree());
    for (const auto& [lam, c] : coords) tmp.add_term(lam, c);
    return tmp.to_string(basis);
}

int run_qfunc(const std::string& op, const std::vector<std::string>& args, const std::string& basis) {
    auto need = [&](std::size_t k) {
        if (args.size() != k) throw Error("qfunc " + op + " takes " + std::to_string(k) + " partition(s)");
    };
    if (basis != "p" && basis != "q" && basis != "Q") throw Error("basis must be p, q or Q");
    if (op == "q") {
        need(1);
        std::cout << show(q_product(Partition::parse(args[0])), basis) << "\n";
    } else if (op == "Q") {
        need(1);
        std::cout << show(schur_Q(Partition::parse(args[0])), basis) << "\n";
    } else if (op == "inner") {
        need(2);
        std::cout << inner(schur_Q(Partition::parse(args[0])), schur_Q(Partition::parse(args[1]))) << "\n";
    } else if (op == "kprime") {
        need(2);
        std::cout << kprime(Partition::parse(args[0]), Partition::parse(args[1])) << "\n";
    } else if (op == "f") {
        need(3);
        std::cout << f_coeff(Partition::parse(args[0]), Partition::parse(args[1]), Partition::parse(args[2])) << "\n";
    } else {
        throw Error("unknown qfunc operation " + op);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character tables, Feit's conjecture and inductive witness pairs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    bool no_validate = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--no-validate", no_validate, "skip table validation when reading ctab files");

    auto* gen = app.add_subcommand("gen", "write a generated character table");
    std::string family, out;
    int gn = 0;
    std::int64_t gq = 0;
    gen->add_option("--family", family, "sn | an | cover-s | cover-a | sl2even")
        ->required()
        ->check(CLI::IsMember({"sn", "an", "cover-s", "cover-a", "sl2even"}));
    gen->add_option("--n", gn, "degree");
    gen->add_option("--q", gq, "field size for sl2even");
    gen->add_option("--out", out, "output file (default: stdout)");

    auto* feit = app.add_subcommand("feit", "check Feit's conjecture on ctab files");
    std::vector<std::string> files;
    feit->add_option("files", files, "ctab files")->required();

    auto* conje = app.add_subcommand("conje", "Conjecture E over cyclic subgroups");
    std::string cfile;
    int cchar = -1;
    conje->add_option("file", cfile, "ctab file")->required();
    conje->add_option("--char", cchar, "only this character");

    auto* verify = app.add_subcommand("verify", "verify witness pairs for a family");
    std::string what;
    int vn = 0;
    bool allow_large = false;
    verify->add_option("family", what, "res-an | an-ord | wreath | spin | basic-spin | sl2")
        ->required()
        ->check(CLI::IsMember({"res-an", "an-ord", "wreath", "spin", "basic-spin", "sl2"}));
    verify->add_option("--n", vn, "degree, prime, or q for sl2")->required();
    verify->add_flag("--allow-large", allow_large, "allow wreath summations beyond kl = 9");

    auto* qf = app.add_subcommand("qfunc", "Schur Q-function queries");
    std::string op, basis = "p";
    std::vector<std::string> qargs;
    qf->add_option("op", op, "q | Q | inner | kprime | f")
        ->required()
        ->check(CLI::IsMember({"q", "Q", "inner", "kprime", "f"}));
    qf->add_option("partitions", qargs, "partitions such as 3,1 or (3,1)");
    qf->add_option("--basis", basis, "output basis for q and Q: p, q or Q");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*gen) {
            if (family == "sl2even" ? gq < 4 : gn < 1) throw Error("gen needs --n (or --q for sl2even)");
            const auto t = generate(family, gn, gq);
            if (out.empty()) std::cout << write_ctab(t);
            else write_ctab_file(out, t);
            return 0;
        }
        if (*feit) return run_feit(files, !no_validate, as_json);
        if (*conje) return run_conje(cfile, cchar, !no_validate, as_json);
        if (*verify) return run_verify(what, vn, allow_large, as_json);
        if (*qf) return run_qfunc(op, qargs, basis);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
