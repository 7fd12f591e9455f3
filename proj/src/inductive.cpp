#include "spinfeit/inductive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "spinfeit/cover.hpp"
#include "spinfeit/numtheory.hpp"
#include "spinfeit/ordchar.hpp"
#include "spinfeit/smallgroups.hpp"

namespace spinfeit {

std::string to_string(Sufficient s) {
    switch (s) {
        case Sufficient::MultOne: return "MULT_ONE";
        case Sufficient::InnerCentral: return "INNER_CENTRAL";
        case Sufficient::OddIndexReal: return "ODD_INDEX_REAL";
        case Sufficient::PGroupCoprime: return "P_GROUP_COPRIME";
        case Sufficient::None: return "NONE";
    }
    return "NONE";
}

bool PairReport::ok() const {
    if (sufficient == Sufficient::None || !field_equal || !stabilizer_equal) return false;
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string PairReport::to_string() const {
    std::ostringstream os;
    os << (ok() ? "PASS " : "FAIL ") << group << " " << character << " | U=" << subgroup << " mu=" << partner
       << " mult=" << multiplicity << " field=" << (field_equal ? "eq" : "NE") << "(" << chi_field.to_string()
       << ") stab=" << (stabilizer_equal ? "eq" : "NE") << " via=" << spinfeit::to_string(sufficient);
    for (const auto& [name, v] : checks) os << " " << name << "=" << (v ? "ok" : "BAD");
    if (!note.empty()) os << " [" << note << "]";
    return os.str();
}

namespace {

using Row = std::vector<CycloNumber>;
using Perm = std::vector<int>;

CycloNumber galois_unit(const CycloNumber& x, std::int64_t k, std::int64_t c) {
    if (x.is_rational()) return x;
    const std::int64_t big = lcm64(c, x.order());
    return x.galois(lift_unit(mod_floor(k, c), c, big));
}

Row galois_row(const Row& r, std::int64_t k, std::int64_t c) {
    Row out;
    out.reserve(r.size());
    for (const auto& x : r) out.push_back(galois_unit(x, k, c));
    return out;
}

Row permute_row(const Row& r, const Perm& p) {
    Row out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[static_cast<std::size_t>(p[i])];
    return out;
}

Perm compose(const Perm& a, const Perm& b) {  // a after b
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
    Perm id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    std::set<Perm> seen{id};
    std::vector<Perm> out{id};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            Perm h = compose(g, out[i]);
            if (seen.insert(h).second) out.push_back(h);
        }
    return out;
}

std::vector<std::int64_t> units_or_one(std::int64_t c) { return c == 1 ? std::vector<std::int64_t>{1} : units_mod(c); }

std::set<int> orbit(int x, const std::vector<Perm>& maps) {
    std::set<int> o;
    for (const auto& m : maps) o.insert(m[static_cast<std::size_t>(x)]);
    return o;
}

Permutation embed_pair(const Permutation& u, const Permutation& v) {
    std::vector<int> img = u.images();
    for (int x : v.images()) img.push_back(x + u.size());
    return Permutation(img);
}

Permutation extend(const Permutation& u, int n) { return embed_pair(u, Permutation(n - u.size())); }

Permutation affine(std::int64_t p, std::int64_t mul, std::int64_t add) {
    std::vector<int> img(static_cast<std::size_t>(p));
    for (std::int64_t x = 0; x < p; ++x) img[static_cast<std::size_t>(x)] = static_cast<int>(mod_floor(mul * x + add, p));
    return Permutation(img);
}

int an_label_index(int n, const AnCharLabel& l) {
    const auto labels = an_char_labels(n);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].lam == l.lam && labels[i].sign == l.sign) return static_cast<int>(i);
    throw Error("no A_" + std::to_string(n) + " character " + l.to_string());
}

// The A_n label of chi^lambda restricted (non-symmetric) or theta^sign (symmetric).
AnCharLabel an_label(const Partition& lam, SplitSign sign) {
    const Partition c = conjugate(lam);
    if (c == lam) return {lam, sign == SplitSign::None ? SplitSign::Plus : sign};
    return {std::max(lam, c), SplitSign::None};
}

Row an_row(const AnCharLabel& l, const std::vector<AnClass>& cls) {
    Row r;
    for (const auto& c : cls) r.push_back(an_char_value(l, c));
    return r;
}

// Class permutation of A_n induced by conjugation with t (any permutation of n points).
Perm an_conj_perm(const std::vector<AnClass>& cls, const Permutation& t) {
    Perm p;
    for (const auto& c : cls) p.push_back(an_classify(t * c.rep * t.inverse()));
    return p;
}

std::int64_t an_order(int n) { return n <= 1 ? 1 : factorial(n) / 2; }

std::int64_t to_mult(const CycloNumber& x, const std::string& what) {
    if (!x.is_rational() || !is_integer(x.rational_value()))
        throw Error("non-integral multiplicity " + x.to_string() + " for " + what);
    return to_int64(x.rational_value());
}

std::vector<Row> galois_orbit_list(const Row& r) {
    const std::int64_t c = conductor_of_set(r).conductor;
    std::vector<Row> o;
    for (std::int64_t k : units_or_one(c)) {
        Row x = galois_row(r, k, c);
        if (std::find(o.begin(), o.end(), x) == o.end()) o.push_back(std::move(x));
    }
    return o;
}

bool same_set(std::vector<Row> a, std::vector<Row> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

void fill_stabilizer(PairReport& r, const Row& chi, const Row& mu, const std::vector<std::pair<Perm, Perm>>& gammas) {
    const OrbitData od = build_setup(chi, mu, gammas);
    const StabilizerResult s = stabilizer_pair_equal(od.setup, od.chi, od.mu);
    r.stabilizer_equal = s.equal;
    if (s.criterion > 0) r.note += (r.note.empty() ? "" : "; ") + std::string("easy2 criterion ") + std::to_string(s.criterion);
}

}  // namespace

StabilizerResult stabilizer_pair_equal(const StabilizerSetup& s, int chi, int mu) {
    const std::size_t n = s.labels.size();
    auto check_perm = [&](const Perm& p) {
        if (p.size() != n) throw Error("stabilizer setup: action has the wrong size");
        std::vector<bool> seen(n, false);
        for (int x : p) {
            if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)])
                throw Error("stabilizer setup: action is not a permutation");
            seen[static_cast<std::size_t>(x)] = true;
        }
    };
    for (const auto& g : s.gamma_gens) check_perm(g);
    std::vector<Perm> gal;
    for (const auto& [k, p] : s.galois) {
        check_perm(p);
        gal.push_back(p);
    }
    if (gal.empty()) gal.push_back(closure({}, n).front());
    const auto gamma = closure(s.gamma_gens, n);
    for (const auto& g : gamma)
        for (const auto& h : gal)
            if (compose(g, h) != compose(h, g)) throw Error("stabilizer setup: outer and Galois actions do not commute");

    StabilizerResult res;
    std::set<std::pair<std::size_t, std::size_t>> sc, sm;
    for (std::size_t a = 0; a < gamma.size(); ++a)
        for (std::size_t b = 0; b < gal.size(); ++b) {
            const Perm g = compose(gal[b], gamma[a]);
            if (g[static_cast<std::size_t>(chi)] == chi) sc.insert({a, b});
            if (g[static_cast<std::size_t>(mu)] == mu) sm.insert({a, b});
        }
    res.equal = sc == sm;
    res.chi_stabilizer = sc.size();
    res.mu_stabilizer = sm.size();
    std::set<std::size_t> gc, gm;
    for (std::size_t a = 0; a < gamma.size(); ++a) {
        if (gamma[a][static_cast<std::size_t>(chi)] == chi) gc.insert(a);
        if (gamma[a][static_cast<std::size_t>(mu)] == mu) gm.insert(a);
    }
    res.gamma_equal = gc == gm;
    if (!res.gamma_equal) return res;
    const auto go_chi = orbit(chi, gal), go_mu = orbit(mu, gal);
    const auto ro_chi = orbit(chi, gamma), ro_mu = orbit(mu, gamma);
    if (go_chi.size() == 1 || go_mu.size() == 1) res.criterion = 1;
    else if (ro_chi.size() == 1 || ro_mu.size() == 1) res.criterion = 2;
    else if (go_chi.size() == 2 && go_chi == ro_chi && go_mu == ro_mu) res.criterion = 3;
    else if (go_chi.size() == 2 && gamma.size() % 2 == 1) res.criterion = 4;
    return res;
}

OrbitData build_setup(const Row& chi_row, const Row& mu_row, const std::vector<std::pair<Perm, Perm>>& gammas) {
    const std::int64_t c = lcm64(conductor_of_set(chi_row).conductor, conductor_of_set(mu_row).conductor);
    const auto units = units_or_one(c);
    // Orbits of chi among X-rows and of mu among U-rows.
    auto grow = [&](const Row& seed, bool onx) {
        std::vector<Row> rows{seed};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<Row> next;
            for (const auto& g : gammas) next.push_back(permute_row(rows[i], onx ? g.first : g.second));
            for (std::int64_t k : units) next.push_back(galois_row(rows[i], k, c));
            for (auto& r : next)
                if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(std::move(r));
        }
        return rows;
    };
    const auto xr = grow(chi_row, true), ur = grow(mu_row, false);
    OrbitData od;
    od.chi = 0;
    od.mu = static_cast<int>(xr.size());
    od.rows = xr;
    od.rows.insert(od.rows.end(), ur.begin(), ur.end());
    for (std::size_t i = 0; i < xr.size(); ++i) od.setup.labels.push_back("chi" + std::to_string(i));
    for (std::size_t i = 0; i < ur.size(); ++i) od.setup.labels.push_back("mu" + std::to_string(i));
    od.setup.conductor = c;
    auto locate = [&](const Row& r, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            if (od.rows[i] == r) return static_cast<int>(i);
        throw Error("build_setup: orbit not closed");
    };
    const std::size_t nx = xr.size(), nt = od.rows.size();
    for (const auto& g : gammas) {
        Perm p(nt);
        for (std::size_t i = 0; i < nt; ++i) {
            const bool onx = i < nx;
            p[i] = locate(permute_row(od.rows[i], onx ? g.first : g.second), onx ? 0 : nx, onx ? nx : nt);
        }
        od.setup.gamma_gens.push_back(p);
    }
    for (std::int64_t k : units) {
        Perm p(nt);
        for (std::size_t i = 0; i < nt; ++i) {
            const bool onx = i < nx;
            p[i] = locate(galois_row(od.rows[i], k, c), onx ? 0 : nx, onx ? nx : nt);
        }
        od.setup.galois[k] = p;
    }
    return od;
}

// ---------------------------------------------------------------------------
// Restriction from A_n to A_{n-1}

namespace {

bool conjugate_free(const Partition& d, const std::vector<Partition>& ds) {
    if (d.n() >= 2 && conjugate(d) == d) return false;
    return std::none_of(ds.begin(), ds.end(), [&](const Partition& e) { return conjugate(e) == d; });
}

Partition cfc_search(const Partition& lam) {
    const auto ds = branch(lam);
    if (lam.n() <= 2) return ds.back();
    for (auto it = ds.rbegin(); it != ds.rend(); ++it)
        if (conjugate_free(*it, ds)) return *it;
    throw Error("no conjugate-free constituent for " + lam.to_string());
}

Partition remove_from_row(const Partition& lam, int row) {
    std::vector<int> p = lam.parts();
    --p[static_cast<std::size_t>(row)];
    return Partition::from_parts(p);
}

}  // namespace

namespace {

// The case analysis; may return a symmetric or conjugate-clashing constituent
// when the recursion passes through a gamma of size 2.
Partition cfc_route(const Partition& lam) {
    const Partition lc = conjugate(lam);
    if (lc == lam) throw Error("conjugate_free_constituent: " + lam.to_string() + " is symmetric");
    if (lam.n() <= 5) return cfc_search(lam);
    const int a = lam[0], b = lc[0];
    if (a < b) return conjugate(cfc_route(lc));
    const auto ds = branch(lam);
    if (a > b) return ds.back();
    auto count = [&](const Partition& p) { return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), a)); };
    const int c = count(lam), d = count(lc);
    if (c < d) return conjugate(cfc_route(lc));
    if (c > d) return ds.back();
    // Strip the c longest rows and columns, solve for the rest, put them back.
    std::vector<int> g;
    for (int i = c; i < lam.length(); ++i)
        if (lam[i] > c) g.push_back(lam[i] - c);
    const Partition gamma = Partition::from_parts(g);
    const Partition dg = cfc_route(gamma);
    for (int r = 0; r < gamma.length(); ++r)
        if (dg.part(r) != gamma[r]) return remove_from_row(lam, r + c);
    throw Error("conjugate_free_constituent: lifting failed");
}

}  // namespace

Partition conjugate_free_constituent(const Partition& lam) {
    const Partition d = cfc_route(lam);
    if (lam.n() <= 2 || conjugate_free(d, branch(lam))) return d;
    return cfc_search(lam);
}

PairReport res_an_witness(const Partition& lam) {
    const int n = lam.n();
    if (n < 2) throw Error("res_an_witness: n must be at least 2");
    if (conjugate(lam) == lam) throw Error("res_an_witness: " + lam.to_string() + " is symmetric");
    const Partition delta = conjugate_free_constituent(lam);
    PairReport r;
    if (delta != cfc_route(lam)) r.note = "case analysis gave " + cfc_route(lam).to_string() + ", searched instead";
    r.group = "A" + std::to_string(n);
    r.character = "chi" + lam.to_string();
    r.subgroup = "A" + std::to_string(n - 1);
    r.partner = "chi" + delta.to_string();
    const auto ds = branch(lam);
    r.checks.push_back({"in_branching", std::find(ds.begin(), ds.end(), delta) != ds.end()});
    r.checks.push_back({"conjugate_free", n <= 2 || conjugate_free(delta, ds)});

    // Restricted inner products over the classes of A_{n-1}, from S_{n-1} cycle types.
    Rational s = 0, norm = 0;
    for (const auto& rho : enumerate(n - 1, PartitionFamily::All)) {
        if (!rho.is_even()) continue;
        const Rational size = make_rational(factorial(n - 1)) / make_rational(z_value(rho));
        const std::int64_t a = sn_char_value(lam, Partition::from_parts([&] {
            auto p = rho.parts();
            p.push_back(1);
            return p;
        }()));
        const std::int64_t d = sn_char_value(delta, rho);
        s += size * make_rational(a * d);
        norm += size * make_rational(d * d);
    }
    s /= make_rational(an_order(n - 1));
    norm /= make_rational(an_order(n - 1));
    r.multiplicity = is_integer(s) ? to_int64(s) : -1;
    r.checks.push_back({"mu_irreducible", norm == 1});

    const auto xc = an_classes(n);
    const Row chi = an_row(an_label(lam, SplitSign::None), xc);
    std::vector<AnClass> uc;
    Row mu;
    if (n - 1 >= 2) {
        uc = an_classes(n - 1);
        mu = an_row(an_label(delta, SplitSign::None), uc);
    } else {
        mu = {CycloNumber(1)};
    }
    r.chi_field = conductor_of_set(chi);
    r.mu_field = conductor_of_set(mu);
    r.field_equal = r.chi_field == r.mu_field;
    std::vector<std::pair<Perm, Perm>> gammas;
    if (n - 1 >= 2) {
        const Permutation t = Permutation::adjacent(n - 1, 1);
        gammas.push_back({an_conj_perm(xc, extend(t, n)), an_conj_perm(uc, t)});
    }
    fill_stabilizer(r, chi, mu, gammas);
    if (r.multiplicity == 1 && r.stabilizer_equal) r.sufficient = Sufficient::MultOne;
    return r;
}

// ---------------------------------------------------------------------------
// Wreath products

Partition symmetric_hook(int n) {
    if (n < 1 || n % 2 == 0) throw Error("symmetric_hook: n must be odd");
    std::vector<int> p{(n + 1) / 2};
    for (int i = 0; i < (n - 1) / 2; ++i) p.push_back(1);
    return Partition(p);
}

WreathResult wreath_mult(int k, int l, std::int64_t limit) {
    if (k < 3 || l < 3 || k % 2 == 0 || l % 2 == 0) throw Error("wreath_mult: k and l must be odd and at least 3");
    std::int64_t total = factorial(l);
    for (int i = 0; i < l; ++i) {
        total *= factorial(k);
        if (total > limit) throw Error("wreath_mult: S_" + std::to_string(k) + " wr S_" + std::to_string(l) +
                                       " exceeds the element bound " + std::to_string(limit));
    }
    const int n = k * l;
    const Partition ln = symmetric_hook(n), lk = symmetric_hook(k), ll = symmetric_hook(l);
    const auto sk = all_permutations(k), sl = all_permutations(l);
    std::vector<std::int64_t> chik;
    for (const auto& y : sk) chik.push_back(sn_char_value(lk, y.cycle_type()));
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < sk.size(); ++i) index[sk[i]] = static_cast<int>(i);

    WreathResult res;
    res.k = k;
    res.l = l;
    res.elements = total;
    res.phi_vanishes_off_support = true;
    Rational sum = 0, norm = 0;
    std::vector<std::size_t> ys(static_cast<std::size_t>(l), 0);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (const auto& h : sl) {
        const std::int64_t chil = sn_char_value(ll, h.cycle_type());
        const auto hc = h.cycles();
        std::fill(ys.begin(), ys.end(), 0);
        while (true) {
            // x(i, b) = (y_{h(b)}(i), h(b)), point (i, b) at b*k + i.
            for (int b = 0; b < l; ++b) {
                const int hb = h(b);
                const Permutation& y = sk[ys[static_cast<std::size_t>(hb)]];
                for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(b * k + i)] = hb * k + y(i);
            }
            const std::int64_t chi = sn_char_value(ln, Permutation(img).cycle_type());
            std::int64_t phi = chil;
            bool y_even = true;
            for (const auto& cyc : hc) {
                Permutation z(k);
                int b = cyc.front();
                for (std::size_t s = 0; s < cyc.size(); ++s) {
                    b = h(b);
                    z = sk[ys[static_cast<std::size_t>(b)]] * z;
                }
                phi *= chik[static_cast<std::size_t>(index.at(z))];
                y_even = y_even && z.is_even();
            }
            if ((!h.is_even() || !y_even) && phi != 0) res.phi_vanishes_off_support = false;
            sum += make_rational(chi * phi);
            norm += make_rational(phi * phi);
            std::size_t pos = 0;
            while (pos < ys.size() && ++ys[pos] == sk.size()) ys[pos++] = 0;
            if (pos == ys.size()) break;
        }
    }
    res.multiplicity = sum / make_rational(total);
    res.phi_norm = norm / make_rational(total);
    std::int64_t deg = hook_dimension(ll);
    for (int i = 0; i < l; ++i) deg *= hook_dimension(lk);
    res.phi_degree = deg;
    return res;
}

// ---------------------------------------------------------------------------
// Symmetric lambda in A_n

namespace {

PairReport an_hook_prime(std::int64_t p) {
    const Partition lam = symmetric_hook(static_cast<int>(p));
    const auto ft = frobenius_half(p);
    const std::int64_t r = primitive_root(p);
    const Permutation c = affine(p, 1, 1), g = affine(p, r * r % p, 0), gp = affine(p, r, 0);
    const auto xc = an_classes(static_cast<int>(p));
    const AnCharLabel th{lam, SplitSign::Plus};
    const Row chi = an_row(th, xc);
    std::vector<int> fus;
    for (const auto& mc : ft.classes) fus.push_back(an_classify(c.pow(mc.v) * g.pow(mc.k1)));
    Perm uperm;
    for (const auto& mc : ft.classes) uperm.push_back(ft.class_of(r * mc.v, mc.k1, mc.k2));
    const std::vector<std::pair<Perm, Perm>> gammas{{an_conj_perm(xc, gp), uperm}};

    PairReport best;
    bool have = false;
    for (std::size_t i = 0; i < ft.chars.size(); ++i) {
        if (!ft.chars[i].induced) continue;
        const Row& mu = ft.table.values[i];
        PairReport rep;
        rep.group = "A" + std::to_string(p);
        rep.character = "theta" + lam.to_string() + "+";
        rep.subgroup = ft.table.name;
        rep.partner = ft.table.char_labels[i];
        BucketSum s;
        for (std::size_t cl = 0; cl < ft.classes.size(); ++cl)
            s.add(chi[static_cast<std::size_t>(fus[cl])] * mu[cl].conj() *
                  make_rational(ft.table.classes[cl].size));
        rep.multiplicity = to_mult(s.total() / make_rational(ft.table.group_order), rep.partner);
        rep.chi_field = conductor_of_set(chi);
        rep.mu_field = conductor_of_set(mu);
        rep.field_equal = rep.chi_field == rep.mu_field;
        rep.checks.push_back({"mu_degree", mu[0] == CycloNumber((p - 1) / 2)});
        rep.checks.push_back({"field_closed_form", rep.chi_field == quadratic_field(((p - 1) / 2 % 2 ? -1 : 1) * p)});
        rep.checks.push_back({"outer_moves_chi", permute_row(chi, gammas[0].first) != chi});
        fill_stabilizer(rep, chi, mu, gammas);
        if (rep.field_equal && rep.stabilizer_equal) rep.sufficient = Sufficient::InnerCentral;
        rep.note = "hook, p prime" + (rep.note.empty() ? "" : "; " + rep.note);
        if (!have || (best.multiplicity == 0 && rep.multiplicity > 0)) {
            best = rep;
            have = true;
        }
    }
    return best;
}

PairReport an_hook_wreath(const Partition& lam, std::int64_t limit) {
    const int n = lam.n();
    // Blocks of the smallest odd prime size keep the summation cheapest.
    int k = 3;
    while (n % k != 0) k += 2;
    PairReport rep;
    rep.group = "A" + std::to_string(n);
    rep.character = "theta" + lam.to_string() + "+";
    rep.subgroup = "A(" + std::to_string(k) + "," + std::to_string(n / k) + ")";
    rep.partner = "phi+";
    const auto w = wreath_mult(k, n / k, limit);
    rep.multiplicity = is_integer(w.multiplicity) ? to_int64(w.multiplicity) : -1;
    rep.checks.push_back({"phi_irreducible", w.phi_norm == 1});
    rep.checks.push_back({"phi_splits", w.phi_vanishes_off_support});
    const auto xc = an_classes(n);
    const Row chi = an_row({lam, SplitSign::Plus}, xc);
    rep.chi_field = conductor_of_set(chi);
    rep.mu_field = quadratic_field(((n - 1) / 2 % 2 ? -1 : 1) * n);
    rep.field_equal = rep.chi_field == rep.mu_field;
    // phi+ is not tabulated. Its Gamma-orbit is {phi+, phi-} because phi splits
    // and an odd element of S(k,l) swaps the halves; its field is the closed form.
    // Rational theta goes through criterion 1, otherwise criterion 3 on the theta side.
    const Row moved = permute_row(chi, an_conj_perm(xc, Permutation::adjacent(n, 1)));
    const bool theta_orbits = same_set(galois_orbit_list(chi), {chi, moved}) && moved != chi;
    rep.checks.push_back({"theta_orbits", rep.chi_field.conductor == 1 || theta_orbits});
    rep.stabilizer_equal = rep.field_equal && w.phi_vanishes_off_support &&
                           (rep.chi_field.conductor == 1 || (rep.mu_field.degree() == 2 && theta_orbits));
    rep.note = "multiplicity over S(k,l); partner field from the closed form";
    if (rep.multiplicity == 1 && rep.stabilizer_equal) rep.sufficient = Sufficient::MultOne;
    return rep;
}

// theta^+ of A_n restricted to (S_m x S_k) cap A_n, against mu built from alpha^+-, beta^+-.
PairReport an_case_b(const Partition& lam, const Partition& alpha, const Partition& beta) {
    const int n = lam.n(), m = alpha.n(), k = beta.n();
    const auto xc = an_classes(n), mc = an_classes(m), kc = an_classes(k);
    const CharacterTable tm = an_table(m), tk = an_table(k);
    const AnCharLabel th{lam, SplitSign::Plus};
    const int ap = an_label_index(m, {alpha, SplitSign::Plus}), am = an_label_index(m, {alpha, SplitSign::Minus});
    const int bp = an_label_index(k, {beta, SplitSign::Plus}), bm = an_label_index(k, {beta, SplitSign::Minus});
    const std::size_t nm = mc.size(), nk = kc.size();
    Row chi_u;  // theta on the pair classes
    std::vector<Rational> size;
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nk; ++j) {
            chi_u.push_back(an_char_value(th, xc[static_cast<std::size_t>(an_classify(embed_pair(mc[i].rep, kc[j].rep)))]));
            size.push_back(make_rational(tm.classes[i].size * tk.classes[j].size));
        }
    const Rational uorder = make_rational(2 * tm.group_order * tk.group_order);
    auto mu_for = [&](bool crossed) {
        Row mu;
        for (std::size_t i = 0; i < nm; ++i)
            for (std::size_t j = 0; j < nk; ++j) {
                const int b1 = crossed ? bm : bp, b2 = crossed ? bp : bm;
                mu.push_back(tm.value(ap, static_cast<int>(i)) * tk.value(b1, static_cast<int>(j)) +
                             tm.value(am, static_cast<int>(i)) * tk.value(b2, static_cast<int>(j)));
            }
        return mu;
    };
    auto inner = [&](const Row& a, const Row& b) {
        BucketSum s;
        for (std::size_t i = 0; i < a.size(); ++i) s.add(a[i] * b[i].conj() * size[i]);
        return s.total() / uorder;
    };
    PairReport rep;
    rep.group = "A" + std::to_string(n);
    rep.character = "theta" + lam.to_string() + "+";
    rep.subgroup = "(S" + std::to_string(m) + "xS" + std::to_string(k) + ")nA" + std::to_string(n);
    Row mu;
    for (bool crossed : {false, true}) {
        mu = mu_for(crossed);
        rep.multiplicity = to_mult(inner(chi_u, mu), "case (b)");
        rep.partner = crossed ? "a+b- + a-b+" : "a+b+ + a-b-";
        rep.partner = "mu[" + alpha.to_string() + "," + beta.to_string() + "](" + rep.partner + ")";
        if (rep.multiplicity == 1) {
            rep.note = crossed ? "crossed labeling" : "direct labeling";
            break;
        }
    }
    rep.checks.push_back({"mu_irreducible", inner(mu, mu) == CycloNumber(1)});
    rep.checks.push_back({"lr_multiplicity", restrict_mult_young(lam, m, k, alpha, beta) == 1});
    rep.chi_field = conductor_of_set(an_row(th, xc));
    rep.mu_field = conductor_of_set(mu);
    rep.field_equal = rep.chi_field == rep.mu_field;
    // Gamma = S_m x S_k, generated over U by a transposition of the first block.
    const Permutation t = Permutation::adjacent(m, 1);
    Perm up;
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nk; ++j)
            up.push_back(static_cast<int>(static_cast<std::size_t>(an_classify(t * mc[i].rep * t)) * nk + j));
    const Row chi = an_row(th, xc);
    // U-side rows live on the pair classes; X-side on the classes of A_n.
    fill_stabilizer(rep, chi, mu, {{an_conj_perm(xc, extend(t, n)), up}});
    if (rep.multiplicity == 1 && rep.stabilizer_equal) rep.sufficient = Sufficient::MultOne;
    rep.note = "case (b); " + rep.note;
    return rep;
}

PairReport an_case_c(const Partition& lam, const Partition& alpha) {
    const int n = lam.n(), m = n - 1;
    const auto xc = an_classes(n), uc = an_classes(m);
    const CharacterTable tu = an_table(m);
    const AnCharLabel th{lam, SplitSign::Plus};
    const Row chi = an_row(th, xc);
    Row chi_u;
    for (const auto& c : uc) chi_u.push_back(chi[static_cast<std::size_t>(an_classify(extend(c.rep, n)))]);
    PairReport rep;
    rep.group = "A" + std::to_string(n);
    rep.character = "theta" + lam.to_string() + "+";
    rep.subgroup = "A" + std::to_string(m);
    Row mu;
    for (SplitSign s : {SplitSign::Plus, SplitSign::Minus}) {
        mu = tu.row(an_label_index(m, {alpha, s}));
        BucketSum acc;
        for (std::size_t i = 0; i < uc.size(); ++i) acc.add(chi_u[i] * mu[i].conj() * make_rational(tu.classes[i].size));
        rep.multiplicity = to_mult(acc.total() / make_rational(tu.group_order), "case (c)");
        rep.partner = "theta" + alpha.to_string() + (s == SplitSign::Plus ? "+" : "-");
        if (rep.multiplicity == 1) break;
    }
    rep.chi_field = conductor_of_set(chi);
    rep.mu_field = conductor_of_set(mu);
    rep.field_equal = rep.chi_field == rep.mu_field;
    const Permutation t = Permutation::adjacent(m, 1);
    fill_stabilizer(rep, chi, mu, {{an_conj_perm(xc, extend(t, n)), an_conj_perm(uc, t)}});
    if (rep.multiplicity == 1 && rep.stabilizer_equal) rep.sufficient = Sufficient::MultOne;
    rep.note = "case (c); " + rep.note;
    return rep;
}

}  // namespace

PairReport an_pair_check(const Partition& lam, std::int64_t wreath_limit) {
    if (conjugate(lam) != lam) throw Error("an_pair_check: " + lam.to_string() + " is not symmetric");
    const int n = lam.n();
    if (n < 3) throw Error("an_pair_check: n must be at least 3");
    const auto hooks = diagonal_hooks(lam);
    const int s = static_cast<int>(hooks.size());
    if (s == 1) {
        if (is_prime(n)) return an_hook_prime(n);
        for (int d = 3; d * d <= n; d += 2)
            if (n % d == 0) return an_hook_wreath(lam, wreath_limit);
        throw Error("an_pair_check: hook of composite " + std::to_string(n) + " has no odd factorization");
    }
    std::vector<int> a;
    for (int i = 0; i < lam.length(); ++i) a.push_back(i < s - 1 ? lam[i] : std::min(lam[i], s - 1));
    const Partition alpha = Partition::from_parts(a);
    const int k = hooks.back();
    if (k == 1) return an_case_c(lam, alpha);
    return an_case_b(lam, alpha, symmetric_hook(k));
}

// ---------------------------------------------------------------------------
// Spin characters

namespace {

Row conj_row(const Row& r, const CoverGroup& g, const CoverElement& t) {
    Perm p;
    for (int c = 0; c < g.num_classes(); ++c) p.push_back(g.conjugate_class(t, c));
    return permute_row(r, p);
}

Perm conj_perm(const CoverGroup& g, const CoverElement& t) {
    Perm p;
    for (int c = 0; c < g.num_classes(); ++c) p.push_back(g.conjugate_class(t, c));
    return p;
}

}  // namespace

PairReport spin_pair_witness(const Partition& lam, SplitSign sign) {
    const int n = lam.n();
    if (!lam.is_strict()) throw Error("spin_pair_witness: " + lam.to_string() + " is not strict");
    if (lam.length() < 2) throw Error("spin_pair_witness: " + lam.to_string() + " is basic; use the basic spin check");
    SpinLabel chi{SpinKind::CoverA, lam, Partition{}, lam.is_even() ? sign : SplitSign::None};
    if (lam.is_even() && sign == SplitSign::None) chi.sign = SplitSign::Plus;
    // First split lambda = mu + nu with |mu| != n/2.
    const int len = lam.length();
    Partition mu, nu;
    bool found = false;
    for (int mask = 1; mask < (1 << len) - 1 && !found; ++mask) {
        std::vector<int> a, b;
        for (int i = 0; i < len; ++i) (mask >> i & 1 ? a : b).push_back(lam[i]);
        mu = Partition(a);
        nu = Partition(b);
        found = 2 * mu.n() != n;
    }
    if (!found) throw Error("spin_pair_witness: no split of " + lam.to_string());
    const int m = mu.n();
    const CoverGroup& x = cover_group(n, 0, true);
    const CoverGroup& u = cover_group(m, n - m, true);
    const Row crow = spin_row(chi);

    PairReport rep;
    rep.group = x.name();
    rep.character = chi.to_string();
    rep.subgroup = u.name();
    SpinLabel eta;
    for (const auto& l : spin_labels(SpinKind::CoverAYoung, m, n - m)) {
        if (l.mu != mu || l.nu != nu) continue;
        eta = l;
        rep.multiplicity = spin_branch_mult_brute(chi, l);
        if (rep.multiplicity == 1) break;
    }
    rep.partner = eta.to_string();
    rep.checks.push_back({"m_not_half", 2 * m != n});
    rep.checks.push_back({"mult_closed_form", spin_branch_mult(chi, eta) == rep.multiplicity});
    const Row erow = spin_row(eta);
    rep.chi_field = conductor_of_set(crow);
    rep.mu_field = conductor_of_set(erow);
    rep.field_equal = rep.chi_field == rep.mu_field;
    rep.checks.push_back({"field_closed_form", spin_field(chi) == rep.chi_field && spin_field(eta) == rep.mu_field});

    const CoverElement t = u.odd_normalizer();
    const Row ct = conj_row(crow, x, t), et = conj_row(erow, u, t);
    const bool chi_ext = ct == crow, eta_ext = et == erow;
    const bool da = rep.chi_field.conductor == 1 && chi_ext && eta_ext;
    const bool db = rep.chi_field.degree() == 2 && !chi_ext && !eta_ext &&
                    same_set(galois_orbit_list(crow), {crow, ct}) && same_set(galois_orbit_list(erow), {erow, et});
    rep.checks.push_back({"dichotomy", da || db});
    rep.note = da ? "(a) rational, both extend" : db ? "(b) quadratic, neither extends" : "no dichotomy";
    fill_stabilizer(rep, crow, erow, {{conj_perm(x, t), conj_perm(u, t)}});
    if (rep.multiplicity == 1 && rep.stabilizer_equal) rep.sufficient = Sufficient::MultOne;
    return rep;
}

PairReport basic_spin_prime_check(std::int64_t p, SplitSign sign) {
    if (!is_prime(p) || p < 5) throw Error("basic_spin_prime_check: p must be a prime >= 5");
    if (sign == SplitSign::None) sign = SplitSign::Plus;
    const int n = static_cast<int>(p);
    const CoverGroup& x = cover_group(n, 0, true);
    const SpinCover& sc = x.cover();
    const std::int64_t r = primitive_root(p), e = (p - 1) / 2;
    CoverElement c{affine(p, 1, 1), false};
    if (sc.order(c) % 2 == 0) c.z = !c.z;
    const CoverElement g{affine(p, r * r % p, 0), false};
    const CoverElement gp{affine(p, r, 0), false};
    const std::int64_t og = sc.order(g);
    Metacyclic mg;
    mg.p = p;
    mg.r1 = r * r % p;
    if (og == e) {
        mg.e1 = e;
        mg.e2 = 2;
    } else {
        mg.e1 = 2 * e;
        mg.e2 = 1;
    }
    const auto mt = metacyclic_table(mg);
    auto element = [&](std::int64_t v, std::int64_t k1, std::int64_t k2) {
        CoverElement y = sc.mul(sc.pow(c, v), sc.pow(g, k1));
        if (k2) y = sc.mul(y, sc.central());
        return y;
    };
    PairReport rep;
    rep.group = x.name();
    rep.character = SpinLabel{SpinKind::CoverA, Partition{n}, Partition{}, sign}.to_string();
    rep.subgroup = "(Zx" + std::to_string(p) + ")." + std::to_string(e);
    rep.checks.push_back({"torus_relation", sc.conj(g, c) == sc.pow(c, r * r % p)});
    rep.checks.push_back({"lift_order", og == e || (og == 2 * e && sc.pow(g, e) == sc.central())});
    // Locate every element of U to transport conjugation by gp.
    std::map<std::pair<std::vector<int>, bool>, std::tuple<std::int64_t, std::int64_t, std::int64_t>> where;
    for (std::int64_t v = 0; v < p; ++v)
        for (std::int64_t a = 0; a < mg.e1; ++a)
            for (std::int64_t b = 0; b < mg.e2; ++b) {
                const auto y = element(v, a, b);
                where[{y.perm.images(), y.z}] = {v, a, b};
            }
    rep.checks.push_back({"subgroup_order", static_cast<std::int64_t>(where.size()) == mt.table.group_order});
    std::vector<int> fus;
    Perm up;
    for (const auto& cl : mt.classes) {
        const auto y = element(cl.v, cl.k1, cl.k2);
        fus.push_back(x.classify(y));
        const auto w = sc.conj(gp, y);
        const auto it = where.find({w.perm.images(), w.z});
        if (it == where.end()) throw Error("basic_spin_prime_check: U is not normalized");
        const auto [v, a, b] = it->second;
        up.push_back(mt.class_of(v, a, b));
    }
    const SpinLabel chi{SpinKind::CoverA, Partition{n}, Partition{}, sign};
    const Row crow = spin_row(chi);
    const int zc = og == e ? mt.class_of(0, 0, 1) : mt.class_of(0, e, 0);
    bool have = false;
    PairReport best;
    for (std::size_t i = 0; i < mt.chars.size(); ++i) {
        const Row& mu = mt.table.values[i];
        if (mu[0] != CycloNumber(e) || mu[static_cast<std::size_t>(zc)] != -mu[0]) continue;
        PairReport rr = rep;
        rr.partner = mt.table.char_labels[i];
        BucketSum s;
        for (std::size_t cl = 0; cl < mt.classes.size(); ++cl)
            s.add(crow[static_cast<std::size_t>(fus[cl])] * mu[cl].conj() * make_rational(mt.table.classes[cl].size));
        rr.multiplicity = to_mult(s.total() / make_rational(mt.table.group_order), rr.partner);
        rr.chi_field = conductor_of_set(crow);
        rr.mu_field = conductor_of_set(mu);
        rr.field_equal = rr.chi_field == rr.mu_field;
        rr.checks.push_back({"field_closed_form", rr.chi_field == quadratic_field((e % 2 ? -1 : 1) * p)});
        rr.checks.push_back({"central_match", crow[1] == -crow[0]});
        rr.checks.push_back({"outer_moves_chi", conj_row(crow, x, gp) != crow});
        fill_stabilizer(rr, crow, mu, {{conj_perm(x, gp), up}});
        if (rr.field_equal && rr.stabilizer_equal) rr.sufficient = Sufficient::InnerCentral;
        if (!have || (best.multiplicity == 0 && rr.multiplicity > 0)) {
            best = rr;
            have = true;
        }
    }
    if (!have) throw Error("basic_spin_prime_check: no faithful character of degree (p-1)/2");
    return best;
}

// ---------------------------------------------------------------------------
// SL_2(2^f)

Sl2Check sl2_even_pair_check(std::int64_t q) {
    if (q < 4 || q > 64 || (q & (q - 1)) != 0) throw Error("sl2_even_pair_check: q must be 4, 8, 16, 32 or 64");
    int f = 0;
    while ((std::int64_t{1} << f) < q) ++f;
    const std::int64_t h = q / 2;
    const CharacterTable t = sl2_even_table(q);
    Sl2Check out;
    out.q = q;
    out.decompositions = true;
    out.divisibility_equiv = true;
    for (int torus = 0; torus < 2; ++torus) {
        const std::int64_t nn = torus == 0 ? q - 1 : q + 1;
        const CharacterTable d = dihedral_table(nn);
        const int cc = static_cast<int>((nn - 1) / 2 + 1);
        std::vector<int> fus(static_cast<std::size_t>(d.num_classes()));
        for (int l = 1; l < cc; ++l) fus[static_cast<std::size_t>(l)] = torus == 0 ? sl2_class_a(q, l) : sl2_class_b(q, l);
        fus[static_cast<std::size_t>(cc)] = 1;
        // The field automorphism squares torus elements and fixes c.
        Perm ax(static_cast<std::size_t>(t.num_classes())), au(static_cast<std::size_t>(d.num_classes()));
        ax[0] = 0;
        ax[1] = 1;
        for (std::int64_t l = 1; l < h; ++l) ax[static_cast<std::size_t>(1 + l)] = sl2_class_a(q, 2 * l);
        for (std::int64_t m = 1; m <= h; ++m) ax[static_cast<std::size_t>(h + m)] = sl2_class_b(q, 2 * m);
        au[0] = 0;
        for (int l = 1; l < cc; ++l) au[static_cast<std::size_t>(l)] = dihedral_class_of_power(nn, 2 * l);
        au[static_cast<std::size_t>(cc)] = cc;

        auto restrict = [&](int chi) {
            Row r;
            for (int x : fus) r.push_back(t.value(chi, x));
            return r;
        };
        const std::int64_t top = torus == 0 ? h - 1 : h;
        for (std::int64_t i = 1; i <= top; ++i) {
            const int chi = torus == 0 ? sl2_char_chi(q, i) : sl2_char_theta(q, i);
            Row want(static_cast<std::size_t>(d.num_classes()));
            for (std::int64_t s = 1; s <= (nn - 1) / 2; ++s) {
                if (torus == 1 && s == i) continue;
                for (std::size_t x = 0; x < want.size(); ++x) want[x] += d.values[static_cast<std::size_t>(1 + s)][x];
            }
            for (std::size_t x = 0; x < want.size(); ++x) {
                if (torus == 0) want[x] += d.values[static_cast<std::size_t>(1 + i)][x] + d.values[0][x];
                else want[x] += d.values[1][x];
            }
            if (restrict(chi) != want) out.decompositions = false;

            const std::int64_t excl = nn / gcd64(3, nn);
            if (i % excl == 0) continue;
            const int mu = dihedral_class_of_power(nn, 2 * i) + 1;  // lambda_{2i} row
            PairReport rep;
            rep.group = t.name;
            rep.character = t.char_labels[static_cast<std::size_t>(chi)];
            rep.subgroup = d.name;
            rep.partner = d.char_labels[static_cast<std::size_t>(mu)] + " (2i=" + std::to_string(2 * i) + ")";
            rep.multiplicity = to_mult(inner_product(d, restrict(chi), d.row(mu)), rep.partner);
            rep.chi_field = conductor_of_set(t.row(chi));
            rep.mu_field = conductor_of_set(d.row(mu));
            rep.field_equal = rep.chi_field == rep.mu_field;
            fill_stabilizer(rep, t.row(chi), d.row(mu), {{ax, au}});
            // Divisibility conditions against the actual action of (alpha^s, sigma_k).
            bool equiv = true;
            for (int s = 0; s < f; ++s) {
                Perm px = closure({}, ax.size()).front(), pu = closure({}, au.size()).front();
                for (int j = 0; j < s; ++j) {
                    px = compose(ax, px);
                    pu = compose(au, pu);
                }
                for (std::int64_t k : units_mod(nn)) {
                    const std::int64_t e = (std::int64_t{1} << s) * k;
                    const bool c1 = (i * (e + 1)) % nn == 0 || (i * (e - 1)) % nn == 0;
                    const bool c2 = (2 * i * (e + 1)) % nn == 0 || (2 * i * (e - 1)) % nn == 0;
                    const bool fx = galois_row(permute_row(t.row(chi), px), k, nn) == t.row(chi);
                    const bool fu = galois_row(permute_row(d.row(mu), pu), k, nn) == d.row(mu);
                    equiv = equiv && c1 == c2 && c1 == fx && fx == fu;
                }
            }
            rep.checks.push_back({"divisibility", equiv});
            out.divisibility_equiv = out.divisibility_equiv && equiv;
            if (rep.multiplicity == 1 && rep.stabilizer_equal) rep.sufficient = Sufficient::MultOne;
            out.pairs.push_back(rep);
        }
    }
    return out;
}

}  // namespace spinfeit
