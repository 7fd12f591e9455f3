#include "spinfeit/spinchar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "spinfeit/numtheory.hpp"
#include "spinfeit/omega.hpp"

namespace spinfeit {

namespace {

SplitSign flip(SplitSign s) {
    if (s == SplitSign::Plus) return SplitSign::Minus;
    if (s == SplitSign::Minus) return SplitSign::Plus;
    return s;
}

int sign_int(SplitSign s) { return s == SplitSign::Minus ? -1 : 1; }

CycloNumber ipow(int k) { return root_of_unity(4, k); }

int half(int e) {
    if (e % 2 != 0) throw Error("spin value: odd exponent of 2");
    return e / 2;
}

std::int64_t minus_one_pow(int e) { return e % 2 == 0 ? 1 : -1; }

bool is_zero_row(const std::vector<CycloNumber>& r) {
    for (const auto& v : r)
        if (!v.is_zero()) return false;
    return true;
}

}  // namespace

bool is_young(SpinKind k) { return k == SpinKind::CoverSYoung || k == SpinKind::CoverAYoung; }
bool is_alternating(SpinKind k) { return k == SpinKind::CoverA || k == SpinKind::CoverAYoung; }

bool SpinLabel::even() const { return (n() - mu.length() - nu.length()) % 2 == 0; }

std::string SpinLabel::to_string() const {
    std::string s = is_alternating(kind) ? "psi" : "phi";
    s += mu.to_string();
    if (is_young(kind)) s += "x" + nu.to_string();
    if (sign == SplitSign::Plus) s += "+";
    if (sign == SplitSign::Minus) s += "-";
    return s;
}

Rational q_inner(const Partition& lam, const Partition& mu) {
    static std::mutex m;
    static std::map<std::pair<Partition, Partition>, Rational> cache;
    {
        std::lock_guard<std::mutex> g(m);
        auto it = cache.find({lam, mu});
        if (it != cache.end()) return it->second;
    }
    const Rational v = inner(schur_Q(lam), power_sum(mu));
    std::lock_guard<std::mutex> g(m);
    cache.emplace(std::make_pair(lam, mu), v);
    return v;
}

const CoverGroup& cover_group(int m, int k, bool alternating) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, bool>, std::unique_ptr<CoverGroup>> cache;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find({m, k, alternating});
        if (it != cache.end()) return *it->second;
    }
    auto grp = std::make_unique<CoverGroup>(m, k, alternating);
    std::lock_guard<std::mutex> g(mu);
    auto& slot = cache[{m, k, alternating}];
    if (!slot) slot = std::move(grp);
    return *slot;
}

CycloNumber phi_value(const Partition& lam, SplitSign sign, const Partition& mu, bool z) {
    if (lam.n() != mu.n()) throw Error("phi_value: size mismatch");
    if (!lam.is_strict()) throw Error("phi_value: shape must be strict");
    const int n = lam.n();
    const int dl = mu.length() - lam.length();
    CycloNumber v;
    if (lam.is_even()) {
        if (sign != SplitSign::None) throw Error("phi_value: even shape carries no sign");
        if (mu.all_odd()) v = CycloNumber(pow2(half(dl)) * q_inner(lam, mu));
    } else {
        if (sign == SplitSign::None) throw Error("phi_value: odd shape needs a sign");
        if (mu.all_odd())
            v = CycloNumber(pow2(half(dl - 1)) * q_inner(lam, mu));
        else if (mu == lam)
            v = ipow(half(n - lam.length() + 1)) * sqrt_int(z_value(lam) / 2) * make_rational(sign_int(sign));
    }
    return z ? -v : v;
}

CycloNumber psi_value(const Partition& lam, SplitSign sign, const Partition& mu, SplitSign assoc, bool z) {
    if (lam.n() != mu.n()) throw Error("psi_value: size mismatch");
    if (!lam.is_strict()) throw Error("psi_value: shape must be strict");
    const int n = lam.n();
    const int dl = mu.length() - lam.length();
    CycloNumber v;
    if (lam.is_even()) {
        if (sign == SplitSign::None) throw Error("psi_value: even shape needs a sign");
        if (mu.all_odd()) v = CycloNumber(pow2(half(dl - 2)) * q_inner(lam, mu));
        if (mu == lam) {
            // On the associate class the two characters trade places.
            const SplitSign s = assoc == SplitSign::Minus ? flip(sign) : sign;
            v += ipow(half(n - lam.length())) * sqrt_int(z_value(lam)) * make_rational(sign_int(s), 2);
        }
    } else {
        if (sign != SplitSign::None) throw Error("psi_value: odd shape carries no sign");
        if (mu.all_odd()) v = CycloNumber(pow2(half(dl - 1)) * q_inner(lam, mu));
    }
    return z ? -v : v;
}

const CoverGroup& label_group(const SpinLabel& label) {
    if (is_young(label.kind)) return cover_group(label.mu.n(), label.nu.n(), is_alternating(label.kind));
    return cover_group(label.mu.n(), 0, is_alternating(label.kind));
}

namespace {

CycloNumber phi_at(const Partition& lam, SplitSign sign, const CoverElement& x) {
    const CoverGroup& g = cover_group(lam.n(), 0, false);
    const CoverClass& c = g.classes()[static_cast<std::size_t>(g.classify(x))];
    return phi_value(lam, sign, c.alpha, c.z);
}

CycloNumber psi_at(const Partition& lam, SplitSign sign, const CoverElement& x) {
    const CoverGroup& g = cover_group(lam.n(), 0, true);
    const CoverClass& c = g.classes()[static_cast<std::size_t>(g.classify(x))];
    return psi_value(lam, sign, c.alpha, c.assoc, c.z);
}

CycloNumber full_value(const SpinLabel& label, const CoverClass& c) {
    if (is_alternating(label.kind)) return psi_value(label.mu, label.sign, c.alpha, c.assoc, c.z);
    return phi_value(label.mu, label.sign, c.alpha, c.z);
}

}  // namespace

CycloNumber young_cover_value(const SpinLabel& label, const CoverElement& x, const CoverElement& y) {
    if (!is_young(label.kind)) throw Error("young_cover_value: not a Young label");
    const Partition& mu = label.mu;
    const Partition& nu = label.nu;
    if (x.perm.size() != mu.n() || y.perm.size() != nu.n()) throw Error("young_cover_value: block size mismatch");
    const bool xe = x.perm.is_even();
    const bool ye = y.perm.is_even();
    const bool me = mu.is_even();
    const bool ne = nu.is_even();
    const SplitSign s = label.sign;
    const SplitSign P = SplitSign::Plus, M = SplitSign::Minus, N = SplitSign::None;
    if (label.kind == SpinKind::CoverSYoung) {
        if (me && ne) return phi_at(mu, N, x) * phi_at(nu, N, y);
        if (!me && !ne) {
            if (!(xe && ye)) return CycloNumber();
            return psi_at(mu, N, x) * psi_at(nu, N, y) * make_rational(2);
        }
        if (me) {
            if (!xe) return CycloNumber();
            return psi_at(mu, P, x) * phi_at(nu, s, y) + psi_at(mu, M, x) * phi_at(nu, flip(s), y);
        }
        if (!ye) return CycloNumber();
        return phi_at(mu, s, x) * psi_at(nu, P, y) + phi_at(mu, flip(s), x) * psi_at(nu, M, y);
    }
    if (xe != ye) throw Error("young_cover_value: element outside the alternating Young subgroup");
    if (me && ne) {
        if (!xe) return CycloNumber();
        return psi_at(mu, P, x) * psi_at(nu, s, y) + psi_at(mu, M, x) * psi_at(nu, flip(s), y);
    }
    if (!me && !ne) {
        if (xe) return psi_at(mu, N, x) * psi_at(nu, N, y);
        return ipow(1) * phi_at(mu, P, x) * phi_at(nu, P, y) * make_rational(sign_int(s));
    }
    if (!xe) return CycloNumber();
    if (me) return phi_at(mu, N, x) * psi_at(nu, N, y);
    return psi_at(mu, N, x) * phi_at(nu, N, y);
}

CycloNumber spin_value_at(const SpinLabel& label, const CoverElement& g) {
    const CoverGroup& grp = label_group(label);
    if (!is_young(label.kind)) return full_value(label, grp.classes()[static_cast<std::size_t>(grp.classify(g))]);
    const auto [x, y] = grp.decompose(g);
    return young_cover_value(label, x, y);
}

CycloNumber spin_value(const SpinLabel& label, int cls) {
    const CoverGroup& grp = label_group(label);
    const CoverClass& c = grp.classes().at(static_cast<std::size_t>(cls));
    if (!is_young(label.kind)) return full_value(label, c);
    const auto [x, y] = grp.decompose(c.rep);
    return young_cover_value(label, x, y);
}

std::vector<CycloNumber> spin_row(const SpinLabel& label) {
    const CoverGroup& grp = label_group(label);
    std::vector<CycloNumber> row;
    for (int c = 0; c < grp.num_classes(); ++c) row.push_back(spin_value(label, c));
    return row;
}

std::vector<SpinLabel> spin_labels(SpinKind kind, int m, int k) {
    std::vector<SpinLabel> out;
    const bool alt = is_alternating(kind);
    auto push = [&](SpinLabel l) {
        // With an even label, covers of A carry a sign; with an odd one, covers of S do.
        if (l.even() == alt) {
            l.sign = SplitSign::Plus;
            out.push_back(l);
            l.sign = SplitSign::Minus;
            out.push_back(l);
        } else {
            out.push_back(l);
        }
    };
    if (!is_young(kind)) {
        if (k != 0) throw Error("spin_labels: full kinds take a single size");
        for (const auto& lam : enumerate(m, PartitionFamily::Strict)) push({kind, lam, Partition{}, SplitSign::None});
    } else {
        if (k < 1) throw Error("spin_labels: Young kinds need two positive sizes");
        for (const auto& mu : enumerate(m, PartitionFamily::Strict))
            for (const auto& nu : enumerate(k, PartitionFamily::Strict)) push({kind, mu, nu, SplitSign::None});
    }
    if (m <= 1 || (is_young(kind) && k <= 1)) {
        std::vector<SpinLabel> kept;
        for (const auto& l : out)
            if (!is_zero_row(spin_row(l))) kept.push_back(l);
        out = std::move(kept);
    }
    return out;
}

FieldDescriptor spin_field(const SpinLabel& label) {
    const int n = label.n();
    const int ell = label.mu.length() + label.nu.length();
    const std::int64_t z = z_value(label.mu) * z_value(label.nu);
    const bool alt = is_alternating(label.kind);
    if (label.even()) {
        if (!alt) return FieldDescriptor{};
        return quadratic_field(minus_one_pow((n - ell) / 2) * z);
    }
    if (alt) return FieldDescriptor{};
    return quadratic_field(minus_one_pow((n - ell + 1) / 2) * z / 2);
}

int union_sign(const Partition& mu, const Partition& nu) {
    int inv = 0;
    for (int a : mu.parts())
        for (int b : nu.parts())
            if (a < b && (b - a) % 2 == 0) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::int64_t spin_branch_mult(const SpinLabel& chi, const SpinLabel& eta) {
    if (is_young(chi.kind) || !is_young(eta.kind) || is_alternating(chi.kind) != is_alternating(eta.kind))
        throw Error("spin_branch_mult: expects a full label and a Young label of the same kind");
    if (chi.n() != eta.n()) throw Error("spin_branch_mult: size mismatch");
    const Partition& lam = chi.mu;
    const bool lam_union = lam == disjoint_union(eta.mu, eta.nu);
    if (is_alternating(chi.kind)) {
        if (!lam_union) throw Error("spin_branch_mult: covers of A_n only have the closed form for lambda = mu + nu");
        if (!chi.even()) return 1;
        const bool same = chi.sign == eta.sign;
        return ((eta.mu.is_even() == (union_sign(eta.mu, eta.nu) == 1)) ? same : !same) ? 1 : 0;
    }
    const std::int64_t f = f_coeff(lam, eta.mu, eta.nu);
    if (f == 0) return 0;
    const int dl = eta.mu.length() + eta.nu.length() - lam.length();
    int e;
    if (chi.even())
        e = eta.even() ? dl : dl - 1;
    else if (eta.even())
        e = dl - 1;
    else {
        if (lam_union) return (chi.sign == eta.sign) == (union_sign(eta.mu, eta.nu) == 1) ? 1 : 0;
        e = dl - 2;
    }
    return to_int64(pow2(half(e)) * make_rational(f));
}

std::vector<int> fusion(const CoverGroup& h, const CoverGroup& g) {
    if (h.n() != g.n()) throw Error("fusion: groups act on different sets");
    std::vector<int> out;
    for (const auto& c : h.classes()) out.push_back(g.classify(c.rep));
    return out;
}

CycloNumber restriction_inner(const CoverGroup& h, const std::vector<int>& fus,
                              const std::vector<CycloNumber>& chi_on_g, const std::vector<CycloNumber>& eta_on_h) {
    BucketSum s;
    for (int c = 0; c < h.num_classes(); ++c) {
        const auto& x = chi_on_g[static_cast<std::size_t>(fus[static_cast<std::size_t>(c)])];
        const auto& y = eta_on_h[static_cast<std::size_t>(c)];
        if (x.is_zero() || y.is_zero()) continue;
        s.add(x * y.conj() * make_rational(h.classes()[static_cast<std::size_t>(c)].size));
    }
    return s.total() / make_rational(h.order());
}

std::int64_t spin_branch_mult_brute(const SpinLabel& chi, const SpinLabel& eta) {
    const CoverGroup& g = label_group(chi);
    const CoverGroup& h = label_group(eta);
    const CycloNumber v = restriction_inner(h, fusion(h, g), spin_row(chi), spin_row(eta));
    if (!v.is_rational() || !is_integer(v.rational_value()))
        throw Error("spin_branch_mult_brute: non-integral multiplicity");
    return to_int64(v.rational_value());
}

std::string CoverCharLabel::to_string() const {
    if (spin) return spin_label.to_string();
    return "chi" + ordinary.to_string();
}

std::vector<CoverCharLabel> cover_char_labels(const CoverGroup& g) {
    if (g.k() != 0) throw Error("cover_char_labels: only full covers have a table");
    std::vector<CoverCharLabel> out;
    if (g.alternating()) {
        for (const auto& a : an_char_labels(g.n())) out.push_back({false, {}, a});
    } else {
        for (const auto& lam : enumerate(g.n(), PartitionFamily::All)) out.push_back({false, {}, {lam, SplitSign::None}});
    }
    for (const auto& l : spin_labels(g.alternating() ? SpinKind::CoverA : SpinKind::CoverS, g.n()))
        out.push_back({true, l, {}});
    return out;
}

CharacterTable cover_table(const CoverGroup& g) {
    CharacterTable t;
    t.name = g.name();
    t.group_order = g.order();
    for (const auto& c : g.classes()) t.exponent = lcm64(t.exponent, c.order);
    const auto ps = prime_divisors(t.exponent);
    for (int i = 0; i < g.num_classes(); ++i) {
        const CoverClass& c = g.classes()[static_cast<std::size_t>(i)];
        ClassInfo ci;
        ci.size = c.size;
        ci.order = c.order;
        ci.label = c.label();
        for (std::int64_t p : ps) ci.power[p] = g.power_class(i, p);
        t.classes.push_back(std::move(ci));
    }
    for (const auto& l : cover_char_labels(g)) {
        t.char_labels.push_back(l.to_string());
        std::vector<CycloNumber> row;
        for (const auto& c : g.classes()) {
            if (l.spin)
                row.push_back(full_value(l.spin_label, c));
            else
                row.push_back(an_char_value(l.ordinary, AnClass{c.alpha, c.assoc, c.rep.perm}));
        }
        t.values.push_back(std::move(row));
    }
    return t;
}

CharacterTable full_table(SpinKind kind, int n) {
    if (is_young(kind)) throw Error("full_table: Young kinds have no full table here");
    return cover_table(cover_group(n, 0, kind == SpinKind::CoverA));
}

}  // namespace spinfeit
