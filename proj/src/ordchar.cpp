#include "spinfeit/ordchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "spinfeit/numtheory.hpp"

namespace spinfeit {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex mn_mutex;
std::map<Key, std::int64_t> mn_cache;

// mu given as parts in any order; hooks are removed from the front.
std::int64_t mn(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t from) {
    if (from == mu.size()) return lam.empty() ? 1 : 0;
    Key key{lam, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(from), mu.end())};
    {
        std::lock_guard<std::mutex> g(mn_mutex);
        auto it = mn_cache.find(key);
        if (it != mn_cache.end()) return it->second;
    }
    const int r = mu[from];
    const int len = static_cast<int>(lam.size());
    std::vector<int> beta(lam.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (len - 1 - i);
    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int nb = b - r;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int c : beta)
            if (c > nb && c < b) ++between;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nl;
        for (int j = 0; j < len; ++j) {
            const int part = nbeta[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        const std::int64_t sub = mn(nl, mu, from + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> g(mn_mutex);
    mn_cache.emplace(std::move(key), total);
    return total;
}

std::int64_t parts_product(const Partition& p) {
    std::int64_t r = 1;
    for (int a : p.parts()) r *= a;
    return r;
}

std::string sign_suffix(SplitSign s) {
    switch (s) {
        case SplitSign::Plus: return "+";
        case SplitSign::Minus: return "-";
        default: return "";
    }
}

struct AnData {
    std::vector<AnClass> classes;
    std::map<std::pair<Partition, SplitSign>, int> index;
};

std::mutex an_mutex;
std::map<int, AnData> an_cache;

const AnData& an_data(int n) {
    std::lock_guard<std::mutex> g(an_mutex);
    auto it = an_cache.find(n);
    if (it != an_cache.end()) return it->second;
    AnData d;
    auto types = enumerate(n, PartitionFamily::All);
    std::reverse(types.begin(), types.end());
    for (const auto& mu : types) {
        if (!mu.is_even()) continue;
        const Permutation c = canonical_perm(mu);
        if (an_class_splits(mu)) {
            const Permutation s1 = Permutation::adjacent(n, 1);
            d.classes.push_back({mu, SplitSign::Plus, c});
            d.classes.push_back({mu, SplitSign::Minus, s1 * c * s1});
        } else {
            d.classes.push_back({mu, SplitSign::None, c});
        }
    }
    for (std::size_t i = 0; i < d.classes.size(); ++i)
        d.index[{d.classes[i].cycle_type, d.classes[i].sign}] = static_cast<int>(i);
    return an_cache.emplace(n, std::move(d)).first->second;
}

}  // namespace

std::int64_t sn_char_value(const Partition& lam, const Partition& mu) {
    if (lam.n() != mu.n()) throw Error("sn_char_value: size mismatch");
    return mn(lam.parts(), mu.parts(), 0);
}

Partition power_cycle_type(const Partition& mu, std::int64_t p) {
    std::vector<int> out;
    for (int a : mu.parts()) {
        const int g = static_cast<int>(gcd64(a, p));
        for (int i = 0; i < g; ++i) out.push_back(a / g);
    }
    return Partition::from_parts(std::move(out));
}

CharacterTable sn_table(int n) {
    if (n < 1) throw Error("sn_table: n must be positive");
    const auto lams = enumerate(n, PartitionFamily::All);
    auto mus = lams;
    std::reverse(mus.begin(), mus.end());
    std::map<Partition, int> idx;
    for (std::size_t i = 0; i < mus.size(); ++i) idx[mus[i]] = static_cast<int>(i);

    CharacterTable t;
    t.name = "S" + std::to_string(n);
    t.group_order = factorial(n);
    for (const auto& mu : mus) t.exponent = lcm64(t.exponent, lcm_of_parts(mu));
    const auto ps = prime_divisors(t.exponent);
    for (const auto& mu : mus) {
        ClassInfo ci;
        ci.size = t.group_order / z_value(mu);
        ci.order = lcm_of_parts(mu);
        ci.label = mu.to_string();
        for (std::int64_t p : ps) ci.power[p] = idx.at(power_cycle_type(mu, p));
        t.classes.push_back(std::move(ci));
    }
    for (const auto& lam : lams) {
        t.char_labels.push_back(lam.to_string());
        std::vector<CycloNumber> row;
        for (const auto& mu : mus) row.emplace_back(sn_char_value(lam, mu));
        t.values.push_back(std::move(row));
    }
    return t;
}

std::string AnCharLabel::to_string() const { return lam.to_string() + sign_suffix(sign); }
std::string AnClass::to_string() const { return cycle_type.to_string() + sign_suffix(sign); }

bool an_class_splits(const Partition& mu) { return mu.n() >= 2 && mu.is_strict() && mu.all_odd(); }

std::vector<AnClass> an_classes(int n) { return an_data(n).classes; }

int an_classify(const Permutation& g) {
    if (!g.is_even()) throw Error("an_classify: odd permutation");
    const AnData& d = an_data(g.size());
    const Partition mu = g.cycle_type();
    if (!an_class_splits(mu)) return d.index.at({mu, SplitSign::None});
    const Permutation pi = conjugator(canonical_perm(mu), g);
    return d.index.at({mu, pi.is_even() ? SplitSign::Plus : SplitSign::Minus});
}

std::vector<AnCharLabel> an_char_labels(int n) {
    std::vector<AnCharLabel> out;
    for (const auto& lam : enumerate(n, PartitionFamily::All)) {
        const Partition c = conjugate(lam);
        if (c == lam) {
            out.push_back({lam, SplitSign::Plus});
            out.push_back({lam, SplitSign::Minus});
        } else if (lam > c) {
            out.push_back({lam, SplitSign::None});
        }
    }
    return out;
}

CycloNumber an_char_value(const AnCharLabel& chi, const AnClass& cls) {
    const std::int64_t base = sn_char_value(chi.lam, cls.cycle_type);
    if (chi.sign == SplitSign::None) return CycloNumber(base);
    const auto hooks = diagonal_hooks(chi.lam);
    const Partition h{std::vector<int>(hooks.begin(), hooks.end())};
    if (cls.cycle_type != h) return CycloNumber(make_rational(base, 2));
    const int n = chi.lam.n();
    const int s = h.length();
    const std::int64_t eps = ((n - s) / 2) % 2 == 0 ? 1 : -1;
    CycloNumber root = sqrt_int(eps * parts_product(h));
    if ((chi.sign == SplitSign::Plus) != (cls.sign == SplitSign::Plus)) root = -root;
    return (CycloNumber(eps) + root) / make_rational(2);
}

CharacterTable an_table(int n) {
    if (n < 2) throw Error("an_table: n must be at least 2");
    const AnData& d = an_data(n);
    CharacterTable t;
    t.name = "A" + std::to_string(n);
    t.group_order = factorial(n) / 2;
    for (const auto& c : d.classes) t.exponent = lcm64(t.exponent, lcm_of_parts(c.cycle_type));
    const auto ps = prime_divisors(t.exponent);
    for (const auto& c : d.classes) {
        ClassInfo ci;
        const std::int64_t full = factorial(n) / z_value(c.cycle_type);
        ci.size = c.sign == SplitSign::None ? full : full / 2;
        ci.order = lcm_of_parts(c.cycle_type);
        ci.label = c.to_string();
        for (std::int64_t p : ps) ci.power[p] = an_classify(c.rep.pow(p));
        t.classes.push_back(std::move(ci));
    }
    for (const auto& chi : an_char_labels(n)) {
        t.char_labels.push_back(chi.to_string());
        std::vector<CycloNumber> row;
        for (const auto& c : d.classes) row.push_back(an_char_value(chi, c));
        t.values.push_back(std::move(row));
    }
    return t;
}

std::int64_t restrict_mult_young(const Partition& lam, int a, int b, const Partition& alpha, const Partition& beta) {
    if (a + b != lam.n() || alpha.n() != a || beta.n() != b) throw Error("restrict_mult_young: size mismatch");
    Rational s = 0;
    for (const auto& rho : enumerate(a, PartitionFamily::All))
        for (const auto& sig : enumerate(b, PartitionFamily::All)) {
            const std::int64_t v =
                sn_char_value(lam, disjoint_union(rho, sig)) * sn_char_value(alpha, rho) * sn_char_value(beta, sig);
            if (v != 0) s += make_rational(v, z_value(rho) * z_value(sig));
        }
    return to_int64(s);
}

std::vector<Partition> branch(const Partition& lam) {
    std::vector<Partition> out;
    for (auto& [row, p] : removable_cells(lam)) out.push_back(p);
    return out;
}

}  // namespace spinfeit
