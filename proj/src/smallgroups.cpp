#include "spinfeit/smallgroups.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "spinfeit/numtheory.hpp"

namespace spinfeit {

namespace {

std::int64_t exponent_of(const std::vector<ClassInfo>& cls) {
    std::int64_t e = 1;
    for (const auto& c : cls) e = lcm64(e, c.order);
    return e;
}

void fill_power_maps(std::vector<ClassInfo>& cls, const std::function<int(int, std::int64_t)>& pw) {
    const std::int64_t e = exponent_of(cls);
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::int64_t p : prime_divisors(e)) cls[i].power[p] = pw(static_cast<int>(i), p);
}

std::int64_t fold(std::int64_t l, std::int64_t n) {
    l = mod_floor(l, n);
    return std::min(l, n - l);
}

}  // namespace

CharacterTable cyclic_table(std::int64_t n) {
    if (n < 1) throw Error("cyclic_table: order must be positive");
    CharacterTable t;
    t.name = "C" + std::to_string(n);
    t.group_order = n;
    for (std::int64_t j = 0; j < n; ++j) {
        ClassInfo c;
        c.order = n / gcd64(j, n);
        c.label = "g^" + std::to_string(j);
        t.classes.push_back(c);
    }
    t.exponent = n;
    for (auto& c : t.classes) {
        const std::int64_t j = &c - t.classes.data();
        for (std::int64_t p : prime_divisors(n)) c.power[p] = static_cast<int>(mod_floor(j * p, n));
    }
    for (std::int64_t a = 0; a < n; ++a) {
        std::vector<CycloNumber> row;
        for (std::int64_t j = 0; j < n; ++j) row.push_back(root_of_unity(n, mod_floor(a * j, n)));
        t.values.push_back(std::move(row));
        t.char_labels.push_back("lambda_" + std::to_string(a));
    }
    return t;
}

std::int64_t Metacyclic::action(std::int64_t k1, std::int64_t k2) const {
    return mod_floor(pow_mod(r1, mod_floor(k1, e1), p) * pow_mod(r2, mod_floor(k2, e2), p), p);
}

std::vector<std::int64_t> Metacyclic::image() const {
    std::set<std::int64_t> h;
    for (std::int64_t a = 0; a < e1; ++a)
        for (std::int64_t b = 0; b < e2; ++b) h.insert(action(a, b));
    return {h.begin(), h.end()};
}

int MetacyclicTable::class_of(std::int64_t v, std::int64_t a, std::int64_t b) const {
    a = mod_floor(a, group.e1);
    b = mod_floor(b, group.e2);
    v = mod_floor(v, group.p);
    if (group.action(a, b) != 1) v = 0;
    else if (v != 0) v = orbit_rep[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        if (c.v == v && c.k1 == a && c.k2 == b) return static_cast<int>(i);
    }
    throw Error("metacyclic class lookup failed");
}

MetacyclicTable metacyclic_table(const Metacyclic& g) {
    if (!is_prime(g.p) || g.e1 < 1 || g.e2 < 1) throw Error("metacyclic_table: bad parameters");
    if (pow_mod(g.r1, g.e1, g.p) != 1 || pow_mod(g.r2, g.e2, g.p) != 1)
        throw Error("metacyclic_table: action is not a homomorphism");
    MetacyclicTable out;
    out.group = g;
    const auto h = g.image();
    const std::int64_t hs = static_cast<std::int64_t>(h.size());
    // H-orbit representatives on (Z/p)^x: least element of each coset.
    std::vector<std::int64_t> reps, orbit_rep(static_cast<std::size_t>(g.p), 0);
    for (std::int64_t v = 1; v < g.p; ++v) {
        if (orbit_rep[static_cast<std::size_t>(v)] != 0) continue;
        reps.push_back(v);
        for (std::int64_t s : h) orbit_rep[static_cast<std::size_t>(v * s % g.p)] = v;
    }
    auto kord = [&](std::int64_t k1, std::int64_t k2) { return lcm64(g.e1 / gcd64(k1, g.e1), g.e2 / gcd64(k2, g.e2)); };
    auto in_kernel = [&](std::int64_t k1, std::int64_t k2) { return g.action(k1, k2) == 1; };

    std::vector<ClassInfo> cls;
    auto add = [&](MetaClass mc, std::int64_t size, std::int64_t order, std::string label) {
        out.classes.push_back(mc);
        ClassInfo c;
        c.size = size;
        c.order = order;
        c.label = std::move(label);
        cls.push_back(c);
    };
    auto kname = [&](std::int64_t k1, std::int64_t k2) {
        return "k(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
    };
    // Central part first so that the identity is class 0.
    for (std::int64_t a = 0; a < g.e1; ++a)
        for (std::int64_t b = 0; b < g.e2; ++b)
            if (in_kernel(a, b)) add({0, a, b}, 1, kord(a, b), kname(a, b));
    for (std::int64_t a = 0; a < g.e1; ++a)
        for (std::int64_t b = 0; b < g.e2; ++b)
            if (in_kernel(a, b))
                for (std::int64_t v : reps)
                    add({v, a, b}, hs, lcm64(g.p, kord(a, b)), "x^" + std::to_string(v) + kname(a, b));
    for (std::int64_t a = 0; a < g.e1; ++a)
        for (std::int64_t b = 0; b < g.e2; ++b)
            if (!in_kernel(a, b)) add({0, a, b}, g.p, kord(a, b), kname(a, b));

    out.orbit_rep = orbit_rep;
    auto find = [&](std::int64_t v, std::int64_t a, std::int64_t b) { return out.class_of(v, a, b); };
    fill_power_maps(cls, [&](int i, std::int64_t q) {
        const auto& c = out.classes[static_cast<std::size_t>(i)];
        return find(c.v * q, c.k1 * q, c.k2 * q);
    });

    CharacterTable& t = out.table;
    t.name = "C" + std::to_string(g.p) + ":(" + std::to_string(g.e1) + "x" + std::to_string(g.e2) + ")";
    t.group_order = g.order();
    t.exponent = exponent_of(cls);
    t.classes = cls;
    auto lin = [&](std::int64_t a1, std::int64_t a2, std::int64_t k1, std::int64_t k2) {
        return root_of_unity(g.e1, mod_floor(a1 * k1, g.e1)) * root_of_unity(g.e2, mod_floor(a2 * k2, g.e2));
    };
    for (std::int64_t a1 = 0; a1 < g.e1; ++a1)
        for (std::int64_t a2 = 0; a2 < g.e2; ++a2) {
            out.chars.push_back({false, 0, a1, a2});
            std::vector<CycloNumber> row;
            for (const auto& c : out.classes) row.push_back(lin(a1, a2, c.k1, c.k2));
            t.values.push_back(std::move(row));
            t.char_labels.push_back("lin(" + std::to_string(a1) + "," + std::to_string(a2) + ")");
        }
    // Characters of K with distinct restrictions to Z0.
    std::vector<std::pair<std::int64_t, std::int64_t>> zchars;
    std::vector<std::vector<CycloNumber>> seen;
    for (std::int64_t a1 = 0; a1 < g.e1; ++a1)
        for (std::int64_t a2 = 0; a2 < g.e2; ++a2) {
            std::vector<CycloNumber> r;
            for (std::int64_t k1 = 0; k1 < g.e1; ++k1)
                for (std::int64_t k2 = 0; k2 < g.e2; ++k2)
                    if (in_kernel(k1, k2)) r.push_back(lin(a1, a2, k1, k2));
            if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
            seen.push_back(r);
            zchars.emplace_back(a1, a2);
        }
    for (const auto& [a1, a2] : zchars)
        for (std::int64_t u : reps) {
            out.chars.push_back({true, u, a1, a2});
            std::vector<CycloNumber> row;
            for (const auto& c : out.classes) {
                if (!in_kernel(c.k1, c.k2)) {
                    row.emplace_back();
                    continue;
                }
                CycloNumber s;
                for (std::int64_t x : h) s += root_of_unity(g.p, u * x % g.p * c.v % g.p);
                row.push_back(s * lin(a1, a2, c.k1, c.k2));
            }
            t.values.push_back(std::move(row));
            t.char_labels.push_back("ind(" + std::to_string(u) + ";" + std::to_string(a1) + "," +
                                    std::to_string(a2) + ")");
        }
    return out;
}

MetacyclicTable frobenius_half(std::int64_t p) {
    if (!is_prime(p) || p < 3) throw Error("frobenius_half: p must be an odd prime");
    const std::int64_t r = primitive_root(p);
    Metacyclic g;
    g.p = p;
    g.e1 = (p - 1) / 2;
    g.r1 = r * r % p;
    auto t = metacyclic_table(g);
    t.table.name = "C" + std::to_string(p) + ":C" + std::to_string(g.e1);
    return t;
}

int dihedral_class_of_power(std::int64_t n, std::int64_t l) {
    const std::int64_t f = fold(l, n);
    return static_cast<int>(f);  // identity is class 0 and a^l is class l
}

CharacterTable dihedral_table(std::int64_t n) {
    if (n < 3 || n % 2 == 0) throw Error("dihedral_table: N must be odd and >= 3");
    const std::int64_t h = (n - 1) / 2;
    CharacterTable t;
    t.name = "D" + std::to_string(2 * n);
    t.group_order = 2 * n;
    t.classes.push_back({1, 1, {}, "1"});
    for (std::int64_t l = 1; l <= h; ++l) t.classes.push_back({2, n / gcd64(l, n), {}, "a^" + std::to_string(l)});
    t.classes.push_back({n, 2, {}, "c"});
    const int cc = static_cast<int>(h + 1);
    fill_power_maps(t.classes, [&](int i, std::int64_t p) {
        if (i == cc) return p == 2 ? 0 : cc;
        return dihedral_class_of_power(n, i * p);
    });
    t.exponent = exponent_of(t.classes);
    std::vector<CycloNumber> one(t.classes.size(), CycloNumber(1)), sgn = one;
    sgn[static_cast<std::size_t>(cc)] = CycloNumber(-1);
    t.values = {one, sgn};
    t.char_labels = {"1", "sgn"};
    for (std::int64_t s = 1; s <= h; ++s) {
        std::vector<CycloNumber> row{CycloNumber(2)};
        for (std::int64_t l = 1; l <= h; ++l)
            row.push_back(root_of_unity(n, s * l % n) + root_of_unity(n, mod_floor(-s * l, n)));
        row.emplace_back();
        t.values.push_back(std::move(row));
        t.char_labels.push_back("lambda_" + std::to_string(s));
    }
    return t;
}

int sl2_class_a(std::int64_t q, std::int64_t l) {
    const std::int64_t f = fold(l, q - 1);
    return f == 0 ? 0 : static_cast<int>(1 + f);
}
int sl2_class_b(std::int64_t q, std::int64_t m) {
    const std::int64_t f = fold(m, q + 1);
    return f == 0 ? 0 : static_cast<int>(q / 2 + f);
}
int sl2_char_chi(std::int64_t q, std::int64_t i) {
    const std::int64_t f = fold(i, q - 1);
    if (f == 0) throw Error("sl2_char_chi: index 0 is not a character");
    return static_cast<int>(1 + f);
}
int sl2_char_theta(std::int64_t q, std::int64_t j) {
    const std::int64_t f = fold(j, q + 1);
    if (f == 0) throw Error("sl2_char_theta: index 0 is not a character");
    return static_cast<int>(q / 2 + f);
}

CharacterTable sl2_even_table(std::int64_t q) {
    if (q < 4 || (q & (q - 1)) != 0) throw Error("sl2_even_table: q must be a power of 2, at least 4");
    const std::int64_t h = q / 2;
    CharacterTable t;
    t.name = "SL2(" + std::to_string(q) + ")";
    t.group_order = q * (q * q - 1);
    t.classes.push_back({1, 1, {}, "1"});
    t.classes.push_back({q * q - 1, 2, {}, "c"});
    for (std::int64_t l = 1; l < h; ++l)
        t.classes.push_back({q * (q + 1), (q - 1) / gcd64(l, q - 1), {}, "a^" + std::to_string(l)});
    for (std::int64_t m = 1; m <= h; ++m)
        t.classes.push_back({q * (q - 1), (q + 1) / gcd64(m, q + 1), {}, "b^" + std::to_string(m)});
    fill_power_maps(t.classes, [&](int i, std::int64_t p) {
        if (i == 0) return 0;
        if (i == 1) return p == 2 ? 0 : 1;
        if (i < 1 + h) return sl2_class_a(q, (i - 1) * p);
        return sl2_class_b(q, (i - h) * p);
    });
    t.exponent = exponent_of(t.classes);
    auto cosine = [](std::int64_t n, std::int64_t e) {
        return root_of_unity(n, mod_floor(e, n)) + root_of_unity(n, mod_floor(-e, n));
    };
    const std::size_t nc = t.classes.size();
    t.values.emplace_back(nc, CycloNumber(1));
    t.char_labels.push_back("1");
    {
        std::vector<CycloNumber> st(nc);
        st[0] = CycloNumber(q);
        for (std::int64_t l = 1; l < h; ++l) st[static_cast<std::size_t>(1 + l)] = CycloNumber(1);
        for (std::int64_t m = 1; m <= h; ++m) st[static_cast<std::size_t>(h + m)] = CycloNumber(-1);
        t.values.push_back(st);
        t.char_labels.push_back("St");
    }
    for (std::int64_t i = 1; i < h; ++i) {
        std::vector<CycloNumber> r(nc);
        r[0] = CycloNumber(q + 1);
        r[1] = CycloNumber(1);
        for (std::int64_t l = 1; l < h; ++l) r[static_cast<std::size_t>(1 + l)] = cosine(q - 1, i * l);
        t.values.push_back(r);
        t.char_labels.push_back("chi_" + std::to_string(i));
    }
    for (std::int64_t j = 1; j <= h; ++j) {
        std::vector<CycloNumber> r(nc);
        r[0] = CycloNumber(q - 1);
        r[1] = CycloNumber(-1);
        for (std::int64_t m = 1; m <= h; ++m) r[static_cast<std::size_t>(h + m)] = -cosine(q + 1, j * m);
        t.values.push_back(r);
        t.char_labels.push_back("theta_" + std::to_string(j));
    }
    return t;
}

}  // namespace spinfeit
