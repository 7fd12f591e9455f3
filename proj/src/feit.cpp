#include "spinfeit/feit.hpp"

#include <algorithm>
#include <thread>

#include "spinfeit/numtheory.hpp"

namespace spinfeit {

std::int64_t char_conductor(const CharacterTable& t, int chi) { return conductor_of_set(t.row(chi)).conductor; }

std::vector<FeitVerdict> feit_check(const CharacterTable& t) {
    std::vector<FeitVerdict> out(static_cast<std::size_t>(t.num_chars()));
    auto work = [&](int lo, int step) {
        for (int i = lo; i < t.num_chars(); i += step) {
            FeitVerdict v;
            v.chi = i;
            v.conductor = char_conductor(t, i);
            for (int c = 0; c < t.num_classes(); ++c)
                if (t.classes[static_cast<std::size_t>(c)].order == v.conductor) {
                    v.witness = c;
                    break;
                }
            out[static_cast<std::size_t>(i)] = v;
        }
    };
    const int nt = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 8);
    if (nt == 1 || t.num_chars() < 8) {
        work(0, 1);
        return out;
    }
    std::vector<std::jthread> pool;
    for (int w = 0; w < nt; ++w) pool.emplace_back(work, w, nt);
    return out;
}

bool feit_holds(const std::vector<FeitVerdict>& v) {
    return std::all_of(v.begin(), v.end(), [](const FeitVerdict& f) { return f.witness.has_value(); });
}

std::vector<std::int64_t> cyclic_multiplicities(const CharacterTable& t, int chi, int cls) {
    const std::int64_t m = t.classes[static_cast<std::size_t>(cls)].order;
    std::vector<CycloNumber> vals;
    for (std::int64_t j = 0; j < m; ++j) vals.push_back(t.value(chi, t.power_class(cls, j)));
    std::vector<std::int64_t> out;
    for (std::int64_t a = 0; a < m; ++a) {
        BucketSum s;
        for (std::int64_t j = 0; j < m; ++j)
            s.add(vals[static_cast<std::size_t>(j)] * root_of_unity(m, mod_floor(-a * j, m)));
        const CycloNumber x = s.total() / make_rational(m);
        if (!x.is_rational() || !is_integer(x.rational_value()) || x.rational_value() < 0)
            throw ValidationError("multiplicity " + x.to_string() + " of lambda_" + std::to_string(a) +
                                      " in character " + std::to_string(chi) + " on class " + std::to_string(cls),
                                  cls);
        out.push_back(to_int64(x.rational_value()));
    }
    return out;
}

std::optional<CyclicWitness> conjecture_e_cyclic(const CharacterTable& t, int chi) {
    const std::int64_t c = char_conductor(t, chi);
    for (int cls = 0; cls < t.num_classes(); ++cls) {
        const std::int64_t m = t.classes[static_cast<std::size_t>(cls)].order;
        if (m % c != 0) continue;
        const auto mult = cyclic_multiplicities(t, chi, cls);
        for (std::int64_t a = 0; a < m; ++a)
            if (m / gcd64(a, m) == c && mult[static_cast<std::size_t>(a)] > 0)
                return CyclicWitness{cls, a, mult[static_cast<std::size_t>(a)]};
    }
    return std::nullopt;
}

std::set<std::int64_t> value_conductors(const CharacterTable& t, int chi) {
    std::set<std::int64_t> out;
    for (const auto& x : t.row(chi)) out.insert(conductor(x));
    return out;
}

std::int64_t additive_order(std::int64_t u, std::int64_t m) { return m / gcd64(mod_floor(u, m), m); }

bool roots_valid(std::int64_t m, std::int64_t u, std::int64_t v, std::int64_t k) {
    if (gcd64(k, additive_order(v, m)) != 1) return false;
    return additive_order(mod_floor(k * v + u, m), m) % additive_order(u, m) == 0;
}

namespace {

// The p-part: u, v in Z/q with q = p^f. Returns k prime to p.
std::int64_t roots_local(std::int64_t q, std::int64_t p, std::int64_t u, std::int64_t v) {
    if (additive_order(u + v, q) % additive_order(u, q) == 0) return 1;
    // Otherwise <u + v> is smaller than <u>, which forces v in <u>: v = t u.
    std::int64_t pa = 1;
    while (u % (pa * p) == 0) pa *= p;
    const std::int64_t qa = q / pa;
    const std::int64_t t = mod_floor((v / pa) * inverse_mod(u / pa, qa), qa);
    if (t % p == 0) return 1;
    return inverse_mod(t % p, p);  // kt + 1 = 2 mod p
}

}  // namespace

std::int64_t roots_witness(std::int64_t m, std::int64_t u, std::int64_t v) {
    if (m < 1 || m % 2 == 0) throw Error("roots_witness needs an odd group order, got " + std::to_string(m));
    u = mod_floor(u, m);
    v = mod_floor(v, m);
    std::int64_t k = 0, mod = 1;
    for (const auto& [p, e] : factorize(m)) {
        std::int64_t q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        const std::int64_t kp = roots_local(q, p, u % q, v % q);
        // k = kp mod q, k unchanged mod the previous moduli
        const std::int64_t s = mod_floor((kp - k) * inverse_mod(mod % q, q), q);
        k += mod * s;
        mod *= q;
    }
    if (k == 0) k = m;
    if (roots_valid(m, u, v, k)) return k;
    for (std::int64_t j = 1; j <= m; ++j)
        if (roots_valid(m, u, v, j)) return j;
    throw Error("no k for u=" + std::to_string(u) + " v=" + std::to_string(v) + " in Z/" + std::to_string(m));
}

}  // namespace spinfeit
