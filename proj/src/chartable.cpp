#include "spinfeit/chartable.hpp"

#include <algorithm>
#include <sstream>

#include "spinfeit/numtheory.hpp"

namespace spinfeit {

namespace {

std::string cls_name(int c) { return "class " + std::to_string(c); }
std::string chr_name(int c) { return "char " + std::to_string(c); }

// Galois image of a value known to lie in Q(zeta_m) with gcd(k, m) = 1.
CycloNumber galois_in(const CycloNumber& x, std::int64_t k) {
    if (x.is_rational()) return x;
    const CycloNumber s = x.shrink();
    return s.galois(mod_floor(k, s.order()));
}

}  // namespace

void BucketSum::add(const CycloNumber& x) {
    if (x.is_zero()) return;
    auto it = buckets_.find(x.order());
    if (it == buckets_.end())
        buckets_.emplace(x.order(), x);
    else
        it->second += x;
}

CycloNumber BucketSum::total() const {
    CycloNumber s;
    for (const auto& [ord, v] : buckets_) s += v;
    return s;
}

std::vector<CycloNumber> CharacterTable::column(int cls) const {
    std::vector<CycloNumber> col;
    col.reserve(values.size());
    for (const auto& r : values) col.push_back(r[static_cast<std::size_t>(cls)]);
    return col;
}

std::vector<std::int64_t> CharacterTable::primes() const { return prime_divisors(exponent); }

int CharacterTable::power_class(int cls, std::int64_t k) const {
    const std::int64_t o = classes[static_cast<std::size_t>(cls)].order;
    k = mod_floor(k, o);
    if (k == 0) return 0;
    int c = cls;
    std::int64_t rest = 1;
    for (const auto& [p, e] : factorize(k)) {
        if (exponent % p != 0) {
            for (int i = 0; i < e; ++i) rest *= p;
            continue;
        }
        for (int i = 0; i < e; ++i) {
            auto it = classes[static_cast<std::size_t>(c)].power.find(p);
            if (it == classes[static_cast<std::size_t>(c)].power.end())
                throw ValidationError("missing power map pow" + std::to_string(p) + " on " + cls_name(c), c);
            c = it->second;
        }
    }
    if (rest == 1) return c;
    // rest is prime to the exponent, so g -> g^rest is a Galois twist of columns.
    const auto key = std::make_pair(c, mod_floor(rest, classes[static_cast<std::size_t>(c)].order));
    if (key.second == 1) return c;
    auto hit = galois_cache_.find(key);
    if (hit != galois_cache_.end()) return hit->second;
    std::vector<CycloNumber> want;
    for (const auto& r : values) want.push_back(galois_in(r[static_cast<std::size_t>(c)], key.second));
    for (int d = 0; d < num_classes(); ++d) {
        if (classes[static_cast<std::size_t>(d)].order != classes[static_cast<std::size_t>(c)].order) continue;
        bool same = true;
        for (int i = 0; i < num_chars() && same; ++i) same = value(i, d) == want[static_cast<std::size_t>(i)];
        if (same) {
            galois_cache_[key] = d;
            return d;
        }
    }
    throw ValidationError("no class matches the Galois image of " + cls_name(c), c);
}

bool CharacterTable::operator==(const CharacterTable& o) const {
    if (name != o.name || group_order != o.group_order || exponent != o.exponent) return false;
    if (char_labels != o.char_labels || values != o.values || classes.size() != o.classes.size()) return false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& a = classes[i];
        const auto& b = o.classes[i];
        if (a.size != b.size || a.order != b.order || a.power != b.power || a.label != b.label) return false;
    }
    return true;
}

CycloNumber inner_product(const CharacterTable& t, const std::vector<CycloNumber>& a,
                          const std::vector<CycloNumber>& b) {
    if (static_cast<int>(a.size()) != t.num_classes() || static_cast<int>(b.size()) != t.num_classes())
        throw Error("inner_product: class function has the wrong length");
    BucketSum s;
    for (int c = 0; c < t.num_classes(); ++c) {
        const auto& x = a[static_cast<std::size_t>(c)];
        const auto& y = b[static_cast<std::size_t>(c)];
        if (x.is_zero() || y.is_zero()) continue;
        s.add(x * y.conj() * make_rational(t.classes[static_cast<std::size_t>(c)].size));
    }
    return s.total() / make_rational(t.group_order);
}

void validate(const CharacterTable& t, const ValidationOptions& opt) {
    const int nc = t.num_classes();
    if (nc == 0) throw ValidationError("table has no classes");
    if (t.num_chars() != nc)
        throw ValidationError("table has " + std::to_string(t.num_chars()) + " characters but " +
                              std::to_string(nc) + " classes");
    if (static_cast<int>(t.char_labels.size()) != nc && !t.char_labels.empty())
        throw ValidationError("character label count differs from character count");
    for (int i = 0; i < nc; ++i)
        if (static_cast<int>(t.row(i).size()) != nc)
            throw ValidationError(chr_name(i) + " has " + std::to_string(t.row(i).size()) + " values, expected " +
                                      std::to_string(nc),
                                  i);
    if (t.group_order < 1) throw ValidationError("group order must be positive");
    const auto& c0 = t.classes[0];
    if (c0.size != 1 || c0.order != 1) throw ValidationError("class 0 must be the identity (size 1, order 1)", 0);

    std::int64_t sum = 0;
    std::int64_t ex = 1;
    for (int c = 0; c < nc; ++c) {
        const auto& ci = t.classes[static_cast<std::size_t>(c)];
        if (ci.size < 1 || t.group_order % ci.size != 0)
            throw ValidationError(cls_name(c) + ": size " + std::to_string(ci.size) + " does not divide the order", c);
        if (ci.order < 1) throw ValidationError(cls_name(c) + ": element order must be positive", c);
        sum += ci.size;
        ex = lcm64(ex, ci.order);
    }
    if (sum != t.group_order)
        throw ValidationError("class sizes sum to " + std::to_string(sum) + ", not the group order " +
                              std::to_string(t.group_order));
    if (ex != t.exponent)
        throw ValidationError("exponent " + std::to_string(t.exponent) + " differs from lcm of element orders " +
                              std::to_string(ex));
    for (int c = 0; c < nc; ++c)
        if (t.group_order % t.classes[static_cast<std::size_t>(c)].order != 0)
            throw ValidationError(cls_name(c) + ": element order does not divide the group order", c);

    const auto ps = t.primes();
    for (int c = 0; c < nc; ++c) {
        const auto& ci = t.classes[static_cast<std::size_t>(c)];
        for (const auto& [p, tgt] : ci.power)
            if (std::find(ps.begin(), ps.end(), p) == ps.end())
                throw ValidationError(cls_name(c) + ": pow" + std::to_string(p) + " for a prime not dividing the exponent", c);
        for (std::int64_t p : ps) {
            auto it = ci.power.find(p);
            if (it == ci.power.end())
                throw ValidationError(cls_name(c) + ": missing power map pow" + std::to_string(p), c);
            const int d = it->second;
            if (d < 0 || d >= nc)
                throw ValidationError(cls_name(c) + ": pow" + std::to_string(p) + " target out of range", c);
            const std::int64_t want = ci.order / gcd64(ci.order, p);
            if (t.classes[static_cast<std::size_t>(d)].order != want)
                throw ValidationError(cls_name(c) + ": pow" + std::to_string(p) + " lands on order " +
                                          std::to_string(t.classes[static_cast<std::size_t>(d)].order) +
                                          ", expected " + std::to_string(want),
                                      c);
        }
    }

    for (int i = 0; i < nc; ++i) {
        const auto& d = t.value(i, 0);
        if (!d.is_rational() || !is_integer(d.rational_value()) || d.rational_value() < 1)
            throw ValidationError(chr_name(i) + ": degree must be a positive integer", i);
    }

    if (opt.galois) {
        for (int c = 0; c < nc; ++c) {
            const auto& ci = t.classes[static_cast<std::size_t>(c)];
            for (int i = 0; i < nc; ++i) {
                const auto& v = t.value(i, c);
                if (!v.is_rational() && ci.order % v.shrink().order() != 0)
                    throw ValidationError(chr_name(i) + " at " + cls_name(c) +
                                              ": value does not lie in the cyclotomic field of the element order",
                                          c);
            }
            for (const auto& [p, d] : ci.power) {
                if (ci.order % p == 0) continue;
                for (int i = 0; i < nc; ++i)
                    if (t.value(i, d) != galois_in(t.value(i, c), p))
                        throw ValidationError(chr_name(i) + ": value at pow" + std::to_string(p) + " of " +
                                                  cls_name(c) + " is not the Galois image",
                                              c);
            }
        }
    }

    if (!opt.orthogonality) return;
    std::vector<std::vector<CycloNumber>> conj_rows(static_cast<std::size_t>(nc));
    for (int i = 0; i < nc; ++i)
        for (const auto& v : t.row(i)) conj_rows[static_cast<std::size_t>(i)].push_back(v.conj());
    for (int i = 0; i < nc; ++i) {
        for (int j = i; j < nc; ++j) {
            BucketSum s;
            for (int c = 0; c < nc; ++c) {
                const auto& x = t.value(i, c);
                const auto& y = conj_rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                if (x.is_zero() || y.is_zero()) continue;
                s.add(x * y * make_rational(t.classes[static_cast<std::size_t>(c)].size));
            }
            const CycloNumber want = i == j ? CycloNumber(t.group_order) : CycloNumber();
            if (s.total() != want)
                throw ValidationError("row orthogonality fails for chars " + std::to_string(i) + " and " +
                                          std::to_string(j),
                                      i);
        }
    }
    for (int c = 0; c < nc; ++c) {
        for (int d = c; d < nc; ++d) {
            BucketSum s;
            for (int i = 0; i < nc; ++i) {
                const auto& x = t.value(i, c);
                const auto& y = conj_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
                if (x.is_zero() || y.is_zero()) continue;
                s.add(x * y);
            }
            const auto sz = t.classes[static_cast<std::size_t>(c)].size;
            const CycloNumber want = c == d ? CycloNumber(make_rational(t.group_order, sz)) : CycloNumber();
            if (s.total() != want)
                throw ValidationError("column orthogonality fails for classes " + std::to_string(c) + " and " +
                                          std::to_string(d),
                                      c);
        }
    }
}

}  // namespace spinfeit
