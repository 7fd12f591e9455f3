#include "spinfeit/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "spinfeit/numtheory.hpp"

namespace spinfeit {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw Error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::from_parts(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t used = 0;
        int v = std::stoi(cur, &used);
        if (used != cur.size()) throw Error("Partition::parse: bad part '" + cur + "'");
        parts.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']') continue;
        if (c == ',' || c == ' ' || c == '\t') {
            flush();
            continue;
        }
        if (c < '0' || c > '9') throw Error(std::string("Partition::parse: unexpected character '") + c + "'");
        cur.push_back(c);
    }
    flush();
    return Partition(std::move(parts));
}

bool Partition::is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

bool Partition::all_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int a) { return a % 2 == 1; });
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

bool in_family(const Partition& p, PartitionFamily f) {
    switch (f) {
        case PartitionFamily::All: return true;
        case PartitionFamily::Odd: return p.all_odd();
        case PartitionFamily::Strict: return p.is_strict();
        case PartitionFamily::StrictEven: return p.is_strict() && p.is_even();
        case PartitionFamily::StrictOdd: return p.is_strict() && !p.is_even();
        case PartitionFamily::Even: return p.is_even();
    }
    return false;
}

namespace {

void gen(int remaining, int maxpart, std::vector<int>& cur, std::vector<Partition>& out, PartitionFamily f) {
    if (remaining == 0) {
        Partition p(cur);
        if (in_family(p, f)) out.push_back(std::move(p));
        return;
    }
    bool strict = f == PartitionFamily::Strict || f == PartitionFamily::StrictEven || f == PartitionFamily::StrictOdd;
    for (int a = std::min(remaining, maxpart); a >= 1; --a) {
        if (f == PartitionFamily::Odd && a % 2 == 0) continue;
        cur.push_back(a);
        gen(remaining - a, strict ? a - 1 : a, cur, out, f);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate(int n, PartitionFamily family) {
    if (n < 0) throw Error("enumerate: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out, family);
    return out;
}

std::int64_t z_value(const Partition& p) {
    if (p.n() > 20) throw Error("z_value: n too large for 64-bit z");
    std::map<int, int> mult;
    for (int a : p.parts()) ++mult[a];
    std::int64_t z = 1;
    for (auto [a, m] : mult) {
        z *= factorial(m);
        for (int i = 0; i < m; ++i) z *= a;
    }
    return z;
}

Partition conjugate(const Partition& p) {
    std::vector<int> c;
    for (int j = 1; j <= p.part(0); ++j) {
        int cnt = 0;
        for (int a : p.parts())
            if (a >= j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(std::move(c));
}

PartitionStats stats(const Partition& p) {
    Partition c = conjugate(p);
    bool sym = c == p;
    return PartitionStats{p.length(), z_value(p), p.is_even(), std::move(c), sym};
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.n() != mu.n()) throw Error("dominates: size mismatch");
    int a = 0, b = 0;
    for (int i = 0; i < std::max(lam.length(), mu.length()); ++i) {
        a += lam.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

Partition disjoint_union(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::from_parts(std::move(parts));
}

std::vector<int> diagonal_hooks(const Partition& p) {
    Partition c = conjugate(p);
    std::vector<int> out;
    for (int i = 0; i < p.length() && p[i] > i; ++i) out.push_back(p[i] - i + c[i] - i - 1);
    return out;
}

std::vector<std::pair<int, Partition>> removable_cells(const Partition& p) {
    if (p.empty()) throw Error("removable_cells: empty partition");
    std::vector<std::pair<int, Partition>> out;
    for (int i = 0; i < p.length(); ++i) {
        if (p[i] > p.part(i + 1)) {
            std::vector<int> q = p.parts();
            --q[static_cast<std::size_t>(i)];
            out.emplace_back(i + 1, Partition::from_parts(std::move(q)));
        }
    }
    return out;
}

std::int64_t lcm_of_parts(const Partition& p) {
    std::int64_t l = 1;
    for (int a : p.parts()) l = lcm64(l, a);
    return l;
}

std::int64_t hook_dimension(const Partition& p) {
    Partition c = conjugate(p);
    // n!/prod hooks, accumulated with exact division order: multiply first in 128 bits.
    __int128 num = 1;
    for (int k = 2; k <= p.n(); ++k) num *= k;
    __int128 den = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) den *= (p[i] - j - 1) + (c[j] - i - 1) + 1;
    return static_cast<std::int64_t>(num / den);
}

}  // namespace spinfeit
