#include "spinfeit/omega.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <vector>

#include "spinfeit/numtheory.hpp"

namespace spinfeit {

OmegaElement OmegaElement::power_sum_basis(const Partition& lam) {
    if (!lam.all_odd()) throw Error("power_sum: even part in " + lam.to_string());
    OmegaElement e(lam.n());
    e.coeffs_.emplace(lam, Rational(1));
    return e;
}

Rational OmegaElement::coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void OmegaElement::add_term(const Partition& lam, const Rational& c) {
    if (lam.n() != degree_) throw Error("OmegaElement: term of wrong degree");
    if (!lam.all_odd()) throw Error("OmegaElement: even part in " + lam.to_string());
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

OmegaElement& OmegaElement::operator+=(const OmegaElement& o) {
    if (o.degree_ != degree_) throw Error("OmegaElement: degree mismatch in sum");
    for (const auto& [lam, c] : o.coeffs_) add_term(lam, c);
    return *this;
}

OmegaElement& OmegaElement::operator-=(const OmegaElement& o) {
    if (o.degree_ != degree_) throw Error("OmegaElement: degree mismatch in difference");
    for (const auto& [lam, c] : o.coeffs_) add_term(lam, -c);
    return *this;
}

OmegaElement& OmegaElement::operator*=(const Rational& r) {
    if (r == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lam, c] : coeffs_) c *= r;
    return *this;
}

OmegaElement operator*(const OmegaElement& a, const OmegaElement& b) {
    OmegaElement out(a.degree() + b.degree());
    for (const auto& [la, ca] : a.coeffs())
        for (const auto& [lb, cb] : b.coeffs()) out.add_term(disjoint_union(la, lb), ca * cb);
    return out;
}

std::string OmegaElement::to_string(const std::string& symbol) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const Rational& c = it->second;
        std::string s = c.get_str();
        if (!first && c > 0) os << '+';
        if (c == 1)
            s = "";
        else if (c == -1)
            s = "-";
        else
            s += "*";
        os << s << symbol << it->first.to_string();
        first = false;
    }
    return os.str();
}

OmegaElement power_sum(const Partition& lam) { return OmegaElement::power_sum_basis(lam); }

namespace {

std::mutex g_q_mutex;
std::map<int, OmegaElement> g_q;
std::map<Partition, OmegaElement> g_Q;
std::map<int, std::vector<std::vector<Rational>>> g_Qinv;

}  // namespace

OmegaElement q_one_part(int n) {
    if (n < 0) throw Error("q_one_part: negative degree");
    {
        std::lock_guard<std::mutex> lock(g_q_mutex);
        auto it = g_q.find(n);
        if (it != g_q.end()) return it->second;
    }
    OmegaElement out(n);
    if (n == 0) {
        out = OmegaElement::unit();
    } else {
        // n q_n = sum_{r odd} 2 p_r q_{n-r}, from differentiating the exponential.
        for (int r = 1; r <= n; r += 2) out += power_sum(Partition{r}) * q_one_part(n - r) * Rational(2);
        out *= make_rational(1, n);
    }
    std::lock_guard<std::mutex> lock(g_q_mutex);
    g_q.emplace(n, out);
    return out;
}

OmegaElement q_product(const Partition& lam) {
    OmegaElement out = OmegaElement::unit();
    for (int a : lam.parts()) out = out * q_one_part(a);
    return out;
}

Rational inner(const OmegaElement& a, const OmegaElement& b) {
    if (a.degree() != b.degree()) throw Error("inner: degree mismatch");
    Rational s = 0;
    for (const auto& [lam, c] : a.coeffs()) {
        Rational d = b.coeff(lam);
        if (d == 0) continue;
        s += c * d * make_rational(z_value(lam)) * pow2(-lam.length());
    }
    return s;
}

namespace {

OmegaElement two_row(int a, int b) {
    if (b == 0) return q_one_part(a);
    OmegaElement out = q_one_part(a) * q_one_part(b);
    for (int i = 1; i <= b; ++i) {
        OmegaElement t = q_one_part(a + i) * q_one_part(b - i) * Rational(2);
        if (i % 2)
            out -= t;
        else
            out += t;
    }
    return out;
}

// Pfaffian of m restricted to rows, expanded along the first row.
OmegaElement pfaffian(const std::vector<int>& rows, const std::vector<std::vector<OmegaElement>>& m,
                      const std::vector<int>& parts) {
    if (rows.empty()) return OmegaElement::unit();
    int degree = 0;
    for (int r : rows) degree += parts[static_cast<std::size_t>(r)];
    OmegaElement out(degree);
    const int first = rows[0];
    for (std::size_t j = 1; j < rows.size(); ++j) {
        std::vector<int> rest;
        for (std::size_t k = 1; k < rows.size(); ++k)
            if (k != j) rest.push_back(rows[k]);
        OmegaElement term = m[static_cast<std::size_t>(first)][static_cast<std::size_t>(rows[j])] * pfaffian(rest, m, parts);
        if (j % 2)
            out += term;
        else
            out -= term;
    }
    return out;
}

}  // namespace

OmegaElement schur_Q(const Partition& lam) {
    if (!lam.is_strict()) throw Error("schur_Q: non-strict partition " + lam.to_string());
    {
        std::lock_guard<std::mutex> lock(g_q_mutex);
        auto it = g_Q.find(lam);
        if (it != g_Q.end()) return it->second;
    }
    std::vector<int> a = lam.parts();
    if (a.size() % 2) a.push_back(0);
    OmegaElement out(lam.n());
    if (a.empty()) {
        out = OmegaElement::unit();
    } else if (a.size() == 2) {
        out = two_row(a[0], a[1]);
    } else {
        std::vector<std::vector<OmegaElement>> m(a.size(), std::vector<OmegaElement>(a.size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) m[i][j] = two_row(a[i], a[j]);
        std::vector<int> rows;
        for (std::size_t i = 0; i < a.size(); ++i) rows.push_back(static_cast<int>(i));
        out = pfaffian(rows, m, a);
    }
    std::lock_guard<std::mutex> lock(g_q_mutex);
    g_Q.emplace(lam, out);
    return out;
}

Rational monomial_coeff(const OmegaElement& f, const Partition& mu) {
    Rational s = 0;
    for (const auto& [nu, c] : f.coeffs()) {
        // assignments of the parts of nu to variables filling mu exactly
        std::vector<int> rem = mu.parts();
        std::function<std::int64_t(int)> count = [&](int i) -> std::int64_t {
            if (i == nu.length()) {
                for (int r : rem)
                    if (r) return 0;
                return 1;
            }
            std::int64_t t = 0;
            for (auto& r : rem) {
                if (r < nu[i]) continue;
                r -= nu[i];
                t += count(i + 1);
                r += nu[i];
            }
            return t;
        };
        std::int64_t ways = count(0);
        if (ways) s += c * make_rational(ways);
    }
    return s;
}

std::int64_t kprime(const Partition& lam, const Partition& mu) {
    if (lam.n() != mu.n()) throw Error("kprime: size mismatch");
    Rational r = monomial_coeff(schur_Q(lam), mu);
    if (!is_integer(r) || r < 0) throw Error("kprime: non-integral coefficient");
    return to_int64(r);
}

std::int64_t kprime_tableaux(const Partition& lam, const Partition& mu) {
    if (lam.n() != mu.n()) throw Error("kprime_tableaux: size mismatch");
    if (!lam.is_strict()) throw Error("kprime_tableaux: non-strict shape");
    // Cells of the shifted diagram in reading order; letter 2k-1 is k', 2k is k.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = i; j < i + lam[i]; ++j) cells.emplace_back(i, j);
    std::map<std::pair<int, int>, int> filled;
    std::vector<int> rem = mu.parts();
    const int letters = mu.length();
    std::function<std::int64_t(std::size_t)> go = [&](std::size_t idx) -> std::int64_t {
        if (idx == cells.size()) return 1;
        auto [i, j] = cells[idx];
        int lo = 1;
        auto left = filled.find({i, j - 1});
        auto up = filled.find({i - 1, j});
        if (left != filled.end()) lo = std::max(lo, left->second);
        if (up != filled.end()) lo = std::max(lo, up->second);
        std::int64_t total = 0;
        for (int v = lo; v <= 2 * letters; ++v) {
            int k = (v + 1) / 2;
            bool primed = v % 2 == 1;
            if (rem[static_cast<std::size_t>(k - 1)] == 0) continue;
            if (primed && left != filled.end() && left->second == v) continue;
            if (!primed && up != filled.end() && up->second == v) continue;
            --rem[static_cast<std::size_t>(k - 1)];
            filled[{i, j}] = v;
            total += go(idx + 1);
            filled.erase({i, j});
            ++rem[static_cast<std::size_t>(k - 1)];
        }
        return total;
    };
    return go(0);
}

OmegaElement schur_Q_triangular(const Partition& lam) {
    if (!lam.is_strict()) throw Error("schur_Q_triangular: non-strict partition");
    // Q_mu = q_mu - sum_{lambda > mu} K'_{lambda,mu} 2^{-l(lambda)} Q_lambda, top down.
    std::map<Partition, OmegaElement> solved;
    for (const auto& mu : enumerate(lam.n(), PartitionFamily::Strict)) {
        OmegaElement q = q_product(mu);
        for (const auto& [big, qbig] : solved) {
            std::int64_t k = kprime_tableaux(big, mu);
            if (k) q -= qbig * (make_rational(k) * pow2(-big.length()));
        }
        std::int64_t diag = kprime_tableaux(mu, mu);
        q *= pow2(mu.length()) / make_rational(diag);
        solved.emplace(mu, q);
        if (mu == lam) return q;
    }
    throw Error("schur_Q_triangular: partition not reached");
}

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("singular system in basis change");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k == col || a[k][col] == 0) continue;
            Rational f = a[k][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[k][j] -= f * a[col][j];
                inv[k][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Solves f = sum_b c_b basis_b given the basis in p-coordinates.
std::map<Partition, Rational> solve_in_basis(const OmegaElement& f, const std::vector<Partition>& labels,
                                             const std::vector<OmegaElement>& basis,
                                             const std::vector<std::vector<Rational>>* cached_inv) {
    auto odd = enumerate(f.degree(), PartitionFamily::Odd);
    std::vector<std::vector<Rational>> inv;
    if (cached_inv) {
        inv = *cached_inv;
    } else {
        std::vector<std::vector<Rational>> m(labels.size(), std::vector<Rational>(odd.size()));
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < odd.size(); ++j) m[i][j] = basis[i].coeff(odd[j]);
        inv = invert(m);
    }
    // c = f M^{-1}
    std::map<Partition, Rational> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < odd.size(); ++j) {
            Rational fj = f.coeff(odd[j]);
            if (fj != 0) s += fj * inv[j][i];
        }
        if (s != 0) out.emplace(labels[i], s);
    }
    return out;
}

}  // namespace

std::map<Partition, Rational> expand_in_Q(const OmegaElement& f) {
    const int n = f.degree();
    auto strict = enumerate(n, PartitionFamily::Strict);
    std::vector<OmegaElement> basis;
    for (const auto& lam : strict) basis.push_back(schur_Q(lam));
    std::vector<std::vector<Rational>> inv;
    bool have = false;
    {
        std::lock_guard<std::mutex> lock(g_q_mutex);
        auto it = g_Qinv.find(n);
        if (it != g_Qinv.end()) {
            inv = it->second;
            have = true;
        }
    }
    if (!have) {
        auto odd = enumerate(n, PartitionFamily::Odd);
        std::vector<std::vector<Rational>> m(strict.size(), std::vector<Rational>(odd.size()));
        for (std::size_t i = 0; i < strict.size(); ++i)
            for (std::size_t j = 0; j < odd.size(); ++j) m[i][j] = basis[i].coeff(odd[j]);
        inv = invert(m);
        std::lock_guard<std::mutex> lock(g_q_mutex);
        g_Qinv.emplace(n, inv);
    }
    return solve_in_basis(f, strict, basis, &inv);
}

std::map<Partition, Rational> expand_in_q(const OmegaElement& f) {
    auto odd = enumerate(f.degree(), PartitionFamily::Odd);
    std::vector<OmegaElement> basis;
    for (const auto& lam : odd) basis.push_back(q_product(lam));
    return solve_in_basis(f, odd, basis, nullptr);
}

std::int64_t f_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!lam.is_strict() || !mu.is_strict() || !nu.is_strict()) throw Error("f_coeff: partitions must be strict");
    if (lam.n() != mu.n() + nu.n()) throw Error("f_coeff: size mismatch");
    auto c = expand_in_Q(schur_Q(mu) * schur_Q(nu));
    auto it = c.find(lam);
    if (it == c.end()) return 0;
    Rational f = it->second * pow2(lam.length() - mu.length() - nu.length());
    if (!is_integer(f) || f < 0) throw Error("f_coeff: non-integral structure constant " + f.get_str());
    return to_int64(f);
}

}  // namespace spinfeit
