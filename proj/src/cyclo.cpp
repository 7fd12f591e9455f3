#include "spinfeit/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace spinfeit {

namespace {

using IntPoly = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("cyclo: coefficient overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("cyclo: coefficient overflow");
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
    return r;
}

// Exact division by a monic polynomial.
IntPoly poly_div(IntPoly a, const IntPoly& b) {
    std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        std::int64_t c = a[k];
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = checked_add(a[k - db + j], -checked_mul(c, b[j]));
    }
    for (std::size_t k = 0; k < db; ++k)
        if (a[k] != 0) throw Error("cyclo: inexact polynomial division");
    return q;
}

IntPoly x_pow_minus_one(std::int64_t d) {
    IntPoly p(static_cast<std::size_t>(d + 1), 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    return p;
}

struct Context {
    std::int64_t n = 1;
    int phi = 1;
    IntPoly poly;
    // rows[j] = x^j mod Phi_n, dense of length phi; sparse[j] lists its nonzeros.
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::vector<std::pair<int, std::int64_t>>> sparse;
};

std::shared_ptr<const Context> build_context(std::int64_t n) {
    auto ctx = std::make_shared<Context>();
    ctx->n = n;
    ctx->poly = cyclotomic_polynomial(n);
    ctx->phi = static_cast<int>(ctx->poly.size() - 1);
    const int phi = ctx->phi;
    ctx->rows.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(phi), 0));
    ctx->rows[0][0] = 1;
    for (std::int64_t j = 1; j < n; ++j) {
        const auto& prev = ctx->rows[static_cast<std::size_t>(j - 1)];
        auto& cur = ctx->rows[static_cast<std::size_t>(j)];
        std::int64_t top = prev[static_cast<std::size_t>(phi - 1)];
        for (int i = phi - 1; i >= 1; --i) cur[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < phi; ++i)
                cur[static_cast<std::size_t>(i)] =
                    checked_add(cur[static_cast<std::size_t>(i)], -checked_mul(top, ctx->poly[static_cast<std::size_t>(i)]));
    }
    ctx->sparse.resize(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j)
        for (int i = 0; i < phi; ++i)
            if (ctx->rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0)
                ctx->sparse[static_cast<std::size_t>(j)].emplace_back(i, ctx->rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    return ctx;
}

std::mutex g_ctx_mutex;
std::map<std::int64_t, std::shared_ptr<const Context>> g_ctx;

std::shared_ptr<const Context> context(std::int64_t n) {
    if (n < 1) throw Error("cyclo: nonpositive order");
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    auto it = g_ctx.find(n);
    if (it != g_ctx.end()) return it->second;
    auto ctx = build_context(n);
    g_ctx.emplace(n, ctx);
    return ctx;
}

// Solver expressing elements of Q_c inside Q_n back in the Q_c basis.
struct Shrinker {
    std::vector<int> pivots;                 // coordinates of Q_n used
    std::vector<std::vector<Rational>> inv;  // phi(c) x phi(c)
};

std::mutex g_shrink_mutex;
std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const Shrinker>> g_shrink;

std::shared_ptr<const Shrinker> shrinker(std::int64_t n, std::int64_t c) {
    {
        std::lock_guard<std::mutex> lock(g_shrink_mutex);
        auto it = g_shrink.find({n, c});
        if (it != g_shrink.end()) return it->second;
    }
    auto big = context(n);
    auto small = context(c);
    const int pn = big->phi, pc = small->phi;
    const std::int64_t t = n / c;
    // cols[j] = image of z_c^j in Q_n coordinates
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(pc), std::vector<Rational>(static_cast<std::size_t>(pn)));
    for (int j = 0; j < pc; ++j)
        for (int i = 0; i < pn; ++i) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = big->rows[static_cast<std::size_t>(j * t)][static_cast<std::size_t>(i)];
    // Row-reduce a copy to pick pivot coordinates.
    auto work = a;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < pn && r < pc; ++col) {
        int piv = -1;
        for (int k = r; k < pc; ++k)
            if (work[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] != 0) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        std::swap(work[static_cast<std::size_t>(r)], work[static_cast<std::size_t>(piv)]);
        for (int k = 0; k < pc; ++k) {
            if (k == r || work[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] == 0) continue;
            Rational f = work[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] / work[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            for (int i = 0; i < pn; ++i) work[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] -= f * work[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
        }
        pivots.push_back(col);
        ++r;
    }
    if (r != pc) throw Error("cyclo: subfield basis is degenerate");
    // S[p][j] = a[j][pivots[p]]; invert S.
    std::vector<std::vector<Rational>> s(static_cast<std::size_t>(pc), std::vector<Rational>(static_cast<std::size_t>(2 * pc)));
    for (int p = 0; p < pc; ++p) {
        for (int j = 0; j < pc; ++j) s[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(p)])];
        s[static_cast<std::size_t>(p)][static_cast<std::size_t>(pc + p)] = 1;
    }
    for (int col = 0; col < pc; ++col) {
        int piv = col;
        while (s[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
        std::swap(s[static_cast<std::size_t>(col)], s[static_cast<std::size_t>(piv)]);
        Rational d = s[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (auto& v : s[static_cast<std::size_t>(col)]) v /= d;
        for (int k = 0; k < pc; ++k) {
            if (k == col || s[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] == 0) continue;
            Rational f = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)];
            for (int i = 0; i < 2 * pc; ++i) s[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] -= f * s[static_cast<std::size_t>(col)][static_cast<std::size_t>(i)];
        }
    }
    auto out = std::make_shared<Shrinker>();
    out->pivots = pivots;
    out->inv.assign(static_cast<std::size_t>(pc), std::vector<Rational>(static_cast<std::size_t>(pc)));
    for (int p = 0; p < pc; ++p)
        for (int j = 0; j < pc; ++j) out->inv[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(p)][static_cast<std::size_t>(pc + j)];
    std::lock_guard<std::mutex> lock(g_shrink_mutex);
    g_shrink.emplace(std::make_pair(n, c), out);
    return out;
}

std::vector<std::int64_t> stabilizer_mod(const std::vector<CycloNumber>& lifted, std::int64_t n) {
    std::vector<std::int64_t> h;
    for (std::int64_t k : units_mod(n)) {
        bool fixed = true;
        for (const auto& x : lifted) {
            if (x.is_rational()) continue;
            if (x.galois(k) != x) {
                fixed = false;
                break;
            }
        }
        if (fixed) h.push_back(k);
    }
    return h;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
    IntPoly num{1}, den{1};
    for (std::int64_t d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 1) num = poly_mul(num, x_pow_minus_one(d));
        if (mu == -1) den = poly_mul(den, x_pow_minus_one(d));
    }
    return poly_div(num, den);
}

CycloNumber::CycloNumber(const Rational& r) {
    if (r != 0) terms_.emplace_back(0, r);
}

CycloNumber CycloNumber::reduce(std::int64_t n, const std::map<std::int64_t, Rational>& byexp) {
    auto ctx = context(n);
    std::map<int, Rational> acc;
    for (const auto& [e, c] : byexp) {
        if (c == 0) continue;
        for (const auto& [i, v] : ctx->sparse[static_cast<std::size_t>(e)]) {
            auto [it, fresh] = acc.try_emplace(i);
            if (v == 1)
                it->second += c;
            else if (v == -1)
                it->second -= c;
            else
                it->second += c * Rational(mpz_class(std::to_string(v)));
        }
    }
    std::vector<std::pair<int, Rational>> terms;
    for (auto& [i, c] : acc)
        if (c != 0) terms.emplace_back(i, std::move(c));
    return CycloNumber(n, std::move(terms));
}

CycloNumber CycloNumber::from_terms(std::int64_t n, const std::vector<std::pair<std::int64_t, Rational>>& terms) {
    if (n < 1) throw Error("cyclo: nonpositive order");
    std::map<std::int64_t, Rational> byexp;
    for (const auto& [e, c] : terms) byexp[mod_floor(e, n)] += c;
    return reduce(n, byexp);
}

CycloNumber CycloNumber::root_of_unity(std::int64_t n, std::int64_t k) { return from_terms(n, {{k, Rational(1)}}); }

bool CycloNumber::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational CycloNumber::rational_value() const {
    if (!is_rational()) throw Error("cyclo: value is not rational");
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

CycloNumber CycloNumber::lift(std::int64_t m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw Error("cyclo: lift target is not a multiple of the order");
    if (is_rational()) {
        CycloNumber r = *this;
        r.order_ = m;
        return r;
    }
    std::int64_t t = m / order_;
    std::map<std::int64_t, Rational> byexp;
    for (const auto& [e, c] : terms_) byexp[e * t] += c;
    return reduce(m, byexp);
}

CycloNumber CycloNumber::galois(std::int64_t k) const {
    if (gcd64(mod_floor(k, order_), order_) != 1 && order_ > 1) throw Error("cyclo: galois exponent not coprime to order");
    if (is_rational()) return *this;
    std::map<std::int64_t, Rational> byexp;
    for (const auto& [e, c] : terms_) byexp[mod_floor(e * k, order_)] += c;
    return reduce(order_, byexp);
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

namespace {

std::vector<std::pair<int, Rational>> merge(const std::vector<std::pair<int, Rational>>& a,
                                            const std::vector<std::pair<int, Rational>>& b, int sign) {
    std::vector<std::pair<int, Rational>> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? Rational(b[j].second) : Rational(-b[j].second));
            ++j;
        } else {
            Rational s = sign > 0 ? Rational(a[i].second + b[j].second) : Rational(a[i].second - b[j].second);
            if (s != 0) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    if (o.is_rational() && is_rational()) {
        *this = CycloNumber(Rational(rational_value() + o.rational_value()));
        return *this;
    }
    std::int64_t n = lcm64(order_, o.order_);
    CycloNumber a = lift(n), b = o.lift(n);
    terms_ = merge(a.terms_, b.terms_, +1);
    order_ = n;
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= r;
    return *this;
}

CycloNumber& CycloNumber::operator/=(const Rational& r) {
    if (r == 0) throw Error("cyclo: division by zero");
    for (auto& [e, c] : terms_) c /= r;
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
    if (o.is_rational()) return *this *= o.rational_value();
    if (is_rational()) {
        Rational r = rational_value();
        *this = o;
        return *this *= r;
    }
    std::int64_t n = lcm64(order_, o.order_);
    CycloNumber a = lift(n), b = o.lift(n);
    std::map<std::int64_t, Rational> byexp;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) byexp[(ea + eb) % n] += ca * cb;
    *this = reduce(n, byexp);
    return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    std::int64_t n = lcm64(a.order_, b.order_);
    return a.lift(n).terms_ == b.lift(n).terms_;
}

CycloNumber CycloNumber::shrink() const {
    if (is_rational()) return CycloNumber(rational_value());
    std::int64_t c = spinfeit::conductor(*this);
    if (c == order_) return *this;
    auto sh = shrinker(order_, c);
    auto ctx = context(order_);
    std::vector<Rational> dense(static_cast<std::size_t>(ctx->phi));
    for (const auto& [e, v] : terms_) dense[static_cast<std::size_t>(e)] = v;
    std::vector<std::pair<int, Rational>> terms;
    for (std::size_t j = 0; j < sh->inv.size(); ++j) {
        Rational s = 0;
        for (std::size_t p = 0; p < sh->pivots.size(); ++p) s += sh->inv[j][p] * dense[static_cast<std::size_t>(sh->pivots[p])];
        if (s != 0) terms.emplace_back(static_cast<int>(j), s);
    }
    CycloNumber out(c, std::move(terms));
    if (out.lift(order_).terms_ != terms_) throw Error("cyclo: shrink failed to reproduce the value");
    return out;
}

std::string CycloNumber::to_string() const {
    CycloNumber s = shrink();
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.terms_) {
        std::string term;
        if (e == 0) {
            term = c.get_str();
        } else {
            std::string root = "E(" + std::to_string(s.order_) + ")^" + std::to_string(e);
            if (c == 1)
                term = root;
            else if (c == -1)
                term = "-" + root;
            else
                term = c.get_str() + "*" + root;
        }
        if (!first && term[0] != '-') os << '+';
        os << term;
        first = false;
    }
    return os.str();
}

std::complex<double> CycloNumber::approx() const {
    std::complex<double> s = 0;
    for (const auto& [e, c] : terms_)
        s += c.get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(order_));
    return s;
}

namespace {

// Contexts are dense (n x phi(n) entries); this bounds what one literal can allocate.
constexpr std::int64_t kMaxLiteralOrder = 2048;

struct LiteralParser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw LiteralError(msg, pos); }
    bool at_end() const { return pos >= s.size(); }
    char peek() const { return at_end() ? '\0' : s[pos]; }

    std::string digits() {
        std::size_t start = pos;
        while (!at_end() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (start == pos) fail("expected digits");
        if (pos - start > 18) {
            pos = start;
            fail("integer too long");
        }
        return s.substr(start, pos - start);
    }

    Rational coefficient() {
        std::string num = digits();
        if (peek() == '/') {
            ++pos;
            std::size_t at = pos;
            std::string den = digits();
            if (mpz_class(den) == 0) {
                pos = at;
                fail("zero denominator");
            }
            Rational r{mpz_class(num), mpz_class(den)};
            r.canonicalize();
            return r;
        }
        return Rational(mpz_class(num));
    }

    // Parses E(n)[^k]; returns (n, k).
    std::pair<std::int64_t, std::int64_t> root() {
        if (s.compare(pos, 2, "E(") != 0) fail("expected E(n)");
        pos += 2;
        std::size_t at = pos;
        std::int64_t n = std::stoll(digits());
        if (n < 1) {
            pos = at;
            fail("root order must be positive");
        }
        if (n > kMaxLiteralOrder) {
            pos = at;
            fail("root order too large");
        }
        if (peek() != ')') fail("expected ')'");
        ++pos;
        std::int64_t k = 1;
        if (peek() == '^') {
            ++pos;
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos;
            }
            k = std::stoll(digits());
            if (neg) k = -k;
        }
        return {n, mod_floor(k, n)};
    }

    CycloNumber parse() {
        if (s.empty()) fail("empty literal");
        std::vector<std::tuple<std::int64_t, std::int64_t, Rational>> terms;
        std::int64_t order = 1;
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Rational c = 1;
            std::int64_t n = 1, k = 0;
            if (peek() == 'E') {
                std::tie(n, k) = root();
            } else {
                c = coefficient();
                if (peek() == '*') {
                    ++pos;
                    std::tie(n, k) = root();
                }
            }
            if (sign < 0) c = -c;
            order = lcm64(order, n);
            if (order > kMaxLiteralOrder) fail("combined root order too large");
            terms.emplace_back(n, k, c);
            first = false;
        }
        std::vector<std::pair<std::int64_t, Rational>> flat;
        for (auto& [n, k, c] : terms) flat.emplace_back(k * (order / n), c);
        return CycloNumber::from_terms(order, flat);
    }
};

}  // namespace

CycloNumber CycloNumber::parse(const std::string& text) { return LiteralParser{text}.parse(); }

CycloNumber root_of_unity(std::int64_t n, std::int64_t k) { return CycloNumber::root_of_unity(n, k); }

CycloNumber galois(const CycloNumber& x, std::int64_t k) { return x.galois(k); }

CycloNumber sqrt_int(std::int64_t d) {
    if (d == 0) throw Error("sqrt_int: zero");
    std::int64_t s = 1, core = 1;
    for (auto [p, e] : factorize(d < 0 ? -d : d)) {
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) core *= p;
    }
    CycloNumber r(1);
    int t = 0;
    for (auto [p, e] : factorize(core)) {
        if (p == 2) {
            r *= CycloNumber::from_terms(8, {{1, Rational(1)}, {3, Rational(-1)}});
            continue;
        }
        std::vector<std::pair<std::int64_t, Rational>> g;
        for (std::int64_t k = 1; k < p; ++k) g.emplace_back(k, Rational(legendre(k, p)));
        r *= CycloNumber::from_terms(p, g);
        if (p % 4 == 3) ++t;
    }
    int e = static_cast<int>(mod_floor((d < 0 ? 1 : 0) - t, 4));
    if (e != 0) r *= root_of_unity(4, e);
    r *= make_rational(s);
    r = r.shrink();
    if (r * r != CycloNumber(d)) throw Error("sqrt_int: internal check failed");
    return r;
}

std::int64_t FieldDescriptor::degree() const {
    return euler_phi(conductor) / static_cast<std::int64_t>(stabilizer.size());
}

bool FieldDescriptor::contains_unit(std::int64_t k) const {
    std::int64_t r = conductor == 1 ? 0 : mod_floor(k, conductor);
    return std::binary_search(stabilizer.begin(), stabilizer.end(), r);
}

std::vector<std::int64_t> FieldDescriptor::generators() const {
    std::vector<std::int64_t> gens;
    std::vector<std::int64_t> span{conductor == 1 ? 0 : 1};
    for (std::int64_t k : stabilizer) {
        if (std::find(span.begin(), span.end(), k) != span.end()) continue;
        gens.push_back(k);
        // close span under multiplication by the generator set
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < span.size(); ++i)
                for (std::int64_t g : gens) {
                    std::int64_t v = mod_floor(span[i] * g, conductor);
                    if (std::find(span.begin(), span.end(), v) == span.end()) {
                        span.push_back(v);
                        grew = true;
                    }
                }
        }
    }
    return gens;
}

std::string FieldDescriptor::to_string() const {
    std::ostringstream os;
    os << "Q_" << conductor << "[";
    auto g = generators();
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << "]";
    return os.str();
}

FieldDescriptor conductor_of_set(const std::vector<CycloNumber>& values) {
    std::int64_t n = 1;
    for (const auto& v : values)
        if (!v.is_rational()) n = lcm64(n, v.order());
    FieldDescriptor fd;
    if (n == 1) return fd;
    std::vector<CycloNumber> lifted;
    for (const auto& v : values)
        if (!v.is_rational()) lifted.push_back(v.lift(n));
    auto h = stabilizer_mod(lifted, n);
    std::int64_t c = n;
    for (std::int64_t d : divisors(n)) {
        bool inside = true;
        for (std::int64_t k : units_mod(n)) {
            if (mod_floor(k, d) != mod_floor(1, d)) continue;
            if (!std::binary_search(h.begin(), h.end(), k)) {
                inside = false;
                break;
            }
        }
        if (inside) {
            c = d;
            break;
        }
    }
    fd.conductor = c;
    fd.stabilizer.clear();
    for (std::int64_t k : h) fd.stabilizer.push_back(c == 1 ? 0 : mod_floor(k, c));
    std::sort(fd.stabilizer.begin(), fd.stabilizer.end());
    fd.stabilizer.erase(std::unique(fd.stabilizer.begin(), fd.stabilizer.end()), fd.stabilizer.end());
    return fd;
}

std::int64_t conductor(const CycloNumber& x) { return conductor_of_set({x}).conductor; }

FieldDescriptor quadratic_field(std::int64_t d) { return conductor_of_set({sqrt_int(d)}); }

}  // namespace spinfeit
