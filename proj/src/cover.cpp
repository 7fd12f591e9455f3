#include "spinfeit/cover.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "spinfeit/numtheory.hpp"

namespace spinfeit {

struct SpinCover::Vec {
    std::vector<std::int64_t> re, im;
    int scale = 0;  // true vector is this one divided by sqrt(2)^scale
};

namespace {

int popcount(unsigned v) { return __builtin_popcount(v); }

// i^p * (re + i im)
void mul_ipow(int p, std::int64_t& re, std::int64_t& im) {
    for (int t = 0; t < (p & 3); ++t) {
        const std::int64_t r = -im;
        im = re;
        re = r;
    }
}

}  // namespace

SpinCover::SpinCover(int n) : n_(n) {
    if (n < 1) throw Error("SpinCover: n must be positive");
    const int q = n / 2;
    dim_ = 1 << q;
    gtarget_.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(dim_)));
    gphase_.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(dim_)));
    for (int j = 1; j <= n; ++j) {
        for (int r = 0; r < dim_; ++r) {
            const unsigned ur = static_cast<unsigned>(r);
            int tgt = r;
            int ph = 0;
            if (j <= 2 * q) {
                const int qb = (j - 1) / 2;
                const unsigned low = ur & ((1u << qb) - 1u);
                ph = (popcount(low) % 2) * 2;
                tgt = r ^ (1 << qb);
                if (j % 2 == 0) ph += ((ur >> qb) & 1u) ? 3 : 1;  // Y: |0> -> i|1>, |1> -> -i|0>
            } else {
                ph = (popcount(ur) % 2) * 2;
            }
            gtarget_[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] = tgt;
            gphase_[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] = ph % 4;
        }
    }
}

SpinCover::Vec SpinCover::apply_word(const std::vector<int>& word) const {
    Vec v;
    v.re.assign(static_cast<std::size_t>(dim_), 0);
    v.im.assign(static_cast<std::size_t>(dim_), 0);
    v.re[0] = 1;
    std::vector<std::int64_t> nre(static_cast<std::size_t>(dim_)), nim(static_cast<std::size_t>(dim_));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int j = *it;
        if (j < 1 || j >= n_) throw Error("SpinCover: generator out of range");
        std::fill(nre.begin(), nre.end(), 0);
        std::fill(nim.begin(), nim.end(), 0);
        for (int g = 0; g < 2; ++g) {
            const auto& tg = gtarget_[static_cast<std::size_t>(j + g)];
            const auto& ph = gphase_[static_cast<std::size_t>(j + g)];
            // i * (gamma_j - gamma_{j+1}): phase +1 for gamma_j, +3 for gamma_{j+1}
            const int extra = g == 0 ? 1 : 3;
            for (int r = 0; r < dim_; ++r) {
                std::int64_t a = v.re[static_cast<std::size_t>(r)];
                std::int64_t b = v.im[static_cast<std::size_t>(r)];
                if (a == 0 && b == 0) continue;
                mul_ipow(ph[static_cast<std::size_t>(r)] + extra, a, b);
                nre[static_cast<std::size_t>(tg[static_cast<std::size_t>(r)])] += a;
                nim[static_cast<std::size_t>(tg[static_cast<std::size_t>(r)])] += b;
            }
        }
        std::swap(v.re, nre);
        std::swap(v.im, nim);
        ++v.scale;
        while (v.scale >= 2) {
            bool even = true;
            for (int r = 0; r < dim_ && even; ++r)
                even = v.re[static_cast<std::size_t>(r)] % 2 == 0 && v.im[static_cast<std::size_t>(r)] % 2 == 0;
            if (!even) break;
            for (int r = 0; r < dim_; ++r) {
                v.re[static_cast<std::size_t>(r)] /= 2;
                v.im[static_cast<std::size_t>(r)] /= 2;
            }
            v.scale -= 2;
        }
    }
    return v;
}

bool SpinCover::same_sign(const Vec& a, const Vec& b) const {
    if ((a.scale - b.scale) % 2 != 0) throw Error("SpinCover: words of different parity compared");
    const Vec& lo = a.scale <= b.scale ? a : b;
    const Vec& hi = a.scale <= b.scale ? b : a;
    const std::int64_t f = std::int64_t{1} << ((hi.scale - lo.scale) / 2);
    bool eq = true, neg = true;
    for (int r = 0; r < dim_; ++r) {
        const auto i = static_cast<std::size_t>(r);
        const std::int64_t lr = lo.re[i] * f, li = lo.im[i] * f;
        eq = eq && lr == hi.re[i] && li == hi.im[i];
        neg = neg && lr == -hi.re[i] && li == -hi.im[i];
    }
    if (eq == neg) throw Error("SpinCover: lifts of one permutation are not proportional");
    return eq;
}

CoverElement SpinCover::from_word(const std::vector<int>& word, int zcount) const {
    CoverElement e{Permutation::from_word(n_, word), false};
    const bool same = same_sign(apply_word(word), apply_word(reduced_word(e.perm)));
    e.z = ((zcount % 2 + 2) % 2 == 1) != !same;
    return e;
}

CoverElement SpinCover::mul(const CoverElement& a, const CoverElement& b) const {
    std::vector<int> w = reduced_word(a.perm);
    const auto wb = reduced_word(b.perm);
    w.insert(w.end(), wb.begin(), wb.end());
    return from_word(w, int(a.z) + int(b.z));
}

CoverElement SpinCover::inverse(const CoverElement& a) const {
    std::vector<int> w = reduced_word(a.perm);
    std::reverse(w.begin(), w.end());
    // s~_j^{-1} = z s~_j
    return from_word(w, int(a.z) + static_cast<int>(w.size()));
}

CoverElement SpinCover::pow(const CoverElement& a, std::int64_t k) const {
    if (k < 0) return pow(inverse(a), -k);
    CoverElement result = identity();
    CoverElement base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

CoverElement SpinCover::conj(const CoverElement& g, const CoverElement& x) const {
    return mul(mul(g, x), inverse(g));
}

std::int64_t SpinCover::order(const CoverElement& a) const {
    const std::int64_t o = a.perm.order();
    const CoverElement p = pow(a, o);
    if (p.z) return 2 * o;
    return o;
}

const SpinCover& spin_cover(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SpinCover>> cache;
    std::lock_guard<std::mutex> g(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<SpinCover>(n);
    return *slot;
}

std::string CoverClass::label() const {
    std::string s = (z && lift_split) ? "z" : "";
    s += alpha.to_string();
    if (!beta.empty()) s += "x" + beta.to_string();
    if (assoc == SplitSign::Plus) s += "+";
    if (assoc == SplitSign::Minus) s += "-";
    return s;
}

namespace {

Permutation restrict_block(const Permutation& p, int lo, int len) {
    std::vector<int> img(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) img[static_cast<std::size_t>(i)] = p(lo + i) - lo;
    return Permutation(std::move(img));
}

Permutation join_blocks(const Permutation& a, const Permutation& b) {
    std::vector<int> img = a.images();
    for (int v : b.images()) img.push_back(v + a.size());
    return Permutation(std::move(img));
}

std::vector<int> shifted(std::vector<int> w, int by) {
    for (int& j : w) j += by;
    return w;
}

}  // namespace

std::pair<Partition, Partition> CoverGroup::block_types(const Permutation& p) const {
    return {restrict_block(p, 0, m_).cycle_type(), restrict_block(p, m_, k_).cycle_type()};
}

Permutation CoverGroup::block_conjugator(const Permutation& from, const Permutation& to) const {
    const Permutation a = conjugator(restrict_block(from, 0, m_), restrict_block(to, 0, m_));
    const Permutation b = conjugator(restrict_block(from, m_, k_), restrict_block(to, m_, k_));
    return join_blocks(a, b);
}

CoverElement CoverGroup::odd_normalizer() const { return cover().generator(m_ >= 2 ? 1 : m_ + 1); }

CoverElement CoverGroup::embed_first(const CoverElement& x) const {
    return cover().from_word(reduced_word(x.perm), x.z ? 1 : 0);
}

CoverElement CoverGroup::embed_second(const CoverElement& y) const {
    if (k_ == 0) return cover().identity();
    return cover().from_word(shifted(reduced_word(y.perm), m_), y.z ? 1 : 0);
}

std::pair<CoverElement, CoverElement> CoverGroup::decompose(const CoverElement& g) const {
    const Permutation xp = restrict_block(g.perm, 0, m_);
    const Permutation yp = restrict_block(g.perm, m_, k_);
    CoverElement x{xp, false};
    CoverElement y{yp, false};
    const CoverElement h = cover().mul(embed_first(x), embed_second(y));
    x.z = h.z != g.z;
    return {x, y};
}

CoverGroup::CoverGroup(int m, int k, bool alternating) : m_(m), k_(k), alt_(alternating) {
    if (m < 1 || k < 0) throw Error("CoverGroup: block sizes must satisfy m >= 1, k >= 0");
    const std::int64_t hbar = factorial(m) * factorial(k) / ((alt_ && has_odd()) ? 2 : 1);
    order_ = 2 * hbar;
    const SpinCover& cov = cover();

    auto alphas = enumerate(m, PartitionFamily::All);
    auto betas = enumerate(k, PartitionFamily::All);
    std::reverse(alphas.begin(), alphas.end());
    std::reverse(betas.begin(), betas.end());
    const CoverElement t = has_odd() ? odd_normalizer() : cov.identity();

    for (const auto& alpha : alphas)
        for (const auto& beta : betas) {
            if (alt_ && (alpha.is_even() != beta.is_even())) continue;
            std::vector<int> word = canonical_word(alpha);
            const auto wb = shifted(canonical_word(beta), m);
            word.insert(word.end(), wb.begin(), wb.end());
            const CoverElement rep = cov.from_word(word);
            const Permutation sigma = rep.perm;

            // Centralizer of sigma in S_m x S_k: its cycles and swaps of equal cycles in a block.
            std::vector<Permutation> cent;
            for (int blk = 0; blk < 2; ++blk) {
                std::vector<std::vector<int>> cyc;
                for (auto& c : sigma.cycles())
                    if ((c[0] < m) == (blk == 0)) cyc.push_back(c);
                std::stable_sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    if (cyc[i].size() >= 2) cent.push_back(Permutation::cycle(n(), cyc[i]));
                    if (i + 1 < cyc.size() && cyc[i].size() == cyc[i + 1].size()) {
                        std::vector<int> img(static_cast<std::size_t>(n()));
                        for (int p = 0; p < n(); ++p) img[static_cast<std::size_t>(p)] = p;
                        for (std::size_t j = 0; j < cyc[i].size(); ++j) {
                            img[static_cast<std::size_t>(cyc[i][j])] = cyc[i + 1][j];
                            img[static_cast<std::size_t>(cyc[i + 1][j])] = cyc[i][j];
                        }
                        cent.emplace_back(std::move(img));
                    }
                }
            }
            bool all_even = true;
            for (const auto& c : cent) all_even = all_even && c.is_even();
            const bool hsplit = alt_ && has_odd() && all_even;

            const std::int64_t zz = z_value(alpha) * z_value(beta);
            std::int64_t hsize = factorial(m) * factorial(k) / zz;
            if (hsplit) hsize /= 2;

            std::vector<SplitSign> signs = hsplit ? std::vector<SplitSign>{SplitSign::Plus, SplitSign::Minus}
                                                  : std::vector<SplitSign>{SplitSign::None};
            for (SplitSign s : signs) {
                Base b;
                b.alpha = alpha;
                b.beta = beta;
                b.assoc = s;
                if (s == SplitSign::Minus) {
                    b.rep = cov.conj(t, rep);
                    b.sigma = b.rep.perm;
                    for (const auto& c : cent) b.centralizer.push_back(t.perm * c * t.perm.inverse());
                } else {
                    b.rep = rep;
                    b.sigma = sigma;
                    b.centralizer = cent;
                }
                // Generators of the centralizer inside H-bar (Schreier generators of the even part).
                std::vector<Permutation> gens;
                if (alt_) {
                    const Permutation* odd = nullptr;
                    for (const auto& c : b.centralizer)
                        if (!c.is_even()) {
                            odd = &c;
                            break;
                        }
                    for (const auto& c : b.centralizer) {
                        if (c.is_even()) {
                            gens.push_back(c);
                            if (odd) gens.push_back(*odd * c * odd->inverse());
                        } else {
                            gens.push_back(c * odd->inverse());
                            gens.push_back(*odd * c);
                        }
                    }
                } else {
                    gens = b.centralizer;
                }
                b.lift_split = true;
                for (const auto& c : gens)
                    if (cov.conj({c, false}, b.rep).z != b.rep.z) {
                        b.lift_split = false;
                        break;
                    }
                b.first_class = static_cast<int>(classes_.size());
                for (int zf = 0; zf < (b.lift_split ? 2 : 1); ++zf) {
                    CoverClass cc;
                    cc.alpha = alpha;
                    cc.beta = beta;
                    cc.assoc = s;
                    cc.z = zf == 1;
                    cc.lift_split = b.lift_split;
                    cc.size = b.lift_split ? hsize : 2 * hsize;
                    cc.rep = zf == 1 ? cov.mul(cov.central(), b.rep) : b.rep;
                    cc.order = cov.order(cc.rep);
                    classes_.push_back(std::move(cc));
                }
                bases_.push_back(std::move(b));
            }
        }
}

std::string CoverGroup::name() const {
    std::string s = alt_ ? "2.A" : "2.S";
    s += std::to_string(m_);
    if (k_ > 0) s += "," + std::to_string(k_);
    return s;
}

bool CoverGroup::contains(const CoverElement& g) const {
    if (g.perm.size() != n()) return false;
    for (int i = 0; i < n(); ++i)
        if ((i < m_) != (g.perm(i) < m_)) return false;
    return !alt_ || g.perm.is_even();
}

int CoverGroup::classify(const CoverElement& g) const {
    if (!contains(g)) throw Error("CoverGroup::classify: element not in " + name());
    const auto [a, b] = block_types(g.perm);
    const SpinCover& cov = cover();
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        const Base& base = bases_[i];
        if (base.alpha != a || base.beta != b) continue;
        const Base* use = &base;
        Permutation pi = block_conjugator(base.sigma, g.perm);
        if (base.assoc == SplitSign::Plus) {
            if (!pi.is_even()) {
                use = &bases_[i + 1];
                const Permutation tp = odd_normalizer().perm;
                pi = pi * tp.inverse();
            }
        } else if (alt_ && !pi.is_even()) {
            for (const auto& c : base.centralizer)
                if (!c.is_even()) {
                    pi = pi * c;
                    break;
                }
        }
        if (!use->lift_split) return use->first_class;
        const CoverElement y = cov.conj({pi, false}, use->rep);
        if (y.perm != g.perm) throw Error("CoverGroup::classify: conjugator mismatch");
        return use->first_class + (y.z == g.z ? 0 : 1);
    }
    throw Error("CoverGroup::classify: no class for element");
}

int CoverGroup::power_class(int cls, std::int64_t p) const {
    return classify(cover().pow(classes_[static_cast<std::size_t>(cls)].rep, p));
}

int CoverGroup::conjugate_class(const CoverElement& t, int cls) const {
    return classify(cover().conj(t, classes_[static_cast<std::size_t>(cls)].rep));
}

}  // namespace spinfeit
