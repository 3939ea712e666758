#include "spinrock/symmfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace spinrock {

int cache_limit()
{
    static const int limit = [] {
        if (const char* env = std::getenv("SPINROCK_CACHE_LIMIT"))
            return std::max(0, std::atoi(env));
        return 12;
    }();
    return limit;
}

namespace {

std::mutex cache_mutex;

/* Flat integer encodings of partition tuples used as cache keys. */
void encode(std::vector<int>& key, const Partition& p)
{
    key.insert(key.end(), p.parts.begin(), p.parts.end());
    key.push_back(-1);
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& nu, int strip)
{
    std::vector<Partition> out;
    int rows = nu.num_parts() + 1;
    std::vector<int> acc(static_cast<size_t>(rows), 0);
    // Choose the strip row by row from the top; row r may grow up to the
    // length of row r-1 of nu (row 1 is unbounded).
    std::function<void(int, int)> rec = [&](int r, int remaining) {
        if (r > rows) {
            if (remaining == 0)
                out.push_back(Partition(acc));
            return;
        }
        int lo = nu.part(r);
        int hi = (r == 1) ? lo + remaining : std::min(nu.part(r - 1), lo + remaining);
        for (int v = hi; v >= lo; --v) {
            acc[static_cast<size_t>(r - 1)] = v;
            rec(r + 1, remaining - (v - lo));
            acc[static_cast<size_t>(r - 1)] = 0;
        }
    };
    rec(1, strip);
    return out;
}

std::vector<Partition> partitions_between(const Partition& lower,
                                          const Partition& upper, int size)
{
    std::vector<Partition> out;
    int rows = upper.num_parts();
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int r, int remaining) {
        if (remaining == 0) {
            // Remaining rows must already be empty in `lower`.
            for (int s = r; s <= rows; ++s)
                if (lower.part(s) > 0)
                    return;
            out.push_back(Partition(acc));
            return;
        }
        if (r > rows)
            return;
        int prev = (r == 1) ? remaining : acc[static_cast<size_t>(r - 2)];
        int hi = std::min({upper.part(r), prev, remaining});
        for (int v = hi; v >= std::max(1, lower.part(r)); --v) {
            acc.push_back(v);
            rec(r + 1, remaining - v);
            acc.pop_back();
        }
    };
    if (size == 0) {
        if (lower.empty())
            out.push_back(Partition());
        return out;
    }
    rec(1, size);
    return out;
}

ll kostka_number(const Partition& shape, const std::vector<int>& content)
{
    int total = 0;
    for (int c : content) {
        if (c < 0)
            throw std::invalid_argument("kostka_number: negative content entry");
        total += c;
    }
    if (total != shape.size())
        return 0;

    static std::map<std::vector<int>, ll> cache;
    std::vector<int> key;
    encode(key, shape);
    for (int c : content)
        if (c > 0)
            key.push_back(c);
    bool use_cache = shape.size() <= cache_limit();
    if (use_cache) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    // SSYT of shape `shape` and given content = chains of horizontal strips.
    std::map<Partition, ll> layer = {{Partition(), 1}};
    for (int c : content) {
        if (c == 0)
            continue;
        std::map<Partition, ll> next;
        for (const auto& [nu, count] : layer)
            for (const Partition& pi : add_horizontal_strips(nu, c))
                if (contains(shape, pi))
                    next[pi] = checked_add(next[pi], count);
        layer = std::move(next);
    }
    ll result = 0;
    if (auto it = layer.find(shape); it != layer.end())
        result = it->second;

    if (use_cache) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(std::move(key), result);
    }
    return result;
}

ll lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu)
{
    if (lam.size() != mu.size() + nu.size() || !contains(lam, mu))
        return 0;
    if (nu.empty())
        return 1;

    static std::map<std::vector<int>, ll> cache;
    std::vector<int> key;
    encode(key, lam);
    encode(key, mu);
    encode(key, nu);
    bool use_cache = lam.size() <= cache_limit();
    if (use_cache) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    /* Count LR skew tableaux of shape lam/mu with content nu: rows weakly
     * increasing, columns strictly increasing, and the reverse reading word
     * (rows top to bottom, each right to left) a lattice word.  Cells are
     * filled in exactly that reading order so the lattice property can be
     * enforced incrementally. */
    int rows = lam.num_parts();
    int maxv = nu.num_parts();
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 1; r <= rows; ++r)
        fill[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(lam.part(r)), 0);
    std::vector<int> counts(static_cast<size_t>(maxv + 1), 0);

    std::vector<std::pair<int, int>> cells;  // reverse reading order
    for (int r = 1; r <= rows; ++r)
        for (int c = lam.part(r); c > mu.part(r); --c)
            cells.emplace_back(r, c);

    ll result = 0;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == cells.size()) {
            ++result;
            return;
        }
        auto [r, c] = cells[pos];
        int above = (r >= 2 && c <= lam.part(r - 1) && c > mu.part(r - 1))
                        ? fill[static_cast<size_t>(r - 2)][static_cast<size_t>(c - 1)]
                        : 0;
        int right = (c < lam.part(r))
                        ? fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)]
                        : maxv;
        for (int v = above + 1; v <= right; ++v) {
            if (counts[static_cast<size_t>(v)] >= nu.part(v))
                continue;  // content bound
            if (v >= 2 && counts[static_cast<size_t>(v)] + 1 >
                              counts[static_cast<size_t>(v - 1)])
                continue;  // lattice condition
            fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = v;
            ++counts[static_cast<size_t>(v)];
            rec(pos + 1);
            --counts[static_cast<size_t>(v)];
            fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = 0;
        }
    };
    rec(0);

    if (use_cache) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(std::move(key), result);
    }
    return result;
}

ll lr_multi(const Partition& lam, const std::vector<Partition>& factors)
{
    int total = 0;
    for (const Partition& f : factors)
        total += f.size();
    if (total != lam.size())
        return 0;
    std::map<Partition, ll> layer = {{Partition(), 1}};
    for (const Partition& f : factors) {
        if (f.empty())
            continue;
        std::map<Partition, ll> next;
        for (const auto& [nu, count] : layer)
            for (const Partition& pi :
                 partitions_between(nu, lam, nu.size() + f.size())) {
                ll c = lr_coeff(pi, nu, f);
                if (c != 0)
                    next[pi] = checked_add(next[pi], checked_mul(count, c));
            }
        layer = std::move(next);
    }
    auto it = layer.find(lam);
    return it == layer.end() ? 0 : it->second;
}

namespace {

/* Charge of a standard word (one occurrence of each of 1..m): the index of 1
 * is 0, and the index of r+1 is that of r, plus one exactly when r+1 lies
 * strictly to the right of r.  Charge is the sum of indices. */
int charge_standard(const std::vector<int>& pos)
{
    int total = 0, index = 0;
    for (size_t r = 1; r < pos.size(); ++r) {
        if (pos[r] > pos[r - 1])
            ++index;
        total += index;
    }
    return total;
}

}  // namespace

int charge(const std::vector<int>& word)
{
    std::vector<int> w = word;
    int total = 0;
    while (!w.empty()) {
        int maxv = *std::max_element(w.begin(), w.end());
        // Extract a standard subword: scanning right to left (cyclically),
        // pick the first 1, then the first 2 to its left, and so on.
        std::vector<size_t> chosen;
        size_t n = w.size();
        size_t start = n;  // scan begins just left of this index
        for (int v = 1; v <= maxv; ++v) {
            bool found = false;
            for (size_t step = 0; step < n; ++step) {
                size_t idx = (start + n - 1 - step) % n;
                if (w[idx] == v &&
                    std::find(chosen.begin(), chosen.end(), idx) == chosen.end()) {
                    chosen.push_back(idx);
                    start = idx;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw std::invalid_argument("charge: content is not a partition");
        }
        // pos[v-1] = rank of the position of letter v within the subword in
        // original word order.
        std::vector<size_t> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> pos(static_cast<size_t>(maxv));
        for (int v = 1; v <= maxv; ++v) {
            size_t idx = chosen[static_cast<size_t>(v - 1)];
            pos[static_cast<size_t>(v - 1)] = static_cast<int>(
                std::find(sorted.begin(), sorted.end(), idx) - sorted.begin());
        }
        total += charge_standard(pos);
        std::vector<int> rest;
        for (size_t i = 0; i < n; ++i)
            if (std::find(chosen.begin(), chosen.end(), i) == chosen.end())
                rest.push_back(w[i]);
        w = std::move(rest);
    }
    return total;
}

IntPolynomial kostka_foulkes(const Partition& sigma, const Partition& lam)
{
    IntPolynomial result;
    if (sigma.size() != lam.size())
        return result;
    /* Enumerate SSYT of shape sigma, content lam as chains of horizontal
     * strips (letter v occupies the v-th strip), reconstruct each tableau's
     * reading word (rows bottom to top, left to right) and take charges. */
    int rows = sigma.num_parts();
    std::vector<std::vector<int>> tab(static_cast<size_t>(rows));
    for (int r = 1; r <= rows; ++r)
        tab[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(sigma.part(r)), 0);
    int letters = lam.num_parts();
    std::function<void(int, const Partition&)> rec = [&](int v, const Partition& cur) {
        if (v > letters) {
            if (cur != sigma)
                return;
            std::vector<int> word;
            for (int r = rows; r >= 1; --r)
                for (int val : tab[static_cast<size_t>(r - 1)])
                    word.push_back(val);
            result.add_term(charge(word), 1);
            return;
        }
        for (const Partition& next : add_horizontal_strips(cur, lam.part(v))) {
            if (!contains(sigma, next))
                continue;
            for (int r = 1; r <= rows; ++r)
                for (int c = cur.part(r) + 1; c <= next.part(r); ++c)
                    tab[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = v;
            rec(v + 1, next);
            for (int r = 1; r <= rows; ++r)
                for (int c = cur.part(r) + 1; c <= next.part(r); ++c)
                    tab[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = 0;
        }
    };
    rec(1, Partition());
    return result;
}

namespace {

/* Per-size inverse Kostka block: partitions of n in canonical order (which
 * refines dominance), the unitriangular K-matrix and its inverse. */
struct KostkaBlock {
    std::vector<Partition> order;
    std::map<Partition, size_t> index;
    std::vector<std::vector<IntPolynomial>> kinv;
};

const KostkaBlock& kostka_block(int n)
{
    static std::map<int, KostkaBlock> blocks;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = blocks.find(n);
    if (it != blocks.end())
        return it->second;

    KostkaBlock blk;
    blk.order = enumerate_partitions(n);
    size_t m = blk.order.size();
    for (size_t i = 0; i < m; ++i)
        blk.index[blk.order[i]] = i;

    // K[a][b] = K_{order[a], order[b]}(t); upper triangular, unit diagonal.
    std::vector<std::vector<IntPolynomial>> K(m, std::vector<IntPolynomial>(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a; b < m; ++b)
            if (dominates(blk.order[a], blk.order[b]))
                K[a][b] = kostka_foulkes(blk.order[a], blk.order[b]);

    // Back-substitution: M[a][b] = delta_ab - sum_{c>a} K[a][c] M[c][b].
    blk.kinv.assign(m, std::vector<IntPolynomial>(m));
    for (size_t b = 0; b < m; ++b) {
        blk.kinv[b][b] = IntPolynomial::constant(1);
        for (size_t a = b; a-- > 0;) {
            IntPolynomial acc;
            for (size_t c = a + 1; c <= b; ++c)
                if (!K[a][c].is_zero() && !blk.kinv[c][b].is_zero())
                    acc += K[a][c] * blk.kinv[c][b];
            blk.kinv[a][b] = IntPolynomial() - acc;
        }
    }
    return blocks.emplace(n, std::move(blk)).first->second;
}

}  // namespace

IntPolynomial inverse_kostka(const Partition& lam, const Partition& sigma)
{
    if (lam.size() != sigma.size())
        return IntPolynomial();
    const KostkaBlock& blk = kostka_block(lam.size());
    return blk.kinv[blk.index.at(lam)][blk.index.at(sigma)];
}

ll inverse_kostka_at(const Partition& lam, const Partition& sigma, ll value)
{
    return inverse_kostka(lam, sigma).at(value);
}

namespace {

using Monomials = std::map<std::vector<int>, ll>;

/* Monomial expansion of the Schur polynomial s_mu in nvars variables, by
 * SSYT chain enumeration; keys are exact exponent vectors of length nvars. */
Monomials schur_monomials(const Partition& mu, int nvars)
{
    Monomials out;
    std::vector<int> weight(static_cast<size_t>(nvars), 0);
    std::function<void(int, const Partition&)> rec = [&](int v, const Partition& cur) {
        if (v > nvars) {
            if (cur == mu)
                out[weight] = checked_add(out[weight], 1);
            return;
        }
        for (int s = 0; s + cur.size() <= mu.size(); ++s)
            for (const Partition& next : add_horizontal_strips(cur, s)) {
                if (!contains(mu, next))
                    continue;
                weight[static_cast<size_t>(v - 1)] = s;
                rec(v + 1, next);
                weight[static_cast<size_t>(v - 1)] = 0;
            }
    };
    rec(1, Partition());
    return out;
}

bool weakly_decreasing(const std::vector<int>& v)
{
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i])
            return false;
    return true;
}

/* Reduce a symmetric polynomial (given by exact monomial coefficients) to
 * its Schur expansion by repeatedly stripping a dominance-maximal partition
 * weight.  Fails loudly if a nonzero remainder survives. */
std::map<Partition, ll> triangular_reduce(Monomials rem, int nvars)
{
    std::map<Partition, ll> result;
    for (;;) {
        /* The canonical (reverse-lexicographic) order refines dominance, so
         * the canonical-first partition key is dominance-maximal. */
        bool any = false;
        Partition best;
        for (const auto& [w, c] : rem) {
            if (c == 0 || !weakly_decreasing(w))
                continue;
            Partition cand{std::vector<int>(w)};
            if (!any || canonical_before(cand, best)) {
                best = cand;
                any = true;
            }
        }
        if (!any)
            break;
        std::vector<int> key = best.parts;
        key.resize(static_cast<size_t>(nvars), 0);
        ll c = rem[key];
        result[best] = checked_add(result[best], c);
        for (const auto& [w, k] : schur_monomials(best, nvars)) {
            rem[w] = checked_add(rem[w], checked_mul(-c, k));
            if (rem[w] == 0)
                rem.erase(w);
        }
    }
    for (const auto& [w, c] : rem)
        if (c != 0)
            throw std::runtime_error("triangular_reduce: nonzero remainder");
    return result;
}

}  // namespace

std::map<Partition, ll> lr_expand_monomial_oracle(const Partition& mu,
                                                  const Partition& nu)
{
    int nvars = mu.size() + nu.size();
    if (nvars == 0)
        return {{Partition(), 1}};
    Monomials a = schur_monomials(mu, nvars);
    Monomials b = schur_monomials(nu, nvars);
    Monomials prod;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<int> w(wa);
            for (size_t i = 0; i < w.size(); ++i)
                w[i] += wb[i];
            prod[w] = checked_add(prod[w], checked_mul(ca, cb));
        }
    return triangular_reduce(std::move(prod), nvars);
}

std::map<Partition, ll> schur_product_expand(const std::vector<Partition>& factors)
{
    int nvars = 0;
    for (const Partition& f : factors)
        nvars += f.size();
    if (nvars == 0)
        return {{Partition(), 1}};
    Monomials prod = {{std::vector<int>(static_cast<size_t>(nvars), 0), 1}};
    for (const Partition& f : factors) {
        Monomials next;
        for (const auto& [wf, cf] : schur_monomials(f, nvars))
            for (const auto& [wp, cp] : prod) {
                std::vector<int> w(wp);
                for (size_t i = 0; i < w.size(); ++i)
                    w[i] += wf[i];
                next[w] = checked_add(next[w], checked_mul(cf, cp));
            }
        prod = std::move(next);
    }
    return triangular_reduce(std::move(prod), nvars);
}

std::map<Partition, ll> schur_p_expansion(const Partition& lam)
{
    if (!is_strict(lam))
        throw std::invalid_argument("schur_p_expansion: partition must be strict");
    int n = lam.size();
    if (n == 0)
        return {{Partition(), 1}};

    /* Enumerate marked shifted tableaux of shifted shape lam with entries in
     * 1' < 1 < 2' < 2 < ... < n' < n (encoded 2v-1 / 2v): rows and columns
     * weakly increase, each row has at most one v' for each v, each column
     * at most one v, and diagonal entries are unprimed.  This generates
     * P_lambda evaluated at t = -1 in n variables. */
    Monomials mono;
    int rows = lam.num_parts();
    std::vector<std::vector<int>> tab(static_cast<size_t>(rows));
    for (int r = 1; r <= rows; ++r)
        tab[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(lam.part(r)), 0);
    std::vector<int> weight(static_cast<size_t>(n), 0);

    // Cell (r, j): j-th cell of row r (0-based), absolute column r + j.
    std::function<void(int, int)> rec = [&](int r, int j) {
        if (r > rows) {
            mono[weight] = checked_add(mono[weight], 1);
            return;
        }
        if (j >= lam.part(r)) {
            rec(r + 1, 0);
            return;
        }
        int left = (j > 0) ? tab[static_cast<size_t>(r - 1)][static_cast<size_t>(j - 1)] : 0;
        int col = r + j;  // absolute column (row r starts in column r)
        int above = 0;
        if (r >= 2) {
            int jj = col - (r - 1);  // index within row r-1
            if (jj >= 0 && jj < lam.part(r - 1))
                above = tab[static_cast<size_t>(r - 2)][static_cast<size_t>(jj)];
        }
        for (int e = std::max(left, above); e <= 2 * n; ++e) {
            if (e == 0)
                continue;
            bool primed = (e % 2 == 1);
            if (e == left && primed)
                continue;  // at most one v' per row
            if (e == above && !primed)
                continue;  // at most one v per column
            if (col == r && primed)
                continue;  // diagonal entries unprimed
            int v = (e + 1) / 2;
            tab[static_cast<size_t>(r - 1)][static_cast<size_t>(j)] = e;
            ++weight[static_cast<size_t>(v - 1)];
            rec(r, j + 1);
            --weight[static_cast<size_t>(v - 1)];
            tab[static_cast<size_t>(r - 1)][static_cast<size_t>(j)] = 0;
        }
    };
    rec(1, 0);
    return triangular_reduce(std::move(mono), n);
}

ll perm_sgn_perm_mult(const std::vector<int>& beta, const std::vector<int>& gamma,
                      const Partition& alpha)
{
    std::vector<Partition> factors;
    for (int b : beta) {
        if (b < 0)
            throw std::invalid_argument("perm_sgn_perm_mult: negative part");
        if (b > 0)
            factors.push_back(Partition(std::vector<int>(static_cast<size_t>(b), 1)));
    }
    for (int g : gamma) {
        if (g < 0)
            throw std::invalid_argument("perm_sgn_perm_mult: negative part");
        if (g > 0)
            factors.push_back(Partition({g}));
    }
    return lr_multi(alpha, factors);
}

}  // namespace spinrock
