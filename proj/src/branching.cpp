#include "spinrock/branching.hpp"

#include <functional>
#include <stdexcept>

#include "spinrock/rock.hpp"
#include "spinrock/symmfunc.hpp"

namespace spinrock {

namespace {

ll factorial(int n)
{
    ll r = 1;
    for (int v = 2; v <= n; ++v)
        r = checked_mul(r, v);
    return r;
}

ll pow_ll(ll base, int e)
{
    ll r = 1;
    for (int t = 0; t < e; ++t)
        r = checked_mul(r, base);
    return r;
}

/* Is outer/inner a horizontal strip (no two cells in one column)? */
bool is_horizontal_strip(const Partition& outer, const Partition& inner)
{
    if (!contains(outer, inner))
        return false;
    // Equivalent to inner_r >= outer_{r+1} for all r.
    for (int r = 1; r <= outer.num_parts(); ++r)
        if (inner.part(r) < outer.part(r + 1))
            return false;
    return true;
}

/* Is outer/inner a vertical strip (no two cells in one row)? */
bool is_vertical_strip(const Partition& outer, const Partition& inner)
{
    if (!contains(outer, inner))
        return false;
    for (int r = 1; r <= outer.num_parts(); ++r)
        if (outer.part(r) - inner.part(r) > 1)
            return false;
    return true;
}

}  // namespace

std::vector<std::pair<Partition, ll>> add_i_nodes(const Partition& lam, int p,
                                                  int i)
{
    if (!is_strict(lam))
        throw std::invalid_argument("add_i_nodes: partition is not strict");
    std::vector<std::pair<Partition, ll>> out;
    int h = lam.num_parts();
    for (int r = 1; r <= h + 1; ++r) {
        int col = lam.part(r) + 1;
        if (r > 1 && lam.part(r - 1) <= col)
            continue;  // result would not be strict (or not decreasing)
        if (residue(p, r, col) != i)
            continue;
        std::vector<int> parts = lam.parts;
        if (r <= h)
            parts[static_cast<size_t>(r - 1)] = col;
        else
            parts.push_back(col);
        Partition mu(std::move(parts));
        ll a = (parity_a(lam) == 1 && parity_a(mu) == 0) ? 2 : 1;
        out.push_back({std::move(mu), a});
    }
    return out;
}

CharacterVector apply_F(const CharacterVector& v, int i)
{
    CharacterVector out;
    out.p = v.p;
    for (const auto& [lam, c] : v.coeffs)
        for (const auto& [mu, a] : add_i_nodes(lam, v.p, i))
            out.add(mu, checked_mul(c, a));
    return out;
}

std::vector<int> gg_word(int ell, int i, int k)
{
    if (i < 0 || i > ell - 1 || k < 1)
        throw std::invalid_argument("gg_word: bad arguments");
    std::vector<int> word;
    auto emit = [&](int res, int count) {
        for (int t = 0; t < count; ++t)
            word.push_back(res);
    };
    emit(ell, k);
    for (int j = ell - 1; j >= i + 1; --j)
        emit(j, 2 * k);
    for (int j = i; j >= 1; --j)
        emit(j, k);
    emit(0, 2 * k);
    for (int j = 1; j <= i; ++j)
        emit(j, k);
    return word;
}

CharacterVector apply_gg(const CharacterVector& v, int i, int k)
{
    int ell = v.p / 2;
    CharacterVector out = v;
    for (int res : gg_word(ell, i, k))
        out = apply_F(out, res);
    return out;
}

ll gg_coefficient_closed(const Partition& lam, const Partition& alpha, int i,
                         int k, const RouquierBlock& block)
{
    int ell = block.ell;
    if (i < 0 || i > ell - 1 || k < 1)
        throw std::invalid_argument("gg_coefficient_closed: bad arguments");
    if (!is_strict(lam) || !is_strict(alpha))
        throw std::invalid_argument("gg_coefficient_closed: labels must be strict");
    BarQuotient ql = bar_quotient(lam, block);
    BarQuotient qa = bar_quotient(alpha, block);
    if (qa.total() != ql.total() + k)
        return 0;
    for (int j = 0; j <= ell; ++j)
        if (j != i && j != i + 1 &&
            ql.comps[static_cast<size_t>(j)] != qa.comps[static_cast<size_t>(j)])
            return 0;
    const Partition& li = ql.comps[static_cast<size_t>(i)];
    const Partition& ai = qa.comps[static_cast<size_t>(i)];
    const Partition& ln = ql.comps[static_cast<size_t>(i) + 1];
    const Partition& an = qa.comps[static_cast<size_t>(i) + 1];
    if (!is_horizontal_strip(ai, li) || !is_vertical_strip(an, ln))
        return 0;

    int f = 0;
    if (i == 0) {
        // Columns of alpha^(0) \ lam^(0) with a node in column c but none in
        // column c+1.
        Partition ca = conjugate(ai), cl = conjugate(li);
        int cols = ca.num_parts();
        for (int c = 1; c <= cols; ++c) {
            bool here = ca.part(c) > cl.part(c);
            bool right = ca.part(c + 1) > cl.part(c + 1);
            if (here && !right)
                ++f;
        }
    }
    int e2 = k * (block.p - 2) + ql.comps[0].num_parts() - qa.comps[0].num_parts() +
             parity_a(lam) - parity_a(alpha);
    if (e2 % 2 != 0)
        throw std::logic_error("gg_coefficient_closed: odd 2-exponent");
    int exponent = f + e2 / 2;
    ll value = checked_mul(pow_ll(factorial(2 * k), ell - i),
                           pow_ll(factorial(k), 2 * i + 1));
    if (exponent >= 0)
        return checked_mul(value, pow_ll(2, exponent));
    ll div = pow_ll(2, -exponent);
    if (value % div != 0)
        throw std::logic_error("gg_coefficient_closed: non-integral coefficient");
    return value / div;
}

ll cbar(const Partition& pi, const std::vector<int>& gamma)
{
    int total = 0;
    for (int g : gamma) {
        if (g < 0)
            throw std::invalid_argument("cbar: negative step");
        total += g;
    }
    if (total != pi.size())
        return 0;
    // DFS over chains; each step adds gamma_s nodes in distinct columns
    // (a horizontal strip), staying strict.
    std::function<ll(const Partition&, size_t)> count = [&](const Partition& cur,
                                                            size_t s) -> ll {
        if (s == gamma.size())
            return cur == pi ? 1 : 0;
        ll ways = 0;
        for (const Partition& next : add_horizontal_strips(cur, gamma[s]))
            if (is_strict(next) && contains(pi, next))
                ways = checked_add(ways, count(next, s + 1));
        return ways;
    };
    return count(Partition(), 0);
}

ll Dtilde(const Partition& lam, const RouquierBlock& block)
{
    BarQuotient q = bar_quotient(lam, block);
    if (!q.comps[0].parts.empty())
        throw std::domain_error("Dtilde: label is not a p'-partition");
    int d = q.total();
    // The 2-exponent telescopes the per-step exponents of the induction
    // coefficients, giving a(rho) - a(lam) (not the other way around).
    int e2 = d * (block.p - 2) + parity_a(block.rho) - parity_a(lam);
    if (e2 % 2 != 0)
        throw std::logic_error("Dtilde: odd 2-exponent");
    ll value = pow_ll(2, e2 / 2);
    for (int i = 1; i <= block.ell; ++i) {
        Partition conj = conjugate(q.comps[static_cast<size_t>(i)]);
        for (int part : conj.parts) {
            value = checked_mul(value, pow_ll(factorial(2 * part),
                                              block.ell - i + 1));
            value = checked_mul(value, pow_ll(factorial(part), 2 * i - 1));
        }
    }
    return value;
}

ll Dtilde_entry(const Partition& lam, const Partition& alpha,
                const RouquierBlock& block)
{
    BarQuotient ql = bar_quotient(lam, block);
    BarQuotient qa = bar_quotient(alpha, block);
    if (!ql.comps[0].parts.empty())
        throw std::domain_error("Dtilde_entry: label is not a p'-partition");
    if (!is_strict(alpha))
        throw std::domain_error("Dtilde_entry: second label must be strict");
    int ell = block.ell;

    // Columns lam^(i)'; each entry splits as beta^(i)_r + gamma^(i)_r.
    std::vector<std::vector<int>> cols(static_cast<size_t>(ell) + 1);
    for (int i = 1; i <= ell; ++i)
        cols[static_cast<size_t>(i)] =
            conjugate(ql.comps[static_cast<size_t>(i)]).parts;

    std::vector<std::vector<int>> beta(static_cast<size_t>(ell) + 2);
    std::vector<std::vector<int>> gamma(static_cast<size_t>(ell) + 2);

    ll total = 0;
    std::function<void(int)> pick = [&](int i) {
        if (i > ell) {
            ll prod = cbar(qa.comps[0], gamma[1]);
            for (int j = 1; j <= ell && prod != 0; ++j)
                prod = checked_mul(
                    prod, perm_sgn_perm_mult(beta[static_cast<size_t>(j)],
                                             gamma[static_cast<size_t>(j) + 1],
                                             qa.comps[static_cast<size_t>(j)]));
            total = checked_add(total, prod);
            return;
        }
        const std::vector<int>& col = cols[static_cast<size_t>(i)];
        std::vector<int>& b = beta[static_cast<size_t>(i)];
        std::vector<int>& g = gamma[static_cast<size_t>(i)];
        b.assign(col.size(), 0);
        g.assign(col.size(), 0);
        std::function<void(size_t)> split = [&](size_t r) {
            if (r == col.size()) {
                pick(i + 1);
                return;
            }
            for (int v = 0; v <= col[r]; ++v) {
                b[r] = v;
                g[r] = col[r] - v;
                split(r + 1);
            }
        };
        split(0);
    };
    pick(1);
    return checked_mul(Dtilde(lam, block), total);
}

std::vector<GGFactor> phitilde_factors(const Partition& lam,
                                       const RouquierBlock& block)
{
    BarQuotient q = bar_quotient(lam, block);
    if (!q.comps[0].parts.empty())
        throw std::domain_error("phitilde: label is not a p'-partition");
    std::vector<GGFactor> factors;
    for (int i = 1; i <= block.ell; ++i) {
        Partition conj = conjugate(q.comps[static_cast<size_t>(i)]);
        for (int part : conj.parts)
            factors.push_back({i, part});
    }
    return factors;
}

CharacterVector phitilde(const Partition& lam, const RouquierBlock& block,
                         const std::vector<GGFactor>& factors)
{
    CharacterVector v = CharacterVector::unit(block.p, block.rho);
    for (const GGFactor& f : factors)
        v = apply_gg(v, f.i - 1, f.k);
    return v;
}

CharacterVector phitilde(const Partition& lam, const RouquierBlock& block)
{
    return phitilde(lam, block, phitilde_factors(lam, block));
}

bool check_lfromm(const Partition& lam, const RouquierBlock& block)
{
    CharacterVector lhs = phitilde(lam, block);
    BarQuotient ql = bar_quotient(lam, block);
    ll dt = Dtilde(lam, block);

    CharacterVector rhs;
    rhs.p = block.p;
    for (const Partition& mu : block_partitions(block).restricted) {
        BarQuotient qm = bar_quotient(mu, block);
        ll prod = dt;
        for (int i = 1; i <= block.ell && prod != 0; ++i) {
            Partition shape = qm.comps[static_cast<size_t>(i) - 1];
            std::vector<int> content =
                conjugate(ql.comps[static_cast<size_t>(i)]).parts;
            prod = checked_mul(prod, kostka_number(shape, content));
        }
        if (prod == 0)
            continue;
        rhs += phat_character(mu, block).scaled(prod);
    }
    return lhs == rhs;
}

}  // namespace spinrock
