#include "spinrock/wreath.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "spinrock/parallel.hpp"
#include "spinrock/symmfunc.hpp"

namespace spinrock {

int j_total(const JMultipartition& lam)
{
    int t = 0;
    for (const Partition& comp : lam)
        t += comp.size();
    return t;
}

std::string j_to_string(const JMultipartition& lam)
{
    std::ostringstream os;
    os << '(';
    for (size_t j = 0; j < lam.size(); ++j) {
        if (j)
            os << ';';
        os << lam[j].to_string();
    }
    os << ')';
    return os.str();
}

bool j_canonical_before(const JMultipartition& a, const JMultipartition& b)
{
    for (size_t j = 0; j < a.size() && j < b.size(); ++j) {
        if (a[j] != b[j])
            return canonical_before(a[j], b[j]);
    }
    return a.size() < b.size();
}

CompSeries pj_factors(int ell, int j)
{
    if (ell < 1 || j < 0 || j > ell - 1)
        throw std::invalid_argument("pj_factors: index out of range");
    if (j == 0) {
        CompSeries s = {{0, false}, {0, true}};
        if (ell > 1)
            s.push_back({1, false});
        s.push_back({0, false});
        return s;
    }
    if (j == ell - 1)
        return {{ell - 1, false}, {ell - 2, false}, {ell - 1, false}};
    return {{j, false}, {j - 1, false}, {j + 1, false}, {j, false}};
}

namespace {

/* Partitions of each size 0..max, shared by the nested enumerations. */
std::vector<std::vector<Partition>> partitions_by_size(int max)
{
    std::vector<std::vector<Partition>> table;
    table.reserve(static_cast<size_t>(max) + 1);
    for (int n = 0; n <= max; ++n)
        table.push_back(enumerate_partitions(n));
    return table;
}

}  // namespace

ll filtered_multiplicity(int ell, const JMultipartition& lam,
                         const std::vector<CompSeries>& series,
                         const JMultipartition& mu)
{
    if (static_cast<int>(lam.size()) != ell || static_cast<int>(mu.size()) != ell ||
        static_cast<int>(series.size()) != ell)
        throw std::invalid_argument("filtered_multiplicity: component count mismatch");
    if (j_total(lam) != j_total(mu))
        return 0;

    int d = j_total(lam);
    auto table = partitions_by_size(d);

    ll total = 0;
    // Per target index, the collected factor multiset for the mu side.
    std::vector<std::vector<Partition>> collected(static_cast<size_t>(ell));

    std::function<void(int, ll)> pick_module = [&](int j, ll weight) {
        if (j == ell) {
            ll w = weight;
            for (int i = 0; i < ell && w != 0; ++i)
                w = checked_mul(w, lr_multi(mu[static_cast<size_t>(i)],
                                            collected[static_cast<size_t>(i)]));
            total = checked_add(total, w);
            return;
        }
        const CompSeries& factors = series[static_cast<size_t>(j)];
        int m = static_cast<int>(factors.size());
        int need = lam[static_cast<size_t>(j)].size();
        std::vector<Partition> nus;  // the nu^{(j,s)} chosen for this module
        // Choose nu^{(j,s)} for s = 0..m-1 with sizes summing to |lam^(j)|.
        std::function<void(int, int)> pick_nu = [&](int s, int remaining) {
            if (s == m) {
                if (remaining != 0)
                    return;
                ll c = lr_multi(lam[static_cast<size_t>(j)], nus);
                if (c == 0)
                    return;
                std::vector<size_t> added(static_cast<size_t>(ell), 0);
                for (int t = 0; t < m; ++t) {
                    const SeriesFactor& f = factors[static_cast<size_t>(t)];
                    const Partition& nu = nus[static_cast<size_t>(t)];
                    collected[static_cast<size_t>(f.index)].push_back(
                        f.odd ? conjugate(nu) : nu);
                    ++added[static_cast<size_t>(f.index)];
                }
                pick_module(j + 1, checked_mul(weight, c));
                for (int i = 0; i < ell; ++i)
                    for (size_t t = 0; t < added[static_cast<size_t>(i)]; ++t)
                        collected[static_cast<size_t>(i)].pop_back();
                return;
            }
            int lo = (s == m - 1) ? remaining : 0;
            for (int size = lo; size <= remaining; ++size)
                for (const Partition& nu : table[static_cast<size_t>(size)]) {
                    nus.push_back(nu);
                    pick_nu(s + 1, remaining - size);
                    nus.pop_back();
                }
        };
        pick_nu(0, need);
    };
    pick_module(0, 1);
    return total;
}

ll circ_multiplicity(int ell, const std::vector<JMultipartition>& factors,
                     const JMultipartition& mu)
{
    if (static_cast<int>(mu.size()) != ell)
        throw std::invalid_argument("circ_multiplicity: component count mismatch");
    ll total = 1;
    for (int j = 0; j < ell && total != 0; ++j) {
        std::vector<Partition> comps;
        comps.reserve(factors.size());
        for (const JMultipartition& f : factors) {
            if (static_cast<int>(f.size()) != ell)
                throw std::invalid_argument("circ_multiplicity: component count mismatch");
            comps.push_back(f[static_cast<size_t>(j)]);
        }
        total = checked_mul(total, lr_multi(mu[static_cast<size_t>(j)], comps));
    }
    return total;
}

ll wreath_cartan_entry(int ell, const JMultipartition& lam,
                       const JMultipartition& mu)
{
    if (static_cast<int>(lam.size()) != ell || static_cast<int>(mu.size()) != ell)
        throw std::invalid_argument("wreath_cartan_entry: component count mismatch");
    int d = j_total(lam);
    if (j_total(mu) != d)
        return 0;
    if (d == 0)
        return 1;
    auto table = partitions_by_size(d);

    // beta^(j) for j = 0..ell-1 (beta^(ell) = empty), gamma^(j) for
    // j = 0..ell-2 (gamma^(ell-1) = empty, gamma^(-1) = (beta^(0))').
    std::vector<Partition> beta(static_cast<size_t>(ell) + 1);
    std::vector<Partition> gamma(static_cast<size_t>(ell));

    auto gamma_at = [&](int j) -> Partition {
        if (j == -1)
            return conjugate(beta[0]);
        return gamma[static_cast<size_t>(j)];
    };

    ll total = 0;
    auto finish = [&] {
        ll prod = 1;
        for (int j = 0; j < ell && prod != 0; ++j) {
            const Partition& lj = lam[static_cast<size_t>(j)];
            const Partition& mj = mu[static_cast<size_t>(j)];
            Partition gprev = gamma_at(j - 1);
            const Partition& bnext = beta[static_cast<size_t>(j) + 1];
            int s_lam = lj.size() - beta[static_cast<size_t>(j)].size() -
                        gamma_at(j).size();
            int s_mu = mj.size() - bnext.size() - gprev.size();
            if (s_lam != s_mu || s_lam < 0) {
                prod = 0;
                break;
            }
            // Inner sum over alpha, delta with |alpha|+|delta| = s_lam.
            ll inner = 0;
            for (int a = 0; a <= s_lam; ++a)
                for (const Partition& alpha : table[static_cast<size_t>(a)])
                    for (const Partition& delta :
                         table[static_cast<size_t>(s_lam - a)]) {
                        ll cl = lr_multi(lj, {alpha, beta[static_cast<size_t>(j)],
                                              gamma_at(j), delta});
                        if (cl == 0)
                            continue;
                        ll cm = lr_multi(mj, {alpha, bnext, gprev, delta});
                        inner = checked_add(inner, checked_mul(cl, cm));
                    }
            prod = checked_mul(prod, inner);
        }
        total = checked_add(total, prod);
    };

    std::function<void(int)> pick_gamma = [&](int j) {
        if (j == ell - 1) {
            finish();
            return;
        }
        for (int size = 0; size <= d; ++size)
            for (const Partition& g : table[static_cast<size_t>(size)]) {
                gamma[static_cast<size_t>(j)] = g;
                pick_gamma(j + 1);
            }
        gamma[static_cast<size_t>(j)] = Partition();
    };
    std::function<void(int)> pick_beta = [&](int j) {
        if (j == ell) {
            pick_gamma(0);
            return;
        }
        for (int size = 0; size <= d; ++size)
            for (const Partition& b : table[static_cast<size_t>(size)]) {
                beta[static_cast<size_t>(j)] = b;
                pick_beta(j + 1);
            }
        beta[static_cast<size_t>(j)] = Partition();
    };
    pick_beta(0);
    return total;
}

std::vector<JMultipartition> enumerate_j_labels(int ell, int d)
{
    std::vector<JMultipartition> labels = enumerate_multipartitions(ell, d);
    std::sort(labels.begin(), labels.end(), j_canonical_before);
    return labels;
}

WreathCartan wreath_cartan_matrix(int ell, int d, int jobs)
{
    WreathCartan m;
    m.labels = enumerate_j_labels(ell, d);
    size_t n = m.labels.size();
    m.entries.assign(n, std::vector<ll>(n, 0));
    parallel_for(jobs, static_cast<int>(n * n), [&](int idx) {
        size_t r = static_cast<size_t>(idx) / n;
        size_t c = static_cast<size_t>(idx) % n;
        m.entries[r][c] = wreath_cartan_entry(ell, m.labels[r], m.labels[c]);
    });
    return m;
}

}  // namespace spinrock
