#include "spinrock/rock.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "spinrock/parallel.hpp"
#include "spinrock/symmfunc.hpp"

namespace spinrock {

namespace {

ll pow2(int e)
{
    if (e < 0 || e >= 62)
        throw std::overflow_error("pow2: exponent out of range");
    return 1LL << e;
}

void require_restricted(const Partition& mu, const RouquierBlock& block)
{
    if (!is_restricted(mu, block.p))
        throw std::domain_error("label is not restricted: " + mu.to_string());
}

}  // namespace

IntPolynomial q_decomposition(const Partition& lam, const Partition& mu,
                              const RouquierBlock& block)
{
    require_restricted(mu, block);
    BarQuotient ql = bar_quotient(lam, block);
    BarQuotient qm = bar_quotient(mu, block);
    int ell = block.ell;

    // DP over i with state sigma^(i); sizes of tau^(i) and sigma^(i) are
    // forced by the nonvanishing constraints.
    std::map<Partition, IntPolynomial> state;
    int size0 = ql.comps[0].size();
    for (const Partition& sigma0 : enumerate_partitions(size0)) {
        IntPolynomial k = inverse_kostka(ql.comps[0], sigma0);
        if (!k.is_zero())
            state[sigma0] += k.substitute_minus_q_squared();
    }
    for (int i = 1; i <= ell; ++i) {
        const Partition& lam_i = ql.comps[static_cast<size_t>(i)];
        const Partition& mu_prev = qm.comps[static_cast<size_t>(i - 1)];
        std::map<Partition, IntPolynomial> next;
        for (const auto& [sigma_prev, poly] : state) {
            int tau_size = mu_prev.size() - sigma_prev.size();
            if (tau_size < 0)
                continue;
            int sigma_size = lam_i.size() - tau_size;
            if (sigma_size < 0)
                continue;
            for (const Partition& tau : enumerate_partitions(tau_size)) {
                ll c_mu = lr_coeff(mu_prev, sigma_prev, conjugate(tau));
                if (c_mu == 0)
                    continue;
                for (const Partition& sigma : enumerate_partitions(sigma_size)) {
                    ll c_lam = lr_coeff(lam_i, sigma, tau);
                    if (c_lam == 0)
                        continue;
                    next[sigma] += poly.scaled(checked_mul(c_lam, c_mu));
                }
            }
        }
        state = std::move(next);
    }

    auto it = state.find(Partition());
    if (it == state.end())
        return IntPolynomial();
    int shift = 0;
    for (int i = 0; i <= ell; ++i)
        shift += 2 * i *
                 (ql.comps[static_cast<size_t>(i)].size() -
                  qm.comps[static_cast<size_t>(i)].size());
    return it->second * IntPolynomial::monomial(1, shift);
}

ll big_D(const Partition& lam, const Partition& mu, const RouquierBlock& block)
{
    if (!is_strict(lam))
        throw std::domain_error("big_D: label is not strict: " + lam.to_string());
    BarQuotient ql = bar_quotient(lam, block);
    int h = ql.comps[0].num_parts();
    int e = (h + 1 - parity_a(lam)) / 2;
    return checked_mul(pow2(e), q_decomposition(lam, mu, block).at(1));
}

ll dhat(const Partition& lam, const Partition& mu, const RouquierBlock& block)
{
    if (!is_strict(lam))
        throw std::domain_error("dhat: label is not strict: " + lam.to_string());
    BarQuotient ql = bar_quotient(lam, block);
    int h = ql.comps[0].num_parts();
    int e = (h + parity_a(lam)) / 2;
    return checked_mul(pow2(e), q_decomposition(lam, mu, block).at(1));
}

SuperType type_of_S(const Partition& lam)
{
    return parity_a(lam) == 0 ? SuperType::M : SuperType::Q;
}

SuperType type_of_D(const Partition& mu, int p)
{
    std::vector<int> counts = residue_content(mu, p);
    int nonzero = 0;
    for (size_t i = 1; i < counts.size(); ++i)
        nonzero += counts[i];
    return nonzero % 2 == 0 ? SuperType::M : SuperType::Q;
}

BrauerFactor brauer_factor(SuperType s_type, SuperType d_type)
{
    if (s_type == SuperType::Q && d_type == SuperType::M)
        return {2, 1};
    if (s_type == SuperType::M && d_type == SuperType::Q)
        return {1, 2};
    return {1, 1};
}

LabeledMatrix<ll> decomp_matrix(const RouquierBlock& block, int jobs)
{
    BlockLabels labels = block_partitions(block);
    LabeledMatrix<ll> m;
    m.row_labels = labels.strict;
    m.col_labels = labels.restricted;
    size_t rows = m.row_labels.size(), cols = m.col_labels.size();
    m.entries.assign(rows, std::vector<ll>(cols, 0));
    parallel_for(jobs, static_cast<int>(rows * cols), [&](int idx) {
        size_t r = static_cast<size_t>(idx) / cols;
        size_t c = static_cast<size_t>(idx) % cols;
        m.entries[r][c] = dhat(m.row_labels[r], m.col_labels[c], block);
    });
    return m;
}

LabeledMatrix<IntPolynomial> qdecomp_matrix(const RouquierBlock& block, int jobs)
{
    BlockLabels labels = block_partitions(block);
    LabeledMatrix<IntPolynomial> m;
    m.row_labels = labels.all;
    m.col_labels = labels.restricted;
    size_t rows = m.row_labels.size(), cols = m.col_labels.size();
    m.entries.assign(rows, std::vector<IntPolynomial>(cols));
    parallel_for(jobs, static_cast<int>(rows * cols), [&](int idx) {
        size_t r = static_cast<size_t>(idx) / cols;
        size_t c = static_cast<size_t>(idx) % cols;
        m.entries[r][c] = q_decomposition(m.row_labels[r], m.col_labels[c], block);
    });
    return m;
}

CharacterVector phat_character(const Partition& mu, const RouquierBlock& block)
{
    require_restricted(mu, block);
    CharacterVector v;
    v.p = block.p;
    for (const Partition& lam : block_partitions(block).strict)
        v.add(lam, big_D(lam, mu, block));
    return v;
}

namespace {

/* Prop-unadjc product-sum for one (mu, nu) pair of restricted quotients. */
ll closed_form_entry(const BarQuotient& qmu, const BarQuotient& qnu, int ell, int d)
{
    std::vector<std::vector<Partition>> table;
    for (int n = 0; n <= d; ++n)
        table.push_back(enumerate_partitions(n));

    // Families phi^(i), psi^(i), chi^(i), omega^(i) for 0 <= i <= ell-1 with
    // chi^(0) = (psi^(0))' and chi^(ell) = psi^(ell) = empty.  The factor at
    // position i couples (psi^(i), chi^(i)) to (psi^(i+1), chi^(i+1)), so we
    // run a DP over that boundary state.
    std::map<std::pair<Partition, Partition>, ll> state;  // (psi^(i), chi^(i))
    for (int n = 0; n <= d; ++n)
        for (const Partition& psi0 : table[static_cast<size_t>(n)])
            state[{psi0, conjugate(psi0)}] = 1;

    for (int i = 0; i < ell; ++i) {
        const Partition& mu_i = qmu.comps[static_cast<size_t>(i)];
        const Partition& nu_i = qnu.comps[static_cast<size_t>(i)];
        std::map<std::pair<Partition, Partition>, ll> next;
        for (const auto& [key, weight] : state) {
            const auto& [psi_i, chi_i] = key;
            int psi_next_max = (i + 1 == ell) ? 0 : d;
            int chi_next_max = (i + 1 == ell) ? 0 : d;
            for (int np = 0; np <= psi_next_max; ++np)
                for (const Partition& psi_next : table[static_cast<size_t>(np)])
                    for (int nc = 0; nc <= chi_next_max; ++nc)
                        for (const Partition& chi_next :
                             table[static_cast<size_t>(nc)]) {
                            // Inner sum over phi^(i), omega^(i) of forced size.
                            int rem_mu = mu_i.size() - chi_i.size() -
                                         psi_next.size();
                            int rem_nu = nu_i.size() - psi_i.size() -
                                         chi_next.size();
                            if (rem_mu != rem_nu || rem_mu < 0)
                                continue;
                            ll inner = 0;
                            for (int f = 0; f <= rem_mu; ++f)
                                for (const Partition& phi :
                                     table[static_cast<size_t>(f)])
                                    for (const Partition& omega :
                                         table[static_cast<size_t>(rem_mu - f)]) {
                                        ll cm = lr_multi(
                                            mu_i, {phi, chi_i,
                                                   conjugate(psi_next), omega});
                                        if (cm == 0)
                                            continue;
                                        ll cn = lr_multi(
                                            nu_i, {phi, psi_i,
                                                   conjugate(chi_next), omega});
                                        inner = checked_add(inner,
                                                            checked_mul(cm, cn));
                                    }
                            if (inner == 0)
                                continue;
                            ll& slot = next[{psi_next, chi_next}];
                            slot = checked_add(slot, checked_mul(weight, inner));
                        }
        }
        state = std::move(next);
    }
    auto it = state.find({Partition(), Partition()});
    return it == state.end() ? 0 : it->second;
}

}  // namespace

LabeledMatrix<ll> unadjusted_cartan(const RouquierBlock& block,
                                    CartanMethod method, int jobs)
{
    BlockLabels labels = block_partitions(block);
    LabeledMatrix<ll> m;
    m.row_labels = labels.restricted;
    m.col_labels = labels.restricted;
    size_t n = m.row_labels.size();
    m.entries.assign(n, std::vector<ll>(n, 0));
    if (method == CartanMethod::FromDecomp) {
        LabeledMatrix<ll> d = decomp_matrix(block, jobs);
        parallel_for(jobs, static_cast<int>(n * n), [&](int idx) {
            size_t r = static_cast<size_t>(idx) / n;
            size_t c = static_cast<size_t>(idx) % n;
            ll total = 0;
            for (size_t k = 0; k < d.row_labels.size(); ++k)
                total = checked_add(
                    total, checked_mul(d.entries[k][r],
                                       big_D(d.row_labels[k], m.col_labels[c],
                                             block)));
            m.entries[r][c] = total;
        });
        return m;
    }
    std::vector<BarQuotient> quotients;
    quotients.reserve(n);
    for (const Partition& mu : m.row_labels)
        quotients.push_back(bar_quotient(mu, block));
    parallel_for(jobs, static_cast<int>(n * n), [&](int idx) {
        size_t r = static_cast<size_t>(idx) / n;
        size_t c = static_cast<size_t>(idx) % n;
        m.entries[r][c] =
            closed_form_entry(quotients[r], quotients[c], block.ell, block.d);
    });
    return m;
}

JMultipartition iota(const Partition& mu, const RouquierBlock& block)
{
    require_restricted(mu, block);
    BarQuotient q = bar_quotient(mu, block);
    JMultipartition out(static_cast<size_t>(block.ell));
    for (int j = 0; j < block.ell; ++j) {
        const Partition& comp = q.comps[static_cast<size_t>(j)];
        out[static_cast<size_t>(j)] = ((j + 1) % 2 == 0) ? comp : conjugate(comp);
    }
    return out;
}

LabeledMatrix<ll> cartan_via_wreath(const RouquierBlock& block, int jobs)
{
    BlockLabels labels = block_partitions(block);
    LabeledMatrix<ll> m;
    m.row_labels = labels.restricted;
    m.col_labels = labels.restricted;
    size_t n = m.row_labels.size();
    std::vector<JMultipartition> images;
    images.reserve(n);
    for (const Partition& mu : m.row_labels)
        images.push_back(iota(mu, block));
    m.entries.assign(n, std::vector<ll>(n, 0));
    parallel_for(jobs, static_cast<int>(n * n), [&](int idx) {
        size_t r = static_cast<size_t>(idx) / n;
        size_t c = static_cast<size_t>(idx) % n;
        m.entries[r][c] = wreath_cartan_entry(block.ell, images[r], images[c]);
    });
    return m;
}

}  // namespace spinrock
