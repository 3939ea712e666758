#include "spinrock/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spinrock/barcore.hpp"
#include "spinrock/branching.hpp"
#include "spinrock/character.hpp"
#include "spinrock/partition.hpp"
#include "spinrock/polynomial.hpp"
#include "spinrock/rock.hpp"
#include "spinrock/symmfunc.hpp"
#include "spinrock/wreath.hpp"

namespace spinrock {

namespace {

/* Accumulates one named identity check; the detail of the first failing case
 * is kept, later cases are still counted. */
class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    template <class Detail>
    void require(bool ok, Detail&& detail)
    {
        ++result_.cases;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.detail = detail();
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string pair_tag(const Partition& a, const Partition& b)
{
    return a.to_string() + " / " + b.to_string();
}

/* All entrywise splittings lam_r = beta_r + gamma_r. */
template <class Fn>
void for_splittings(const Partition& lam, Fn&& fn)
{
    std::vector<int> beta(lam.parts.size(), 0), gamma(lam.parts.size(), 0);
    auto rec = [&](auto&& self, size_t r) -> void {
        if (r == lam.parts.size()) {
            fn(beta, gamma);
            return;
        }
        for (int v = 0; v <= lam.parts[r]; ++v) {
            beta[r] = v;
            gamma[r] = lam.parts[r] - v;
            self(self, r + 1);
        }
    };
    rec(rec, 0);
}

/* sum_mu [M^lam : S^mu] c^mu_{tau sigma}
 *   = sum_{beta+gamma=lam} [M^beta : S^tau][M^gamma : S^sigma]. */
CheckResult check_mackey(int max_n)
{
    Check c("mackey");
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> pn = enumerate_partitions(n);
        for (const Partition& lam : pn)
            for (int t = 0; t <= n; ++t)
                for (const Partition& tau : enumerate_partitions(t))
                    for (const Partition& sig : enumerate_partitions(n - t)) {
                        ll lhs = 0;
                        for (const Partition& mu : pn)
                            lhs = checked_add(
                                lhs, checked_mul(kostka_number(mu, lam.parts),
                                                 lr_coeff(mu, tau, sig)));
                        ll rhs = 0;
                        for_splittings(lam, [&](const std::vector<int>& beta,
                                                const std::vector<int>& gamma) {
                            rhs = checked_add(
                                rhs, checked_mul(kostka_number(tau, beta),
                                                 kostka_number(sig, gamma)));
                        });
                        c.require(lhs == rhs, [&] {
                            std::ostringstream os;
                            os << "lam=" << lam.to_string()
                               << " tau=" << tau.to_string()
                               << " sigma=" << sig.to_string() << " " << lhs
                               << " != " << rhs;
                            return os.str();
                        });
                    }
    }
    return c.take();
}

/* sum_lam c^lam_{alpha beta} c^lam_{gamma delta}
 *   = sum_{phi,chi,psi,omega} c^alpha_{phi chi} c^beta_{psi omega}
 *                             c^gamma_{phi psi} c^delta_{chi omega}. */
CheckResult check_smackey(int max_n)
{
    Check c("smackey");
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> pn = enumerate_partitions(n);
        for (int a = 0; a <= n; ++a) {
            std::vector<Partition> pa = enumerate_partitions(a);
            std::vector<Partition> pb = enumerate_partitions(n - a);
            for (int g = 0; g <= n; ++g) {
                std::vector<Partition> pg = enumerate_partitions(g);
                std::vector<Partition> pd = enumerate_partitions(n - g);
                for (const Partition& alpha : pa)
                    for (const Partition& beta : pb)
                        for (const Partition& gamma : pg)
                            for (const Partition& delta : pd) {
                                ll lhs = 0;
                                for (const Partition& lam : pn)
                                    lhs = checked_add(
                                        lhs,
                                        checked_mul(lr_coeff(lam, alpha, beta),
                                                    lr_coeff(lam, gamma, delta)));
                                ll rhs = 0;
                                for (int f = 0; f <= std::min(a, g); ++f) {
                                    int w = (n - a) - (g - f);
                                    if (w < 0)
                                        continue;
                                    for (const Partition& phi :
                                         enumerate_partitions(f))
                                        for (const Partition& chi :
                                             enumerate_partitions(a - f))
                                            for (const Partition& psi :
                                                 enumerate_partitions(g - f))
                                                for (const Partition& omega :
                                                     enumerate_partitions(w)) {
                                                    ll t = lr_coeff(alpha, phi, chi);
                                                    if (t == 0)
                                                        continue;
                                                    t = checked_mul(
                                                        t, lr_coeff(beta, psi, omega));
                                                    if (t == 0)
                                                        continue;
                                                    t = checked_mul(
                                                        t, lr_coeff(gamma, phi, psi));
                                                    if (t == 0)
                                                        continue;
                                                    t = checked_mul(
                                                        t,
                                                        lr_coeff(delta, chi, omega));
                                                    rhs = checked_add(rhs, t);
                                                }
                                }
                                c.require(lhs == rhs, [&] {
                                    std::ostringstream os;
                                    os << alpha.to_string() << " " << beta.to_string()
                                       << " " << gamma.to_string() << " "
                                       << delta.to_string() << " " << lhs
                                       << " != " << rhs;
                                    return os.str();
                                });
                            }
            }
        }
    }
    return c.take();
}

/* sum_{lam strict} 2^{h(lam)} K^{-1}_{lam xi}(-1) K^{-1}_{lam pi}(-1)
 *   = sum_{beta,gamma} c^xi_{beta gamma'} c^pi_{beta gamma}. */
CheckResult check_klem(int max_n)
{
    Check c("klem");
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> pn = enumerate_partitions(n);
        std::vector<Partition> sn = enumerate_strict(n);
        for (const Partition& xi : pn)
            for (const Partition& pi : pn) {
                ll lhs = 0;
                for (const Partition& lam : sn) {
                    ll term = 1;
                    for (int t = 0; t < lam.num_parts(); ++t)
                        term = checked_mul(term, 2);
                    term = checked_mul(term, inverse_kostka_at(lam, xi, -1));
                    term = checked_mul(term, inverse_kostka_at(lam, pi, -1));
                    lhs = checked_add(lhs, term);
                }
                ll rhs = 0;
                for (int b = 0; b <= n; ++b)
                    for (const Partition& beta : enumerate_partitions(b))
                        for (const Partition& gamma : enumerate_partitions(n - b))
                            rhs = checked_add(
                                rhs,
                                checked_mul(lr_coeff(xi, beta, conjugate(gamma)),
                                            lr_coeff(pi, beta, gamma)));
                c.require(lhs == rhs, [&] {
                    return pair_tag(xi, pi) + " " + std::to_string(lhs) +
                           " != " + std::to_string(rhs);
                });
            }
    }
    return c.take();
}

/* perm_sgn_perm_mult against the monomial-basis product oracle. */
CheckResult check_msgnm(int max_n)
{
    Check c("msgnm");
    for (int n = 0; n <= max_n; ++n)
        for (int b = 0; b <= n; ++b)
            for (const Partition& beta : enumerate_partitions(b))
                for (const Partition& gamma : enumerate_partitions(n - b)) {
                    std::vector<Partition> factors;
                    for (int part : beta.parts)
                        factors.push_back(Partition(std::vector<int>(
                            static_cast<size_t>(part), 1)));
                    for (int part : gamma.parts)
                        factors.push_back(Partition({part}));
                    std::map<Partition, ll> oracle = schur_product_expand(factors);
                    for (const Partition& alpha : enumerate_partitions(n)) {
                        auto it = oracle.find(alpha);
                        ll expect = it == oracle.end() ? 0 : it->second;
                        ll got = perm_sgn_perm_mult(beta.parts, gamma.parts, alpha);
                        c.require(got == expect, [&] {
                            std::ostringstream os;
                            os << "beta=" << beta.to_string()
                               << " gamma=" << gamma.to_string()
                               << " alpha=" << alpha.to_string() << " " << got
                               << " != " << expect;
                            return os.str();
                        });
                    }
                }
    return c.take();
}

/* K(t) and K^{-1}(t) multiply to the identity, in both orders. */
CheckResult check_kostka_inverse(int max_n)
{
    Check c("kostka-inverse");
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> pn = enumerate_partitions(n);
        size_t m = pn.size();
        std::vector<std::vector<IntPolynomial>> K(m, std::vector<IntPolynomial>(m));
        std::vector<std::vector<IntPolynomial>> Ki(m, std::vector<IntPolynomial>(m));
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b) {
                K[a][b] = kostka_foulkes(pn[a], pn[b]);
                Ki[a][b] = inverse_kostka(pn[a], pn[b]);
            }
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b) {
                IntPolynomial left, right;
                for (size_t k = 0; k < m; ++k) {
                    left += Ki[a][k] * K[k][b];
                    right += K[a][k] * Ki[k][b];
                }
                IntPolynomial expect =
                    a == b ? IntPolynomial::constant(1) : IntPolynomial();
                c.require(left == expect && right == expect, [&] {
                    return pair_tag(pn[a], pn[b]) + " left=" + left.to_string('t') +
                           " right=" + right.to_string('t');
                });
            }
    }
    return c.take();
}

/* Durfee-diagonal hook lengths of sigma: a strict partition. */
Partition diagonal_hooks(const Partition& sigma)
{
    Partition conj = conjugate(sigma);
    std::vector<int> parts;
    for (int i = 1; i <= sigma.num_parts() && sigma.part(i) >= i; ++i)
        parts.push_back(sigma.part(i) + conj.part(i) - 2 * i + 1);
    return Partition(std::move(parts));
}

/* K^{-1}_{lam sigma}(-1) >= 0 for strict lam, with strict positivity when
 * lam is the diagonal-hook partition of sigma. */
CheckResult check_ik_nonnegative(int max_n)
{
    Check c("inverse-kostka-at-minus-one");
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> pn = enumerate_partitions(n);
        for (const Partition& lam : enumerate_strict(n))
            for (const Partition& sigma : pn) {
                ll v = inverse_kostka_at(lam, sigma, -1);
                c.require(v >= 0, [&] {
                    return pair_tag(lam, sigma) + " value " + std::to_string(v);
                });
            }
        for (const Partition& sigma : pn) {
            Partition hooks = diagonal_hooks(sigma);
            ll v = inverse_kostka_at(hooks, sigma, -1);
            c.require(v > 0, [&] {
                return "hooks " + pair_tag(hooks, sigma) + " value " +
                       std::to_string(v);
            });
        }
    }
    return c.take();
}

/* Schur-P oracle (shifted marked tableaux) against K^{-1}(-1). */
CheckResult check_schur_p(int max_n)
{
    Check c("schur-p-oracle");
    for (int n = 0; n <= max_n; ++n)
        for (const Partition& lam : enumerate_strict(n)) {
            std::map<Partition, ll> expansion = schur_p_expansion(lam);
            for (const Partition& sigma : enumerate_partitions(n)) {
                auto it = expansion.find(sigma);
                ll oracle = it == expansion.end() ? 0 : it->second;
                c.require(inverse_kostka_at(lam, sigma, -1) == oracle, [&] {
                    return pair_tag(lam, sigma);
                });
            }
        }
    return c.take();
}

/* Lattice-word LR coefficients against the monomial-basis product oracle. */
CheckResult check_lr_oracle(int max_n)
{
    Check c("lr-oracle");
    for (int n = 0; n <= max_n; ++n)
        for (int a = 0; a <= n; ++a)
            for (const Partition& mu : enumerate_partitions(a))
                for (const Partition& nu : enumerate_partitions(n - a)) {
                    std::map<Partition, ll> oracle =
                        lr_expand_monomial_oracle(mu, nu);
                    for (const Partition& lam : enumerate_partitions(n)) {
                        auto it = oracle.find(lam);
                        ll expect = it == oracle.end() ? 0 : it->second;
                        c.require(lr_coeff(lam, mu, nu) == expect, [&] {
                            return lam.to_string() + " / " + pair_tag(mu, nu);
                        });
                    }
                }
    return c.take();
}

SuiteResult suite_symmfunc(bool /*slow*/)
{
    SuiteResult s{"symmfunc-identities", {}};
    s.checks.push_back(check_mackey(6));
    s.checks.push_back(check_smackey(6));
    s.checks.push_back(check_klem(5));
    s.checks.push_back(check_msgnm(6));
    s.checks.push_back(check_kostka_inverse(8));
    s.checks.push_back(check_ik_nonnegative(8));
    s.checks.push_back(check_schur_p(8));
    s.checks.push_back(check_lr_oracle(6));
    return s;
}

SuiteResult suite_dominance(int p_filter, int d_filter)
{
    SuiteResult s{"dominance", {}};
    Check c("succeq-antidominance");
    int dmax = d_filter > 0 ? d_filter : 3;
    for (int p : {3, 5}) {
        if (p_filter > 0 && p != p_filter)
            continue;
        RouquierBlock block = make_block(p, make_rouquier_core(p, dmax), dmax);
        for (int w = 0; w <= dmax; ++w) {
            std::vector<Partition> members = block_members(block, w);
            std::vector<BarQuotient> quots;
            quots.reserve(members.size());
            for (const Partition& lam : members)
                quots.push_back(bar_quotient(lam, block));
            for (size_t a = 0; a < members.size(); ++a)
                for (size_t b = 0; b < members.size(); ++b)
                    c.require(quotient_succeq(quots[a], quots[b]) ==
                                  dominates(members[b], members[a]),
                              [&] {
                                  return "p=" + std::to_string(p) + " " +
                                         pair_tag(members[a], members[b]);
                              });
        }
    }
    s.checks.push_back(c.take());
    return s;
}

SuiteResult suite_containment(int p_filter, int d_filter)
{
    SuiteResult s{"containment", {}};
    Check c("quotient-containment");
    int dmax = d_filter > 0 ? d_filter : 3;
    for (int p : {3, 5}) {
        if (p_filter > 0 && p != p_filter)
            continue;
        RouquierBlock block = make_block(p, make_rouquier_core(p, dmax), dmax);
        std::vector<Partition> pool;
        std::vector<BarQuotient> quots;
        for (int w = 0; w <= dmax; ++w)
            for (const Partition& lam : block_members(block, w)) {
                pool.push_back(lam);
                quots.push_back(bar_quotient(lam, block));
            }
        for (size_t a = 0; a < pool.size(); ++a)
            for (size_t b = 0; b < pool.size(); ++b)
                c.require(quotient_contains(quots[a], quots[b]) ==
                              contains(pool[a], pool[b]),
                          [&] {
                              return "p=" + std::to_string(p) + " " +
                                     pair_tag(pool[a], pool[b]);
                          });
    }
    s.checks.push_back(c.take());
    return s;
}

SuiteResult suite_gg_oracle(int p_filter)
{
    SuiteResult s{"gg-oracle", {}};
    Check c("closed-form-vs-induction");
    Check sup("support-in-block");
    for (int p : {3, 5}) {
        if (p_filter > 0 && p != p_filter)
            continue;
        int d = 4;
        RouquierBlock block = make_block(p, make_rouquier_core(p, d), d);
        for (int w = 0; w <= 2; ++w) {
            std::vector<Partition> lams = block_members(block, w);
            for (int k = 1; k <= 2; ++k) {
                std::vector<Partition> targets = block_members(block, w + k);
                for (const Partition& lam : lams) {
                    if (!is_strict(lam))
                        continue;
                    for (int i = 0; i <= block.ell - 1; ++i) {
                        CharacterVector v =
                            apply_gg(CharacterVector::unit(p, lam), i, k);
                        for (const Partition& alpha : targets) {
                            if (!is_strict(alpha))
                                continue;
                            ll closed =
                                gg_coefficient_closed(lam, alpha, i, k, block);
                            c.require(closed == v.at(alpha), [&] {
                                std::ostringstream os;
                                os << "p=" << p << " i=" << i << " k=" << k << " "
                                   << pair_tag(lam, alpha) << " " << closed
                                   << " != " << v.at(alpha);
                                return os.str();
                            });
                        }
                        for (const auto& [mu, coeff] : v.coeffs) {
                            auto [core, bars] = bar_core(mu, p);
                            sup.require(core == block.rho && bars == w + k, [&] {
                                return "p=" + std::to_string(p) + " " +
                                       mu.to_string();
                            });
                        }
                    }
                }
            }
        }
    }
    s.checks.push_back(c.take());
    s.checks.push_back(sup.take());
    return s;
}

SuiteResult suite_lfromm(int p_filter, int d_filter)
{
    SuiteResult s{"lfromm", {}};
    Check main("lfromm");
    Check prj("projective-form");
    Check dom("dominance-window");
    Check bound("boundedness");
    Check order("order-independence");
    Check phat("phat-bounded");
    Check fdc("fd-coefficient");
    for (int p : {3, 5})
        for (int d = 1; d <= 2; ++d) {
            if ((p_filter > 0 && p != p_filter) || (d_filter > 0 && d != d_filter))
                continue;
            RouquierBlock block = make_block(p, make_rouquier_core(p, d), d);
            BlockLabels labels = block_partitions(block);
            auto tag = [&](const Partition& lam) {
                return "p=" + std::to_string(p) + " d=" + std::to_string(d) + " " +
                       lam.to_string();
            };
            for (const Partition& lam : labels.p_prime) {
                main.require(check_lfromm(lam, block), [&] { return tag(lam); });
                CharacterVector v = phitilde(lam, block);
                BarQuotient ql = bar_quotient(lam, block);
                for (const Partition& alpha : labels.p_prime)
                    prj.require(v.at(alpha) == Dtilde_entry(lam, alpha, block),
                                [&] { return tag(lam) + " / " + alpha.to_string(); });
                prj.require(v.at(lam) != 0, [&] { return tag(lam) + " diagonal"; });
                /* The support window: every quotient lies between that of lam
                 * and the componentwise conjugate tuple shifted up. */
                BarQuotient upper;
                upper.p = p;
                for (int i = 1; i <= block.ell; ++i)
                    upper.comps.push_back(
                        conjugate(ql.comps[static_cast<size_t>(i)]));
                upper.comps.push_back(Partition());
                for (const auto& [alpha, coeff] : v.coeffs) {
                    BarQuotient qa = bar_quotient(alpha, block);
                    dom.require(quotient_succeq(qa, ql) &&
                                    quotient_succeq(upper, qa),
                                [&] { return tag(lam) + " / " + alpha.to_string(); });
                }
                std::vector<int> m;
                for (int i = 1; i <= block.ell; ++i)
                    m.push_back(ql.comps[static_cast<size_t>(i)].size());
                m.push_back(0);
                bound.require(m_bounded(v, m, block), [&] { return tag(lam); });
                std::vector<GGFactor> factors = phitilde_factors(lam, block);
                std::vector<GGFactor> reversed(factors.rbegin(), factors.rend());
                order.require(phitilde(lam, block, reversed) == v,
                              [&] { return tag(lam); });
            }
            for (const Partition& mu : labels.restricted) {
                CharacterVector ph = phat_character(mu, block);
                phat.require(m_bounded(ph, gth(mu, block), block),
                             [&] { return tag(mu); });
                Partition fdmu = bar_bijection_inverse(mu, block);
                fdc.require(ph.at(fdmu) == 1, [&] { return tag(mu); });
            }
        }
    s.checks.push_back(main.take());
    s.checks.push_back(prj.take());
    s.checks.push_back(dom.take());
    s.checks.push_back(bound.take());
    s.checks.push_back(order.take());
    s.checks.push_back(phat.take());
    s.checks.push_back(fdc.take());
    return s;
}

SuiteResult suite_cartan(bool slow, int jobs, int p_filter, int d_filter)
{
    SuiteResult s{"cartan-equality", {}};
    std::vector<std::pair<int, int>> configs = {{3, 1}, {3, 2}, {5, 1}, {5, 2}};
    if (slow)
        configs.push_back({5, 3});
    for (auto [p, d] : configs) {
        if ((p_filter > 0 && p != p_filter) || (d_filter > 0 && d != d_filter))
            continue;
        Check c("p=" + std::to_string(p) + ",d=" + std::to_string(d));
        RouquierBlock block = make_block(p, make_rouquier_core(p, d), d);
        LabeledMatrix<ll> closed =
            unadjusted_cartan(block, CartanMethod::ClosedForm, jobs);
        LabeledMatrix<ll> from_decomp =
            unadjusted_cartan(block, CartanMethod::FromDecomp, jobs);
        LabeledMatrix<ll> wreath = cartan_via_wreath(block, jobs);
        for (size_t r = 0; r < closed.entries.size(); ++r)
            for (size_t col = 0; col < closed.entries[r].size(); ++col)
                c.require(closed.entries[r][col] == from_decomp.entries[r][col] &&
                              closed.entries[r][col] == wreath.entries[r][col],
                          [&] {
                              std::ostringstream os;
                              os << pair_tag(closed.row_labels[r],
                                             closed.col_labels[col])
                                 << " closed=" << closed.entries[r][col]
                                 << " from-decomp=" << from_decomp.entries[r][col]
                                 << " wreath=" << wreath.entries[r][col];
                              return os.str();
                          });
        s.checks.push_back(c.take());
    }
    return s;
}

SuiteResult suite_triangularity(int p_filter, int d_filter)
{
    SuiteResult s{"triangularity", {}};
    Check vanish("vanishing-below-regularization");
    Check value("regularized-value");
    Check diag("dhat-diagonal");
    for (int p : {3, 5})
        for (int d = 1; d <= 2; ++d) {
            if ((p_filter > 0 && p != p_filter) || (d_filter > 0 && d != d_filter))
                continue;
            RouquierBlock block = make_block(p, make_rouquier_core(p, d), d);
            BlockLabels labels = block_partitions(block);
            auto tag = [&](const Partition& lam) {
                return "p=" + std::to_string(p) + " d=" + std::to_string(d) + " " +
                       lam.to_string();
            };
            for (const Partition& lam : labels.all) {
                Partition reg = regularize_rock(lam, block);
                for (const Partition& mu : labels.restricted)
                    if (!dominates(reg, mu))
                        vanish.require(
                            q_decomposition(lam, mu, block).is_zero(),
                            [&] { return tag(lam) + " / " + mu.to_string(); });
                BarQuotient q = bar_quotient(lam, block);
                IntPolynomial expect =
                    IntPolynomial::monomial(1, 2 * q.comps.back().size());
                value.require(q_decomposition(lam, reg, block) == expect,
                              [&] { return tag(lam); });
            }
            for (const Partition& lam : labels.strict) {
                Partition reg = regularize_rock(lam, block);
                BarQuotient q = bar_quotient(lam, block);
                int e = (q.comps[0].num_parts() + parity_a(lam)) / 2;
                ll expect = 1;
                for (int t = 0; t < e; ++t)
                    expect = checked_mul(expect, 2);
                diag.require(dhat(lam, reg, block) == expect,
                             [&] { return tag(lam); });
            }
        }
    s.checks.push_back(vanish.take());
    s.checks.push_back(value.take());
    s.checks.push_back(diag.take());
    return s;
}

}  // namespace

std::vector<std::string> suite_names()
{
    return {"symmfunc-identities", "dominance",       "containment",
            "gg-oracle",           "lfromm",          "cartan-equality",
            "triangularity"};
}

SuiteResult run_suite(const std::string& name, bool slow, int jobs, int p_filter,
                      int d_filter)
{
    if (name == "symmfunc-identities")
        return suite_symmfunc(slow);
    if (name == "dominance")
        return suite_dominance(p_filter, d_filter);
    if (name == "containment")
        return suite_containment(p_filter, d_filter);
    if (name == "gg-oracle")
        return suite_gg_oracle(p_filter);
    if (name == "lfromm")
        return suite_lfromm(p_filter, d_filter);
    if (name == "cartan-equality")
        return suite_cartan(slow, jobs, p_filter, d_filter);
    if (name == "triangularity")
        return suite_triangularity(p_filter, d_filter);
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace spinrock
