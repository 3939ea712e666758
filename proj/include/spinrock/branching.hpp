#pragma once

#include <utility>
#include <vector>

#include "spinrock/barcore.hpp"
#include "spinrock/character.hpp"
#include "spinrock/partition.hpp"

/* Independent oracle layer: the branching operator F_i on character vectors,
 * thick Gelfand-Graev induction f^{i,k}, the induced projective characters
 * phitilde_lambda, and the matching closed-form coefficients.
 */

namespace spinrock {

/* All strict mu = lam + one node of residue i, with the branching
 * coefficient a = 2 when lam is odd and mu is even, else 1. */
std::vector<std::pair<Partition, ll>> add_i_nodes(const Partition& lam, int p,
                                                  int i);

/* Linear extension of add_i_nodes to character vectors. */
CharacterVector apply_F(const CharacterVector& v, int i);

/* The thick Gelfand-Graev operator f^{i,k} for i in J, applied as the word
 * l^k (l-1)^{2k} ... (i+1)^{2k} i^k ... 1^k 0^{2k} 1^k ... i^k, leftmost
 * letter first. */
CharacterVector apply_gg(const CharacterVector& v, int i, int k);

/* The residue word of g^{i,k} in application order. */
std::vector<int> gg_word(int ell, int i, int k);

/* Closed-form coefficient of chi^alpha in f^{i,k} chi^lam: zero unless the
 * quotient of alpha is obtained from that of lam by adding k nodes in
 * components i and i+1, no two in the same column of component i nor the
 * same row of component i+1; else
 *   2^{f(lam,alpha) + (k(p-2)+h(lam^(0))-h(alpha^(0))+a(lam)-a(alpha))/2}
 *     * (2k)!^{ell-i} * k!^{2i+1},
 * where f counts columns c with a node of alpha^(0)\lam^(0) in column c but
 * none in column c+1. */
ll gg_coefficient_closed(const Partition& lam, const Partition& alpha, int i,
                         int k, const RouquierBlock& block);

/* Number of chains from the empty partition to pi adding gamma_s nodes at
 * step s, all in distinct columns, strict at every stage. */
ll cbar(const Partition& pi, const std::vector<int>& gamma);

/* Dtilde_lambda = 2^{(d(p-2)+a(rho)-a(lam))/2}
 *   * prod_{i,r} (2 lam^(i)'_r)!^{ell-i+1} (lam^(i)'_r)!^{2i-1}. */
ll Dtilde(const Partition& lam, const RouquierBlock& block);

/* Dtilde_{lam,alpha} = Dtilde_lambda * sum over composition splittings
 * beta^(i)+gamma^(i) = lam^(i)' of
 *   cbar(alpha^(0); gamma^(1))
 *     * prod_i [(M^{beta^(i)} (x) sgn) o M^{gamma^(i+1)} : S^{alpha^(i)}],
 * with gamma^(ell+1) empty. */
ll Dtilde_entry(const Partition& lam, const Partition& alpha,
                const RouquierBlock& block);

/* One induction factor (i, k) of phitilde: apply f^{i-1, lam^(i)'_r}. */
struct GGFactor {
    int i = 0;  // component index 1..ell
    int k = 1;  // node count lam^(i)'_r

    bool operator==(const GGFactor&) const = default;
};

/* Canonical factor list: i ascending 1..ell, r ascending. */
std::vector<GGFactor> phitilde_factors(const Partition& lam,
                                       const RouquierBlock& block);

/* phitilde_lambda = prod of f^{i-1, lam^(i)'_r} applied to chi^rho, in the
 * given factor order (any order gives the same result; tested, not assumed). */
CharacterVector phitilde(const Partition& lam, const RouquierBlock& block,
                         const std::vector<GGFactor>& factors);
CharacterVector phitilde(const Partition& lam, const RouquierBlock& block);

/* True iff phitilde(lam) equals
 * Dtilde_lambda * sum_mu prod_i [M^{lam^(i)'} : S^{mu^(i-1)}] phat_mu. */
bool check_lfromm(const Partition& lam, const RouquierBlock& block);

}  // namespace spinrock
