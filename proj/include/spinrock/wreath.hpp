#pragma once

#include <vector>

#include "spinrock/partition.hpp"

/* Composition multiplicities and Cartan matrices of the wreath superproduct
 * W_d = A_ell wr S_d: the projective composition-series data, the generic
 * filtration multiplicity, the circ-product multiplicity, and the closed-form
 * Cartan entry.
 */

namespace spinrock {

/* An ell-tuple of partitions (components indexed by J = {0,...,ell-1}). */
using JMultipartition = std::vector<Partition>;

int j_total(const JMultipartition& lam);

std::string j_to_string(const JMultipartition& lam);

/* Canonical ordering of P^J(d): tuples compared componentwise by the
 * canonical partition order. */
bool j_canonical_before(const JMultipartition& a, const JMultipartition& b);

/* One composition factor of a projective indecomposable: a simple index in J
 * and a parity (odd = parity-shifted). */
struct SeriesFactor {
    int index = 0;
    bool odd = false;

    bool operator==(const SeriesFactor&) const = default;
};

using CompSeries = std::vector<SeriesFactor>;

/* Composition factors of P_j over A_ell:
 *   P_0       -> L_0, (odd) L_0, L_1, L_0   (L_1 dropped when ell = 1)
 *   P_j       -> L_j, L_{j-1}, L_{j+1}, L_j   (1 <= j <= ell-2)
 *   P_{ell-1} -> L_{ell-1}, L_{ell-2}, L_{ell-1}   (ell >= 2) */
CompSeries pj_factors(int ell, int j);

/* [P(lam) : L(mu)] computed through the filtration formula: sum over tuples
 * of partitions nu^{(j,s)}, one per series factor, of
 *   prod_j c^{lam^(j)}_{nu^(j,*)} * prod_j c^{mu^(j)}_{M(j) u M'(j)},
 * where M collects the nu at even factors isomorphic to L_j and M' the
 * conjugated nu at odd factors. */
ll filtered_multiplicity(int ell, const JMultipartition& lam,
                         const std::vector<CompSeries>& series,
                         const JMultipartition& mu);

/* [L(lam^1) o ... o L(lam^k) : L(mu)] = prod_j c^{mu^(j)}_{lam^(1,j),...}. */
ll circ_multiplicity(int ell, const std::vector<JMultipartition>& factors,
                     const JMultipartition& mu);

/* Closed-form Cartan entry [P(lam) : L(mu)]: the sum over partition families
 * alpha^(j), beta^(j), gamma^(j), delta^(j) of
 *   prod_j c^{mu^(j)}_{alpha^(j),beta^(j+1),gamma^(j-1),delta^(j)}
 *        * c^{lam^(j)}_{alpha^(j),beta^(j),gamma^(j),delta^(j)}
 * with gamma^(-1) = (beta^(0))', beta^(ell) = gamma^(ell-1) = empty. */
ll wreath_cartan_entry(int ell, const JMultipartition& lam,
                       const JMultipartition& mu);

std::vector<JMultipartition> enumerate_j_labels(int ell, int d);

struct WreathCartan {
    std::vector<JMultipartition> labels;
    std::vector<std::vector<ll>> entries;
};

WreathCartan wreath_cartan_matrix(int ell, int d, int jobs = 1);

}  // namespace spinrock
