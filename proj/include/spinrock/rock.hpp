#pragma once

#include <vector>

#include "spinrock/barcore.hpp"
#include "spinrock/character.hpp"
#include "spinrock/partition.hpp"
#include "spinrock/polynomial.hpp"
#include "spinrock/wreath.hpp"

/* Block-level numerology for a RoCK block: q-decomposition polynomials,
 * decomposition numbers, supermodule types and Brauer factors, virtual
 * projective characters, and the unadjusted Cartan matrix by two routes.
 */

namespace spinrock {

template <class T>
struct LabeledMatrix {
    std::vector<Partition> row_labels;
    std::vector<Partition> col_labels;
    std::vector<std::vector<T>> entries;
};

/* The q-decomposition polynomial d_{lam,mu}(q): the sum over partition
 * families sigma^(0..ell-1), tau^(1..ell) of
 *   K^{-1}_{lam^(0),sigma^(0)}(-q^2)
 *   * prod_{i=1}^{ell} c^{lam^(i)}_{sigma^(i),tau^(i)}
 *                      c^{mu^(i-1)}_{sigma^(i-1),tau^(i)'}
 * (sigma^(ell) read as empty), times q^{2 sum_i i(|lam^(i)|-|mu^(i)|)}. */
IntPolynomial q_decomposition(const Partition& lam, const Partition& mu,
                              const RouquierBlock& block);

/* D_{lam,mu} = 2^{floor((h(lam^(0))+1-a(lam))/2)} d_{lam,mu}(1), lam strict. */
ll big_D(const Partition& lam, const Partition& mu, const RouquierBlock& block);

/* dd_{lam,mu} = 2^{floor((h(lam^(0))+a(lam))/2)} d_{lam,mu}(1): the
 * decomposition number [S(lam) : D(mu)]. */
ll dhat(const Partition& lam, const Partition& mu, const RouquierBlock& block);

enum class SuperType { M, Q };

/* S(lam) is type M iff a(lam) = 0. */
SuperType type_of_S(const Partition& lam);

/* D(mu) is type M iff mu has an even number of nodes of nonzero residue. */
SuperType type_of_D(const Partition& mu, int p);

/* Brauer-reciprocity factor relating dhat to big_D, as a ratio num/den. */
struct BrauerFactor {
    int num = 1;
    int den = 1;

    bool operator==(const BrauerFactor&) const = default;
};
BrauerFactor brauer_factor(SuperType s_type, SuperType d_type);

/* Decomposition matrix: rows strict lam, cols restricted mu, entries dhat. */
LabeledMatrix<ll> decomp_matrix(const RouquierBlock& block, int jobs = 1);

/* Same layout with the full q-polynomials. */
LabeledMatrix<IntPolynomial> qdecomp_matrix(const RouquierBlock& block,
                                            int jobs = 1);

/* phat_mu = sum_lam D_{lam,mu} chi^lam. */
CharacterVector phat_character(const Partition& mu, const RouquierBlock& block);

enum class CartanMethod { ClosedForm, FromDecomp };

/* Unadjusted Cartan matrix over restricted labels.  FromDecomp evaluates
 * C_{mu,nu} = sum_lam dhat(lam,mu) big_D(lam,nu); ClosedForm evaluates the
 * equivalent product-sum over partition families phi, psi, chi, omega. */
LabeledMatrix<ll> unadjusted_cartan(const RouquierBlock& block,
                                    CartanMethod method, int jobs = 1);

/* The relabeling iota of restricted block labels into P^J(d): component j
 * (0-based) is mu^(j) when j+1 is even and (mu^(j))' when j+1 is odd. */
JMultipartition iota(const Partition& mu, const RouquierBlock& block);

/* Cartan matrix over restricted labels with entries taken from the wreath
 * closed form: entry (nu, mu) = wreath_cartan_entry(ell, iota(nu), iota(mu)). */
LabeledMatrix<ll> cartan_via_wreath(const RouquierBlock& block, int jobs = 1);

}  // namespace spinrock
