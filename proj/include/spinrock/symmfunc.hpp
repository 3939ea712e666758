#pragma once

#include <map>
#include <vector>

#include "spinrock/partition.hpp"
#include "spinrock/polynomial.hpp"

/* Exact symmetric-function coefficients: Kostka numbers, Littlewood-
 * Richardson coefficients (binary and multi-argument), Kostka-Foulkes
 * polynomials via the charge statistic, inverse Kostka polynomials via
 * unitriangular inversion, a Schur-P expansion oracle via shifted marked
 * tableaux, and the permutation-module multiplicities
 * [(M^beta (x) sgn) o M^gamma : S^alpha].
 */

namespace spinrock {

/* Memoization cutoff: coefficients for objects of size above the limit are
 * computed but not cached (env SPINROCK_CACHE_LIMIT, default 12). */
int cache_limit();

/* [M^lambda : S^mu] = number of semistandard tableaux of shape mu and
 * content lambda (a composition; zero parts are dropped). */
ll kostka_number(const Partition& shape, const std::vector<int>& content);

/* Binary Littlewood-Richardson coefficient c^lambda_{mu,nu}, by lattice-word
 * enumeration of LR skew tableaux of shape lambda/mu and content nu.
 * Returns 0 on size mismatch. */
ll lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

/* Multi-argument coefficient c^lambda_M for a multiset M of factors,
 * computed by folding; independent of the argument order. */
ll lr_multi(const Partition& lam, const std::vector<Partition>& factors);

/* Charge of a word over {1,..,m} whose content is a partition. */
int charge(const std::vector<int>& word);

/* Kostka-Foulkes polynomial K_{sigma lambda}(t) = sum of t^charge over SSYT
 * of shape sigma and content lambda. */
IntPolynomial kostka_foulkes(const Partition& sigma, const Partition& lam);

/* Inverse Kostka polynomial K^{-1}_{lambda sigma}(t): the coefficient of
 * s_sigma in the Hall-Littlewood function P_lambda; computed by inverting
 * the unitriangular matrix (K_{sigma lambda}(t)) per size block. */
IntPolynomial inverse_kostka(const Partition& lam, const Partition& sigma);

/* Exact evaluation K^{-1}_{lambda sigma}(value). */
ll inverse_kostka_at(const Partition& lam, const Partition& sigma, ll value);

/* Independent oracle: the Schur expansion of the Schur P-function P_lambda
 * (lambda strict), via shifted marked tableaux in |lambda| variables and
 * dominance-triangular elimination against Schur monomial expansions.
 * Must equal sigma -> K^{-1}_{lambda sigma}(-1).  Throws std::runtime_error
 * if the elimination leaves a nonzero remainder. */
std::map<Partition, ll> schur_p_expansion(const Partition& lam);

/* Independent oracle: Schur expansion of s_mu * s_nu computed in the
 * monomial basis with |mu|+|nu| variables and triangular reduction. */
std::map<Partition, ll> lr_expand_monomial_oracle(const Partition& mu,
                                                  const Partition& nu);

/* Multi-factor version of the monomial-basis oracle. */
std::map<Partition, ll> schur_product_expand(const std::vector<Partition>& factors);

/* [(M^beta (x) sgn) o M^gamma : S^alpha]
 *   = c^alpha_{(1^{beta_1}),(1^{beta_2}),...,(gamma_1),(gamma_2),...};
 * beta, gamma are compositions (zero parts dropped). */
ll perm_sgn_perm_mult(const std::vector<int>& beta, const std::vector<int>& gamma,
                      const Partition& alpha);

/* All partitions pi with lower <= pi <= upper (containment) and |pi| = size.
 * Shared enumeration helper for the bounded coefficient sums. */
std::vector<Partition> partitions_between(const Partition& lower,
                                          const Partition& upper, int size);

/* All partitions obtained from nu by adding a horizontal strip of the given
 * size (used by tableau chain enumerations). */
std::vector<Partition> add_horizontal_strips(const Partition& nu, int strip);

}  // namespace spinrock
