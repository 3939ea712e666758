#pragma once

#include <random>
#include <utility>
#include <vector>

#include "spinrock/partition.hpp"

/* p-bar combinatorics: bar-cores and bar-weights, Rouquier core recognition
 * and construction, bar-quotients and their inverse, the succeq order on
 * quotients, containment, regularization, the bijection between p'-labels
 * and restricted labels, and the gth composition bookkeeping.
 */

namespace spinrock {

/* An (ell+1)-tuple of partitions encoding a member of a Rouquier block. */
struct BarQuotient {
    int p = 3;
    std::vector<Partition> comps;  // lambda^(0), ..., lambda^(ell)

    int total() const;
    bool operator==(const BarQuotient&) const = default;
};

/* Block context B^{rho,d} for a d-Rouquier p-bar-core rho. */
struct RouquierBlock {
    int p = 3;
    int ell = 1;                 // (p-1)/2
    int d = 0;
    Partition rho;
    std::vector<int> r_counts;   // r_1, ..., r_ell (parts congruent to i mod p)
};

/* Repeatedly removes p-bars (subtract p from a part, keeping the result
 * p-strict; or delete two parts summing to p) with a deterministic leftmost-
 * applicable-move strategy; returns the core and the number of bars removed.
 * Throws std::invalid_argument if lam is not p-strict. */
std::pair<Partition, int> bar_core(const Partition& lam, int p);

/* Test hook: same computation with a uniformly random applicable move at
 * each step, to validate order-independence. */
std::pair<Partition, int> bar_core_randomized(const Partition& lam, int p,
                                              std::mt19937& rng);

/* Number of nodes of each residue i in I = {0,...,ell}. */
std::vector<int> residue_content(const Partition& lam, int p);

/* Number of parts congruent to i mod p, indexed i = 0..p-1. */
std::vector<int> residue_part_counts(const Partition& lam, int p);

/* rho is d-Rouquier: a p-bar-core with r_1 >= d, r_i >= r_{i-1}+d-1 for
 * 2 <= i <= ell (and no parts of residue > ell). */
bool is_d_rouquier(const Partition& rho, int p, int d);

/* Minimal d-Rouquier core: r_i = d+(i-1)(d-1), parts i, i+p, ..., i+(r_i-1)p. */
Partition make_rouquier_core(int p, int d);

/* Validating factory; throws std::domain_error unless rho is d-Rouquier. */
RouquierBlock make_block(int p, const Partition& rho, int d);

/* Mutually inverse bijections between block members of weight <= d and their
 * bar-quotients.  bar_quotient rejects partitions with a different core or
 * weight above d. */
BarQuotient bar_quotient(const Partition& lam, const RouquierBlock& block);
Partition from_bar_quotient(const RouquierBlock& block, const BarQuotient& q);

/* All members of the block of the given weight (default: the block weight),
 * in canonical label order. */
std::vector<Partition> block_members(const RouquierBlock& block, int weight);

struct BlockLabels {
    std::vector<Partition> all;         // P_p(rho, d)
    std::vector<Partition> strict;      // lambda^(0) strict
    std::vector<Partition> restricted;  // lambda^(ell) empty
    std::vector<Partition> p_prime;     // lambda^(0) empty
};
BlockLabels block_partitions(const RouquierBlock& block);

/* The succeq order on quotients: a >= b iff for every component index k and
 * column count c, sum_{i<k}|a^(i)| + a^(k)'_1+...+a^(k)'_c is at least the
 * corresponding value for b.  Equivalent to anti-dominance of the underlying
 * partitions on a block. */
bool quotient_succeq(const BarQuotient& a, const BarQuotient& b);

/* Componentwise Young-diagram containment b^(i) <= a^(i); equivalent to
 * containment of the underlying partitions. */
bool quotient_contains(const BarQuotient& outer, const BarQuotient& inner);

/* Regularization in a RoCK block: the restricted partition with quotient
 * (lam^(0),...,lam^(ell-2), lam^(ell-1)+lam^(ell)', empty). */
Partition regularize_rock(const Partition& lam, const RouquierBlock& block);

/* The bijection p'-labels -> restricted labels: lam maps to the partition
 * with quotient (lam^(1)', ..., lam^(ell)', empty); and its inverse fd. */
Partition bar_bijection(const Partition& lam_p_prime, const RouquierBlock& block);
Partition bar_bijection_inverse(const Partition& mu_restricted,
                                const RouquierBlock& block);

/* gth(lam) = (|lam^(0)|, ..., |lam^(ell)|), a composition of the weight. */
std::vector<int> gth(const Partition& lam, const RouquierBlock& block);

/* fd on compositions: (m_0,...,m_{ell-1},0) -> (0,m_0,...,m_{ell-1}). */
std::vector<int> fd_composition(const std::vector<int>& m);

/* Dominance on equal-length, equal-sum compositions via prefix sums. */
bool composition_dominates(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace spinrock
