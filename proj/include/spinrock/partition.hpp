#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

/* Core partition arithmetic: predicates, enumeration and residue
 * combinatorics.  A partition is stored as its list of positive parts in
 * weakly decreasing order; the empty partition is the empty list.
 */

namespace spinrock {

using ll = long long;

/* 64-bit arithmetic with overflow detection.  Desk-scale computations stay
 * far below 2^63; an overflow here indicates a logic error or an input far
 * outside the supported range, so we throw rather than promote silently. */
inline ll checked_add(ll a, ll b)
{
    ll r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

inline ll checked_mul(ll a, ll b)
{
    ll r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

struct Partition {
    std::vector<int> parts;  // weakly decreasing, all positive

    Partition() = default;

    /* Validating constructor: strips trailing zeros, rejects negative or
     * increasing part lists. */
    explicit Partition(std::vector<int> p);

    int size() const;                    // |lambda|
    int num_parts() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    /* 1-based part access; parts beyond the last are 0. */
    int part(int r) const
    {
        return (r >= 1 && r <= num_parts()) ? parts[static_cast<size_t>(r - 1)] : 0;
    }

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;       // "(3,1)", "()" for the empty partition
};

/* Canonical display order used for all matrix labels and enumerations:
 * larger size first, then reverse-lexicographic ((n) before (n-1,1) before
 * ... before (1^n)). */
bool canonical_before(const Partition& a, const Partition& b);

Partition conjugate(const Partition& lam);

/* Dominance order: true iff |lam|=|mu| and every prefix sum of lam is >=
 * the corresponding prefix sum of mu. */
bool dominates(const Partition& lam, const Partition& mu);

/* Partwise sum and sorted multiset union of parts. */
Partition plus(const Partition& lam, const Partition& mu);
Partition union_sorted(const Partition& lam, const Partition& mu);

/* Young-diagram containment mu <= lam. */
bool contains(const Partition& outer, const Partition& inner);

/* a(lambda): 0 if lambda has an even number of positive even parts, else 1.
 * lambda is called even when a(lambda)=0 and odd otherwise. */
int parity_a(const Partition& lam);

bool is_strict(const Partition& lam);
bool is_p_strict(const Partition& lam, int p);
/* Restricted p-strict: for every r (including the trailing zero part),
 * lambda_r - lambda_{r+1} < p, or = p with p not dividing lambda_r. */
bool is_restricted(const Partition& lam, int p);
bool is_p_prime(const Partition& lam, int p);

/* Complete enumerations in canonical order. */
std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_strict(int n);
/* All tuples of `components` partitions with total size d, in canonical
 * order (first component runs through sizes d..0, partitions of each size in
 * canonical order, recursing on the remaining components). */
std::vector<std::vector<Partition>> enumerate_multipartitions(int components, int d);

/* Residue of a node in column col (independent of the row): the smaller of
 * (col-1) mod p and (-col) mod p, an element of I = {0,...,(p-1)/2}. */
int residue(int p, int row, int col);

/* Parse "3,1" / "" / "(3,1)" into a partition; throws std::invalid_argument
 * on malformed input. */
Partition parse_partition(const std::string& text);

}  // namespace spinrock
