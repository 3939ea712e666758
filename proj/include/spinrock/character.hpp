#pragma once

#include <map>

#include "spinrock/barcore.hpp"
#include "spinrock/partition.hpp"

/* Exact integer character vectors: coordinates in the basis {chi^lambda}
 * indexed by strict partitions, together with the boundedness predicates on
 * the gth compositions of the support.
 */

namespace spinrock {

struct CharacterVector {
    int p = 3;
    std::map<Partition, ll> coeffs;  // strict partition -> nonzero coordinate

    static CharacterVector unit(int p, const Partition& lam)
    {
        CharacterVector v;
        v.p = p;
        v.coeffs[lam] = 1;
        return v;
    }

    ll at(const Partition& lam) const
    {
        auto it = coeffs.find(lam);
        return it == coeffs.end() ? 0 : it->second;
    }

    void add(const Partition& lam, ll c)
    {
        if (c == 0)
            return;
        ll& slot = coeffs[lam];
        slot = checked_add(slot, c);
        if (slot == 0)
            coeffs.erase(lam);
    }

    CharacterVector& operator+=(const CharacterVector& o)
    {
        for (const auto& [lam, c] : o.coeffs)
            add(lam, c);
        return *this;
    }

    CharacterVector scaled(ll c) const
    {
        CharacterVector r;
        r.p = p;
        for (const auto& [lam, v] : coeffs)
            r.add(lam, checked_mul(v, c));
        return r;
    }

    bool operator==(const CharacterVector&) const = default;
};

/* v is m-bounded: every chi^alpha in v has m |>= gth(alpha) |>= fd(m), and
 * both extremes are attained in the support. */
bool m_bounded(const CharacterVector& v, const std::vector<int>& m,
               const RouquierBlock& block);

/* v is m-semi-bounded: every gth(alpha) |>= fd(m), attained at fd(m). */
bool m_semi_bounded(const CharacterVector& v, const std::vector<int>& m,
                    const RouquierBlock& block);

}  // namespace spinrock
