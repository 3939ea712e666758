#include "spinrock/character.hpp"

namespace spinrock {

bool m_bounded(const CharacterVector& v, const std::vector<int>& m,
               const RouquierBlock& block)
{
    std::vector<int> low = fd_composition(m);
    bool saw_top = false, saw_bottom = false;
    for (const auto& [alpha, c] : v.coeffs) {
        std::vector<int> g = gth(alpha, block);
        if (!composition_dominates(m, g) || !composition_dominates(g, low))
            return false;
        saw_top = saw_top || g == m;
        saw_bottom = saw_bottom || g == low;
    }
    return saw_top && saw_bottom;
}

bool m_semi_bounded(const CharacterVector& v, const std::vector<int>& m,
                    const RouquierBlock& block)
{
    std::vector<int> low = fd_composition(m);
    bool saw_bottom = false;
    for (const auto& [alpha, c] : v.coeffs) {
        std::vector<int> g = gth(alpha, block);
        if (!composition_dominates(g, low))
            return false;
        saw_bottom = saw_bottom || g == low;
    }
    return saw_bottom;
}

}  // namespace spinrock
