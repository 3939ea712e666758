#include "spinrock/barcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrock {

int BarQuotient::total() const
{
    int t = 0;
    for (const Partition& c : comps)
        t += c.size();
    return t;
}

namespace {

void check_odd_p(int p)
{
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("p must be an odd number >= 3");
}

/* A p-bar move on a descending p-strict part list: either subtract p from
 * the part at one index, or delete a pair of parts summing to p. */
struct BarMove {
    bool pair = false;
    size_t i = 0;
    size_t j = 0;
};

std::vector<BarMove> applicable_moves(const std::vector<int>& parts, int p)
{
    std::vector<BarMove> moves;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < p)
            continue;
        int w = parts[i] - p;
        // The result must stay p-strict: a non-p-divisible value may not
        // collide with an existing part.
        if (w > 0 && w % p != 0 &&
            std::find(parts.begin(), parts.end(), w) != parts.end())
            continue;
        moves.push_back({false, i, 0});
    }
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i] + parts[j] == p)
                moves.push_back({true, i, j});
    return moves;
}

void apply_move(std::vector<int>& parts, const BarMove& m, int p)
{
    if (m.pair) {
        parts.erase(parts.begin() + static_cast<long>(m.j));
        parts.erase(parts.begin() + static_cast<long>(m.i));
    } else {
        parts[m.i] -= p;
        if (parts[m.i] == 0)
            parts.erase(parts.begin() + static_cast<long>(m.i));
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

std::pair<Partition, int> bar_core_impl(const Partition& lam, int p,
                                        std::mt19937* rng)
{
    check_odd_p(p);
    if (!is_p_strict(lam, p))
        throw std::invalid_argument("bar_core: partition is not p-strict");
    std::vector<int> parts = lam.parts;
    int bars = 0;
    for (;;) {
        std::vector<BarMove> moves = applicable_moves(parts, p);
        if (moves.empty())
            break;
        size_t pick = 0;
        if (rng != nullptr)
            pick = std::uniform_int_distribution<size_t>(0, moves.size() - 1)(*rng);
        apply_move(parts, moves[pick], p);
        ++bars;
    }
    return {Partition(std::move(parts)), bars};
}

}  // namespace

std::pair<Partition, int> bar_core(const Partition& lam, int p)
{
    return bar_core_impl(lam, p, nullptr);
}

std::pair<Partition, int> bar_core_randomized(const Partition& lam, int p,
                                              std::mt19937& rng)
{
    return bar_core_impl(lam, p, &rng);
}

std::vector<int> residue_content(const Partition& lam, int p)
{
    check_odd_p(p);
    std::vector<int> counts(static_cast<size_t>(p / 2 + 1), 0);
    for (int part : lam.parts)
        for (int c = 1; c <= part; ++c)
            ++counts[static_cast<size_t>(residue(p, 1, c))];
    return counts;
}

std::vector<int> residue_part_counts(const Partition& lam, int p)
{
    check_odd_p(p);
    std::vector<int> counts(static_cast<size_t>(p), 0);
    for (int part : lam.parts)
        ++counts[static_cast<size_t>(part % p)];
    return counts;
}

bool is_d_rouquier(const Partition& rho, int p, int d)
{
    check_odd_p(p);
    if (d < 0)
        throw std::invalid_argument("is_d_rouquier: negative weight");
    if (!is_p_strict(rho, p))
        return false;
    auto [core, bars] = bar_core(rho, p);
    if (bars != 0)
        return false;
    std::vector<int> counts = residue_part_counts(rho, p);
    int ell = p / 2;
    if (counts[0] != 0)
        return false;
    for (int i = ell + 1; i < p; ++i)
        if (counts[static_cast<size_t>(i)] != 0)
            return false;
    if (counts[1] < d)
        return false;
    for (int i = 2; i <= ell; ++i)
        if (counts[static_cast<size_t>(i)] < counts[static_cast<size_t>(i - 1)] + d - 1)
            return false;
    return true;
}

Partition make_rouquier_core(int p, int d)
{
    check_odd_p(p);
    if (d < 0)
        throw std::invalid_argument("make_rouquier_core: negative weight");
    int ell = p / 2;
    std::vector<int> parts;
    for (int i = 1; i <= ell; ++i) {
        int r = std::max(0, d + (i - 1) * (d - 1));
        for (int j = 0; j < r; ++j)
            parts.push_back(i + j * p);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

RouquierBlock make_block(int p, const Partition& rho, int d)
{
    if (!is_d_rouquier(rho, p, d))
        throw std::domain_error("make_block: core is not d-Rouquier for p=" +
                                std::to_string(p) + ", d=" + std::to_string(d));
    RouquierBlock block;
    block.p = p;
    block.ell = p / 2;
    block.d = d;
    block.rho = rho;
    std::vector<int> counts = residue_part_counts(rho, p);
    block.r_counts.assign(counts.begin() + 1, counts.begin() + 1 + block.ell);
    return block;
}

BarQuotient bar_quotient(const Partition& lam, const RouquierBlock& block)
{
    const int p = block.p;
    if (!is_p_strict(lam, p))
        throw std::domain_error("bar_quotient: partition is not p-strict");
    auto [core, bars] = bar_core(lam, p);
    if (core != block.rho)
        throw std::domain_error("bar_quotient: partition lies outside the block");
    if (bars > block.d)
        throw std::domain_error("bar_quotient: weight exceeds the block weight");

    BarQuotient q;
    q.p = p;
    q.comps.assign(static_cast<size_t>(block.ell + 1), Partition());

    std::vector<std::vector<int>> classes(static_cast<size_t>(p));
    for (int part : lam.parts)
        classes[static_cast<size_t>(part % p)].push_back(part);  // descending

    for (int i = block.ell + 1; i < p; ++i)
        if (!classes[static_cast<size_t>(i)].empty())
            throw std::domain_error("bar_quotient: unexpected part residue class");

    std::vector<int> comp0;
    for (int part : classes[0])
        comp0.push_back(part / p);
    q.comps[0] = Partition(std::move(comp0));

    for (int i = 1; i <= block.ell; ++i) {
        const std::vector<int>& cls = classes[static_cast<size_t>(i)];
        int r = static_cast<int>(cls.size());
        if (r != block.r_counts[static_cast<size_t>(i - 1)])
            throw std::domain_error("bar_quotient: part-count mismatch in a residue class");
        std::vector<int> comp;
        for (int j = 1; j <= r; ++j) {
            int value = cls[static_cast<size_t>(j - 1)] - (r - j) * p - i;
            if (value < 0 || value % p != 0)
                throw std::domain_error("bar_quotient: malformed residue class");
            comp.push_back(value / p);
        }
        q.comps[static_cast<size_t>(i)] = Partition(std::move(comp));
    }
    if (q.total() != bars)
        throw std::domain_error("bar_quotient: quotient size disagrees with the bar-weight");
    return q;
}

Partition from_bar_quotient(const RouquierBlock& block, const BarQuotient& q)
{
    const int p = block.p;
    if (q.p != p || static_cast<int>(q.comps.size()) != block.ell + 1)
        throw std::domain_error("from_bar_quotient: quotient shape mismatch");
    std::vector<int> parts;
    for (int v : q.comps[0].parts)
        parts.push_back(p * v);
    for (int i = 1; i <= block.ell; ++i) {
        const Partition& comp = q.comps[static_cast<size_t>(i)];
        int r = block.r_counts[static_cast<size_t>(i - 1)];
        if (comp.num_parts() > r)
            throw std::domain_error("from_bar_quotient: component has too many parts");
        for (int j = 1; j <= r; ++j)
            parts.push_back(i + (r - j) * p + p * comp.part(j));
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::vector<Partition> block_members(const RouquierBlock& block, int weight)
{
    if (weight < 0 || weight > block.d)
        throw std::invalid_argument("block_members: weight out of range");
    std::vector<Partition> out;
    for (const auto& tuple : enumerate_multipartitions(block.ell + 1, weight)) {
        BarQuotient q{block.p, tuple};
        out.push_back(from_bar_quotient(block, q));
    }
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

BlockLabels block_partitions(const RouquierBlock& block)
{
    BlockLabels labels;
    labels.all = block_members(block, block.d);
    for (const Partition& lam : labels.all) {
        BarQuotient q = bar_quotient(lam, block);
        if (is_strict(q.comps[0]))
            labels.strict.push_back(lam);
        if (q.comps.back().parts.empty())
            labels.restricted.push_back(lam);
        if (q.comps[0].parts.empty())
            labels.p_prime.push_back(lam);
    }
    return labels;
}

bool quotient_succeq(const BarQuotient& a, const BarQuotient& b)
{
    if (a.p != b.p || a.comps.size() != b.comps.size() || a.total() != b.total())
        return false;
    int prefix_a = 0, prefix_b = 0;
    for (size_t k = 0; k < a.comps.size(); ++k) {
        Partition ca = conjugate(a.comps[k]);
        Partition cb = conjugate(b.comps[k]);
        int cols = std::max(ca.num_parts(), cb.num_parts());
        int sa = prefix_a, sb = prefix_b;
        for (int c = 1; c <= cols; ++c) {
            sa += ca.part(c);
            sb += cb.part(c);
            if (sa < sb)
                return false;
        }
        prefix_a += a.comps[k].size();
        prefix_b += b.comps[k].size();
    }
    return true;
}

bool quotient_contains(const BarQuotient& outer, const BarQuotient& inner)
{
    if (outer.p != inner.p || outer.comps.size() != inner.comps.size())
        return false;
    for (size_t k = 0; k < outer.comps.size(); ++k)
        if (!contains(outer.comps[k], inner.comps[k]))
            return false;
    return true;
}

Partition regularize_rock(const Partition& lam, const RouquierBlock& block)
{
    BarQuotient q = bar_quotient(lam, block);
    size_t last = q.comps.size() - 1;
    BarQuotient reg = q;
    reg.comps[last - 1] = plus(q.comps[last - 1], conjugate(q.comps[last]));
    reg.comps[last] = Partition();
    return from_bar_quotient(block, reg);
}

Partition bar_bijection(const Partition& lam_p_prime, const RouquierBlock& block)
{
    BarQuotient q = bar_quotient(lam_p_prime, block);
    if (!q.comps[0].parts.empty())
        throw std::domain_error("bar_bijection: label is not a p'-partition");
    BarQuotient image;
    image.p = block.p;
    image.comps.assign(q.comps.size(), Partition());
    for (size_t j = 0; j + 1 < q.comps.size(); ++j)
        image.comps[j] = conjugate(q.comps[j + 1]);
    return from_bar_quotient(block, image);
}

Partition bar_bijection_inverse(const Partition& mu_restricted,
                                const RouquierBlock& block)
{
    BarQuotient q = bar_quotient(mu_restricted, block);
    if (!q.comps.back().parts.empty())
        throw std::domain_error("bar_bijection_inverse: label is not restricted");
    BarQuotient preimage;
    preimage.p = block.p;
    preimage.comps.assign(q.comps.size(), Partition());
    for (size_t i = 1; i < q.comps.size(); ++i)
        preimage.comps[i] = conjugate(q.comps[i - 1]);
    return from_bar_quotient(block, preimage);
}

std::vector<int> gth(const Partition& lam, const RouquierBlock& block)
{
    BarQuotient q = bar_quotient(lam, block);
    std::vector<int> sizes;
    sizes.reserve(q.comps.size());
    for (const Partition& comp : q.comps)
        sizes.push_back(comp.size());
    return sizes;
}

std::vector<int> fd_composition(const std::vector<int>& m)
{
    if (m.empty() || m.back() != 0)
        throw std::invalid_argument("fd_composition: last entry must be zero");
    std::vector<int> out(m.size(), 0);
    for (size_t i = 0; i + 1 < m.size(); ++i)
        out[i + 1] = m[i];
    return out;
}

bool composition_dominates(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size())
        return false;
    int sa = 0, sb = 0, ta = 0, tb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        ta += a[i];
        tb += b[i];
    }
    if (ta != tb)
        return false;
    for (size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb)
            return false;
    }
    return true;
}

}  // namespace spinrock
