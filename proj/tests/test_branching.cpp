#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "spinrock/branching.hpp"
#include "spinrock/rock.hpp"

using namespace spinrock;

namespace {

RouquierBlock minimal_block(int p, int d)
{
    return make_block(p, make_rouquier_core(p, d), d);
}

/* Independent brute force for cbar: chains of strict partitions adding the
 * prescribed number of nodes per step, no two added nodes in one column. */
ll cbar_brute(const Partition& pi, const std::vector<int>& gamma)
{
    std::function<ll(const Partition&, size_t)> count =
        [&](const Partition& cur, size_t s) -> ll {
        if (s == gamma.size())
            return cur == pi ? 1 : 0;
        ll ways = 0;
        for (const Partition& next : enumerate_strict(cur.size() + gamma[s])) {
                if (!contains(next, cur) || !contains(pi, next))
                    continue;
                // Horizontal strip: column counts grow by at most one.
                Partition cn = conjugate(next), cc = conjugate(cur);
                bool horizontal = true;
                for (int c = 1; c <= cn.num_parts(); ++c)
                    if (cn.part(c) - cc.part(c) > 1)
                        horizontal = false;
                if (horizontal)
                    ways += count(next, s + 1);
            }
        return ways;
    };
    return count(Partition(), 0);
}

}  // namespace

TEST_CASE("adding nodes of a fixed residue")
{
    auto from_empty = add_i_nodes(Partition(), 5, 0);
    REQUIRE(from_empty.size() == 1);
    CHECK(from_empty[0].first == Partition({1}));
    CHECK(from_empty[0].second == 1);
    // (2) -> (3): the new node in column 3 has residue 2 at p=5, and the
    // branching coefficient doubles because (2) is odd and (3) is even.
    auto from_two = add_i_nodes(Partition({2}), 5, 2);
    REQUIRE(from_two.size() == 1);
    CHECK(from_two[0].first == Partition({3}));
    CHECK(from_two[0].second == 2);
    // Summed over residues, every strict one-node extension appears once.
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : enumerate_strict(n)) {
            size_t total = 0;
            for (int i = 0; i <= 2; ++i)
                total += add_i_nodes(lam, 5, i).size();
            size_t extensions = 0;
            for (const Partition& mu : enumerate_strict(n + 1))
                if (contains(mu, lam))
                    ++extensions;
            CHECK(total == extensions);
        }
}

TEST_CASE("branching operators on character vectors")
{
    RouquierBlock block = minimal_block(5, 1);
    CharacterVector unit = CharacterVector::unit(5, block.rho);
    for (int i = 0; i <= 2; ++i) {
        CharacterVector image = apply_F(unit, i);
        auto direct = add_i_nodes(block.rho, 5, i);
        CHECK(image.coeffs.size() == direct.size());
        for (const auto& [mu, a] : direct)
            CHECK(image.at(mu) == a);
    }
}

TEST_CASE("thick induction words")
{
    // ell=2, i=0, k=1: 2 1 1 0 0 (no trailing letters for i=0).
    CHECK(gg_word(2, 0, 1) == std::vector<int>{2, 1, 1, 0, 0});
    CHECK(gg_word(2, 1, 1) == std::vector<int>{2, 1, 0, 0, 1});
    CHECK(gg_word(1, 0, 2) == std::vector<int>{1, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(gg_word(2, 2, 1), std::invalid_argument);
}

TEST_CASE("closed-form induction coefficients match the oracle")
{
    for (int p : {3, 5}) {
        RouquierBlock block = minimal_block(p, 2);
        CharacterVector unit = CharacterVector::unit(p, block.rho);
        for (int k = 1; k <= 2; ++k)
            for (int i = 0; i <= block.ell - 1; ++i) {
                CharacterVector image = apply_gg(unit, i, k);
                for (const Partition& alpha : block_members(block, k)) {
                    if (!is_strict(alpha))
                        continue;
                    CHECK(image.at(alpha) ==
                          gg_coefficient_closed(block.rho, alpha, i, k, block));
                }
                // Inadmissible targets: wrong weight gives zero.
                CHECK(gg_coefficient_closed(block.rho, block.rho, i, k, block) ==
                      0);
            }
    }
}

TEST_CASE("column-strict chain counts")
{
    CHECK(cbar(Partition(), {}) == 1);
    CHECK(cbar(Partition({4}), {4}) == 1);
    CHECK(cbar(Partition({2, 1}), {2, 1}) ==
          cbar_brute(Partition({2, 1}), {2, 1}));
    for (const Partition& pi : enumerate_strict(5))
        for (const std::vector<int>& gamma :
             {std::vector<int>{3, 2}, std::vector<int>{2, 2, 1},
              std::vector<int>{1, 4}, std::vector<int>{5}})
            CHECK(cbar(pi, gamma) == cbar_brute(pi, gamma));
}

TEST_CASE("induced projective characters at weight zero")
{
    RouquierBlock block = minimal_block(5, 0);
    CHECK(Dtilde(block.rho, block) == 1);
    CHECK(phitilde(block.rho, block) == CharacterVector::unit(5, block.rho));
}

TEST_CASE("phitilde coefficients are Dtilde entries")
{
    for (int p : {3, 5}) {
        RouquierBlock block = minimal_block(p, 2);
        BlockLabels labels = block_partitions(block);
        for (const Partition& lam : labels.p_prime) {
            CharacterVector v = phitilde(lam, block);
            CHECK(Dtilde_entry(lam, lam, block) != 0);
            for (const Partition& alpha : labels.p_prime)
                CHECK(v.at(alpha) == Dtilde_entry(lam, alpha, block));
        }
    }
}

TEST_CASE("factor order does not matter")
{
    std::mt19937 rng(4242);
    RouquierBlock block = minimal_block(5, 2);
    for (const Partition& lam : block_partitions(block).p_prime) {
        CharacterVector canonical = phitilde(lam, block);
        std::vector<GGFactor> factors = phitilde_factors(lam, block);
        for (int trial = 0; trial < 3; ++trial) {
            std::shuffle(factors.begin(), factors.end(), rng);
            CHECK(phitilde(lam, block, factors) == canonical);
        }
    }
}

TEST_CASE("lfromm identity on small blocks")
{
    for (int p : {3, 5})
        for (int d = 0; d <= 2; ++d) {
            RouquierBlock block = minimal_block(p, d);
            for (const Partition& lam : block_partitions(block).p_prime)
                CHECK(check_lfromm(lam, block));
        }
}
