#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "spinrock/barcore.hpp"

using namespace spinrock;

namespace {

const Partition kRho54({32, 27, 22, 17, 16, 12, 11, 7, 6, 2, 1});
const Partition kLam54({37, 32, 22, 17, 16, 12, 11, 10, 7, 6, 2, 1});

}  // namespace

TEST_CASE("bar_core removes p-bars")
{
    CHECK(bar_core(Partition({2, 1}), 3) == std::pair{Partition(), 1});
    CHECK(bar_core(kRho54, 5) == std::pair{kRho54, 0});
    CHECK(bar_core(kLam54, 5) == std::pair{kRho54, 4});
    CHECK(bar_core(Partition({16, 12, 7, 2, 1}), 5) ==
          std::pair{Partition({12, 7, 6, 2, 1}), 2});
    CHECK_THROWS_AS(bar_core(Partition({3, 3}), 5), std::invalid_argument);
}

TEST_CASE("bar_core is independent of the removal order")
{
    std::mt19937 rng(20240817);
    for (const Partition& lam :
         {kLam54, Partition({16, 12, 7, 2, 1}), Partition({10, 5, 4, 1})}) {
        auto expected = bar_core(lam, 5);
        for (int trial = 0; trial < 40; ++trial)
            CHECK(bar_core_randomized(lam, 5, rng) == expected);
    }
}

TEST_CASE("residue contents")
{
    CHECK(residue_content(Partition(), 5) == std::vector<int>{0, 0, 0});
    CHECK(residue_content(Partition({1}), 5) == std::vector<int>{1, 0, 0});
    // Residue content is a block invariant: constant across one block.
    RouquierBlock block = make_block(5, make_rouquier_core(5, 1), 1);
    std::vector<Partition> members = block_members(block, 1);
    REQUIRE(members.size() == 3);
    for (const Partition& lam : members)
        CHECK(residue_content(lam, 5) == residue_content(members[0], 5));
}

TEST_CASE("Rouquier core recognition and construction")
{
    CHECK(is_d_rouquier(kRho54, 5, 4));
    CHECK_FALSE(is_d_rouquier(kRho54, 5, 8));
    CHECK_FALSE(is_d_rouquier(Partition({3, 1}), 5, 2));
    CHECK(make_rouquier_core(5, 1) == Partition({2, 1}));
    CHECK(is_d_rouquier(make_rouquier_core(5, 1), 5, 1));
    CHECK(make_rouquier_core(5, 2) == Partition({12, 7, 6, 2, 1}));
    CHECK(make_rouquier_core(5, 3) == Partition({22, 17, 12, 11, 7, 6, 2, 1}));
    CHECK(make_rouquier_core(5, 4) == kRho54);
    for (int p : {3, 5, 7})
        for (int d = 0; d <= 4; ++d)
            CHECK(is_d_rouquier(make_rouquier_core(p, d), p, d));
    CHECK_THROWS_AS(make_block(5, Partition({3, 1}), 2), std::domain_error);
}

TEST_CASE("bar-quotient of the worked example")
{
    RouquierBlock block = make_block(5, kRho54, 4);
    CHECK(block.r_counts == std::vector<int>{4, 7});
    BarQuotient q = bar_quotient(kLam54, block);
    REQUIRE(q.comps.size() == 3);
    CHECK(q.comps[0] == Partition({2}));
    CHECK(q.comps[1] == Partition());
    CHECK(q.comps[2] == Partition({1, 1}));
    CHECK(q.total() == 4);
    CHECK(from_bar_quotient(block, q) == kLam54);
    // The core itself has the empty quotient.
    BarQuotient q0 = bar_quotient(kRho54, block);
    for (const Partition& comp : q0.comps)
        CHECK(comp.empty());
}

TEST_CASE("quotient round trip on whole blocks")
{
    for (int d = 1; d <= 3; ++d) {
        RouquierBlock block = make_block(5, make_rouquier_core(5, d), d);
        for (int w = 0; w <= d; ++w)
            for (const Partition& lam : block_members(block, w)) {
                BarQuotient q = bar_quotient(lam, block);
                CHECK(q.total() == w);
                CHECK(from_bar_quotient(block, q) == lam);
            }
    }
}

TEST_CASE("block label classes")
{
    RouquierBlock b51 = make_block(5, make_rouquier_core(5, 1), 1);
    BlockLabels l51 = block_partitions(b51);
    CHECK(l51.all.size() == 3);
    CHECK(l51.restricted.size() == 2);
    CHECK(l51.p_prime.size() == 2);
    RouquierBlock b32 = make_block(3, make_rouquier_core(3, 2), 2);
    CHECK(block_partitions(b32).all.size() == 5);
    // p' and restricted classes are equinumerous in every tested block.
    for (int p : {3, 5})
        for (int d = 1; d <= 3; ++d) {
            BlockLabels labels =
                block_partitions(make_block(p, make_rouquier_core(p, d), d));
            CHECK(labels.p_prime.size() == labels.restricted.size());
        }
}

TEST_CASE("succeq on quotients")
{
    RouquierBlock block = make_block(5, make_rouquier_core(5, 1), 1);
    std::vector<Partition> members = block_members(block, 1);
    BarQuotient first = bar_quotient(members.back(), block);   // node in comp 0
    BarQuotient last = bar_quotient(members.front(), block);   // node in comp ell
    CHECK(quotient_succeq(first, first));
    CHECK(quotient_succeq(first, last));
    CHECK_FALSE(quotient_succeq(last, first));
}

TEST_CASE("containment on quotients")
{
    RouquierBlock block = make_block(5, make_rouquier_core(5, 2), 2);
    BarQuotient empty = bar_quotient(block.rho, block);
    for (int w = 0; w <= 2; ++w)
        for (const Partition& lam : block_members(block, w))
            CHECK(quotient_contains(bar_quotient(lam, block), empty));
    // Incomparable pair: single nodes in different components.
    std::vector<Partition> ones = block_members(block, 1);
    BarQuotient a = bar_quotient(ones[0], block);
    BarQuotient b = bar_quotient(ones[1], block);
    CHECK_FALSE(quotient_contains(a, b));
    CHECK_FALSE(quotient_contains(b, a));
}

TEST_CASE("regularization")
{
    RouquierBlock b54 = make_block(5, kRho54, 4);
    Partition reg = regularize_rock(kLam54, b54);
    BarQuotient q = bar_quotient(reg, b54);
    CHECK(q.comps[0] == Partition({2}));
    CHECK(q.comps[1] == Partition({2}));
    CHECK(q.comps[2] == Partition());
    // Restricted labels are fixed points.
    RouquierBlock b52 = make_block(5, make_rouquier_core(5, 2), 2);
    for (const Partition& mu : block_partitions(b52).restricted)
        CHECK(regularize_rock(mu, b52) == mu);
}

TEST_CASE("bijection between p-prime and restricted labels")
{
    RouquierBlock block = make_block(5, make_rouquier_core(5, 2), 2);
    // Quotient (empty,(1),(1)) maps to ((1),(1),empty).
    BarQuotient q{5, {Partition(), Partition({1}), Partition({1})}};
    Partition lam = from_bar_quotient(block, q);
    BarQuotient image = bar_quotient(bar_bijection(lam, block), block);
    CHECK(image.comps[0] == Partition({1}));
    CHECK(image.comps[1] == Partition({1}));
    CHECK(image.comps[2] == Partition());
    // Exhaustive bijectivity at d=3.
    RouquierBlock b53 = make_block(5, make_rouquier_core(5, 3), 3);
    BlockLabels labels = block_partitions(b53);
    std::vector<Partition> images;
    for (const Partition& lp : labels.p_prime) {
        Partition mu = bar_bijection(lp, b53);
        CHECK(is_restricted(mu, 5));
        CHECK(bar_bijection_inverse(mu, b53) == lp);
        images.push_back(mu);
    }
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    CHECK(images.size() == labels.restricted.size());
}

TEST_CASE("gth compositions and composition dominance")
{
    RouquierBlock b50 = make_block(5, make_rouquier_core(5, 0), 0);
    CHECK(gth(b50.rho, b50) == std::vector<int>{0, 0, 0});
    RouquierBlock b54 = make_block(5, kRho54, 4);
    CHECK(gth(kLam54, b54) == std::vector<int>{2, 0, 2});
    CHECK(fd_composition({2, 1, 0}) == std::vector<int>{0, 2, 1});
    CHECK(composition_dominates({2, 0, 1}, {1, 1, 1}));
    CHECK_FALSE(composition_dominates({1, 1, 1}, {2, 0, 1}));
    CHECK(composition_dominates({1, 1}, {1, 1}));
}
