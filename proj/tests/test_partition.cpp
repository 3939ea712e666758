#include <doctest.h>

#include <stdexcept>

#include "spinrock/partition.hpp"

using namespace spinrock;

TEST_CASE("partition construction validates input")
{
    CHECK(Partition({3, 1}).parts == std::vector<int>{3, 1});
    CHECK(Partition({3, 1, 0, 0}).parts == std::vector<int>{3, 1});
    CHECK(Partition().empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("size and part access")
{
    Partition lam({4, 2, 1});
    CHECK(lam.size() == 7);
    CHECK(lam.num_parts() == 3);
    CHECK(lam.part(1) == 4);
    CHECK(lam.part(3) == 1);
    CHECK(lam.part(4) == 0);
    CHECK(lam.part(100) == 0);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    for (int n = 0; n <= 7; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("dominance order")
{
    CHECK(dominates(Partition({2, 1}), Partition({2, 1})));
    CHECK(dominates(Partition({3}), Partition({1, 1, 1})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    CHECK_FALSE(dominates(Partition({3}), Partition({2})));  // unequal sizes
    // Antisymmetry and transitivity on all partitions of 6.
    std::vector<Partition> p6 = enumerate_partitions(6);
    for (const Partition& a : p6)
        for (const Partition& b : p6) {
            if (dominates(a, b) && dominates(b, a))
                CHECK(a == b);
            for (const Partition& c : p6)
                if (dominates(a, b) && dominates(b, c))
                    CHECK(dominates(a, c));
        }
    // Conjugation reverses dominance.
    for (const Partition& a : p6)
        for (const Partition& b : p6)
            CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
}

TEST_CASE("plus and union_sorted")
{
    CHECK(plus(Partition({3, 1}), Partition({4, 1, 1})) == Partition({7, 2, 1}));
    CHECK(union_sorted(Partition({3, 1}), Partition({4, 1, 1})) ==
          Partition({4, 3, 1, 1, 1}));
    CHECK(plus(Partition({2, 2}), Partition()) == Partition({2, 2}));
    CHECK(union_sorted(Partition({2, 2}), Partition()) == Partition({2, 2}));
}

TEST_CASE("containment")
{
    CHECK(contains(Partition({3, 2}), Partition({2, 1})));
    CHECK(contains(Partition({3, 2}), Partition()));
    CHECK_FALSE(contains(Partition({3}), Partition({1, 1})));
    CHECK_FALSE(contains(Partition({2, 1}), Partition({3})));
}

TEST_CASE("parity of even-part count")
{
    CHECK(parity_a(Partition()) == 0);
    CHECK(parity_a(Partition({4, 2, 1})) == 0);
    CHECK(parity_a(Partition({2, 1})) == 1);
}

TEST_CASE("strictness predicates")
{
    CHECK(is_strict(Partition({3, 2})));
    CHECK_FALSE(is_strict(Partition({2, 2})));
    CHECK(is_p_strict(Partition({5, 5, 3}), 5));
    CHECK_FALSE(is_p_strict(Partition({3, 3, 1}), 5));
    CHECK(is_p_prime(Partition({6, 2}), 5));
    CHECK_FALSE(is_p_prime(Partition({5, 2, 1}), 5));
}

TEST_CASE("restrictedness")
{
    // The gap condition counts the trailing zero part: a gap of exactly p is
    // allowed only above a part that p does not divide.
    CHECK(is_restricted(Partition({6, 1}), 5));
    CHECK_FALSE(is_restricted(Partition({5}), 5));
    CHECK_FALSE(is_restricted(Partition({7, 1}), 5));
    CHECK(is_restricted(Partition({4}), 5));
    CHECK(is_restricted(Partition(), 5));
}

TEST_CASE("enumeration in canonical order")
{
    std::vector<Partition> p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == Partition());
    std::vector<Partition> s4 = enumerate_strict(4);
    REQUIRE(s4.size() == 2);
    CHECK(s4[0] == Partition({4}));
    CHECK(s4[1] == Partition({3, 1}));
    CHECK(enumerate_multipartitions(2, 2).size() == 5);
    // Canonical order is total and consistent with the enumeration.
    std::vector<Partition> p5 = enumerate_partitions(5);
    for (size_t i = 0; i + 1 < p5.size(); ++i)
        CHECK(canonical_before(p5[i], p5[i + 1]));
}

TEST_CASE("node residues")
{
    CHECK(residue(5, 1, 1) == 0);
    CHECK(residue(5, 3, 3) == 2);
    CHECK(residue(5, 1, 6) == 0);
    // Row-independent, periodic pattern 0,1,...,ell,...,1,0.
    for (int col = 1; col <= 20; ++col) {
        CHECK(residue(5, 1, col) == residue(5, 7, col));
        CHECK(residue(5, 1, col) == residue(5, 1, col + 5));
    }
    CHECK(residue(3, 1, 2) == 1);
    CHECK(residue(3, 1, 3) == 0);
}

TEST_CASE("partition parsing")
{
    CHECK(parse_partition("3,1") == Partition({3, 1}));
    CHECK(parse_partition("(3,1)") == Partition({3, 1}));
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition(" 4 , 2 ") == Partition({4, 2}));
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
}

TEST_CASE("to_string round trip")
{
    CHECK(Partition({3, 1}).to_string() == "(3,1)");
    CHECK(Partition().to_string() == "()");
    for (const Partition& lam : enumerate_partitions(6))
        CHECK(parse_partition(lam.to_string()) == lam);
}

TEST_CASE("checked arithmetic overflows loudly")
{
    ll big = 1;
    for (int i = 0; i < 62; ++i)
        big *= 2;
    CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 4), std::overflow_error);
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
}
