#include <doctest.h>

#include "spinrock/rock.hpp"

using namespace spinrock;

namespace {

RouquierBlock minimal_block(int p, int d)
{
    return make_block(p, make_rouquier_core(p, d), d);
}

ll pow2(int e)
{
    ll r = 1;
    for (int t = 0; t < e; ++t)
        r = checked_mul(r, 2);
    return r;
}

}  // namespace

TEST_CASE("q-decomposition diagonal and regularization values")
{
    for (int p : {3, 5})
        for (int d = 1; d <= 2; ++d) {
            RouquierBlock block = minimal_block(p, d);
            BlockLabels labels = block_partitions(block);
            for (const Partition& mu : labels.restricted)
                CHECK(q_decomposition(mu, mu, block) ==
                      IntPolynomial::constant(1));
            for (const Partition& lam : labels.all) {
                Partition reg = regularize_rock(lam, block);
                BarQuotient q = bar_quotient(lam, block);
                CHECK(q_decomposition(lam, reg, block) ==
                      IntPolynomial::monomial(1, 2 * q.comps.back().size()));
            }
        }
}

TEST_CASE("q-decomposition vanishes below the regularization")
{
    RouquierBlock block = minimal_block(5, 2);
    BlockLabels labels = block_partitions(block);
    for (const Partition& lam : labels.all) {
        Partition reg = regularize_rock(lam, block);
        for (const Partition& mu : labels.restricted)
            if (!dominates(reg, mu))
                CHECK(q_decomposition(lam, mu, block).is_zero());
    }
}

TEST_CASE("decomposition-number prefactors")
{
    RouquierBlock b0 = minimal_block(5, 0);
    CHECK(big_D(b0.rho, b0.rho, b0) == 1);
    CHECK(dhat(b0.rho, b0.rho, b0) == 1);
    for (int p : {3, 5})
        for (int d = 1; d <= 2; ++d) {
            RouquierBlock block = minimal_block(p, d);
            for (const Partition& lam : block_partitions(block).strict) {
                Partition reg = regularize_rock(lam, block);
                BarQuotient q = bar_quotient(lam, block);
                int h = q.comps[0].num_parts();
                int a = parity_a(lam);
                CHECK(big_D(lam, reg, block) == pow2((h + 1 - a) / 2));
                CHECK(dhat(lam, reg, block) == pow2((h + a) / 2));
            }
        }
}

TEST_CASE("supermodule types and Brauer factors")
{
    CHECK(type_of_S(Partition({1})) == SuperType::M);
    CHECK(type_of_S(Partition({2, 1})) == SuperType::Q);
    CHECK(type_of_D(Partition({2}), 5) == SuperType::Q);
    CHECK(type_of_D(Partition(), 5) == SuperType::M);
    CHECK(brauer_factor(SuperType::M, SuperType::M) == BrauerFactor{1, 1});
    CHECK(brauer_factor(SuperType::Q, SuperType::M) == BrauerFactor{2, 1});
    CHECK(brauer_factor(SuperType::M, SuperType::Q) == BrauerFactor{1, 2});
    CHECK(brauer_factor(SuperType::Q, SuperType::Q) == BrauerFactor{1, 1});
}

TEST_CASE("D-type is constant on a block and dhat factors through big_D")
{
    for (int p : {3, 5})
        for (int d = 1; d <= 2; ++d) {
            RouquierBlock block = minimal_block(p, d);
            BlockLabels labels = block_partitions(block);
            SuperType d_type = type_of_D(labels.restricted.front(), p);
            for (const Partition& mu : labels.restricted)
                CHECK(type_of_D(mu, p) == d_type);
            for (const Partition& lam : labels.strict)
                for (const Partition& mu : labels.restricted) {
                    BrauerFactor f = brauer_factor(type_of_S(lam), d_type);
                    ll d_val = big_D(lam, mu, block);
                    CHECK(checked_mul(d_val, f.num) % f.den == 0);
                    CHECK(dhat(lam, mu, block) ==
                          checked_mul(d_val, f.num) / f.den);
                }
        }
}

TEST_CASE("decomposition matrix shape and positivity")
{
    RouquierBlock block = minimal_block(5, 1);
    LabeledMatrix<ll> mat = decomp_matrix(block);
    REQUIRE(mat.row_labels.size() == 3);
    REQUIRE(mat.col_labels.size() == 2);
    for (const auto& row : mat.entries)
        for (ll v : row)
            CHECK(v >= 0);
    // Each column is hit by the regularization of some row.
    for (size_t c = 0; c < mat.col_labels.size(); ++c) {
        bool hit = false;
        for (size_t r = 0; r < mat.row_labels.size(); ++r)
            if (regularize_rock(mat.row_labels[r], block) == mat.col_labels[c])
                hit = hit || mat.entries[r][c] != 0;
        CHECK(hit);
    }
}

TEST_CASE("fd column entries are nonzero")
{
    for (int p : {3, 5})
        for (int d = 1; d <= 2; ++d) {
            RouquierBlock block = minimal_block(p, d);
            for (const Partition& mu : block_partitions(block).restricted) {
                Partition fdmu = bar_bijection_inverse(mu, block);
                CHECK(gth(fdmu, block) == fd_composition(gth(mu, block)));
                CHECK(dhat(fdmu, mu, block) != 0);
            }
        }
}

TEST_CASE("phat characters")
{
    RouquierBlock b0 = minimal_block(5, 0);
    CHECK(phat_character(b0.rho, b0) == CharacterVector::unit(5, b0.rho));
    RouquierBlock block = minimal_block(5, 1);
    for (const Partition& mu : block_partitions(block).restricted) {
        CharacterVector ph = phat_character(mu, block);
        for (const auto& [lam, coeff] : ph.coeffs) {
            CHECK(is_strict(lam));
            CHECK(coeff == big_D(lam, mu, block));
        }
    }
}

TEST_CASE("unadjusted Cartan matrix basics")
{
    RouquierBlock b0 = minimal_block(5, 0);
    LabeledMatrix<ll> c0 = unadjusted_cartan(b0, CartanMethod::ClosedForm);
    REQUIRE(c0.entries.size() == 1);
    CHECK(c0.entries[0][0] == 1);
    RouquierBlock block = minimal_block(5, 2);
    LabeledMatrix<ll> mat = unadjusted_cartan(block, CartanMethod::ClosedForm, 2);
    for (size_t r = 0; r < mat.entries.size(); ++r)
        for (size_t c = 0; c < mat.entries.size(); ++c)
            CHECK(mat.entries[r][c] == mat.entries[c][r]);
}

TEST_CASE("iota relabeling")
{
    RouquierBlock block = minimal_block(5, 2);
    JMultipartition empty = iota(block.rho, block);
    REQUIRE(empty.size() == 2);
    CHECK(empty[0].empty());
    CHECK(empty[1].empty());
    // A single box is fixed by conjugation in either component.
    for (const Partition& mu : block_members(block, 1))
        if (is_restricted(mu, 5)) {
            JMultipartition image = iota(mu, block);
            int boxes = 0;
            for (const Partition& comp : image)
                boxes += comp.size();
            CHECK(boxes == 1);
        }
}

TEST_CASE("wreath route agrees with the closed form")
{
    for (int p : {3, 5}) {
        RouquierBlock block = minimal_block(p, 2);
        LabeledMatrix<ll> closed =
            unadjusted_cartan(block, CartanMethod::ClosedForm, 2);
        LabeledMatrix<ll> wreath = cartan_via_wreath(block, 2);
        CHECK(closed.row_labels == wreath.row_labels);
        CHECK(closed.entries == wreath.entries);
    }
}
