#include <gtest/gtest.h>

#include "siegel3/action.hpp"
#include "siegel3/invariants.hpp"
#include "siegel3/rng.hpp"

using namespace siegel3;

namespace {

const VarSet* AV = VarSet::invariant();
const VarSet* AT = VarSet::invariant_t();

PolyGF3 random_poly(SplitMix64& rng, int max_terms = 5, uint32_t max_exp = 3) {
    std::vector<std::pair<std::vector<uint32_t>, GF3>> ts;
    int n = 1 + static_cast<int>(rng.below(max_terms));
    for (int k = 0; k < n; ++k) {
        std::vector<uint32_t> e(7, 0);
        for (auto& x : e) x = static_cast<uint32_t>(rng.below(max_exp));
        ts.push_back({e, rng.gf3()});
    }
    return PolyGF3::from_terms(AV, ts);
}

TEST(UnipotentAction, FixedEndpoints) {
    // upper (x2 -> t x1 + x2) fixes the x2^6 coefficient a6;
    // lower (x1 -> x1 + t x2) fixes the x1^6 coefficient a0
    PolyGF3 a6 = PolyGF3::variable(AV, 6);
    PolyGF3 a0 = PolyGF3::variable(AV, 0);
    EXPECT_EQ(unipotent_action(Unipotent::upper, a6), reindex(a6, AT));
    EXPECT_EQ(unipotent_action(Unipotent::lower, a0), reindex(a0, AT));
    // and each perturbs the opposite endpoint
    EXPECT_NE(unipotent_action(Unipotent::upper, a0), reindex(a0, AT));
    EXPECT_NE(unipotent_action(Unipotent::lower, a6), reindex(a6, AT));
}

TEST(UnipotentAction, MiddleCoefficientMoves) {
    PolyGF3 a3 = PolyGF3::variable(AV, 3);
    PolyGF3 diff = unipotent_action(Unipotent::lower, a3) - reindex(a3, AT);
    EXPECT_FALSE(diff.is_zero());
    // every surviving term carries a positive power of t
    for (const auto& t : diff.terms()) EXPECT_GT(t.m.e[7], 0u);
}

TEST(UnipotentAction, InvariantIsFixed) {
    EXPECT_EQ(unipotent_action(Unipotent::upper, golden_A()), reindex(golden_A(), AT));
    EXPECT_EQ(unipotent_action(Unipotent::lower, golden_A()), reindex(golden_A(), AT));
    EXPECT_EQ(unipotent_action(Unipotent::upper, golden_B()), reindex(golden_B(), AT));
}

TEST(UnipotentAction, CompositionLaw) {
    // acting with parameter t and then with parameter s equals acting once
    // with parameter t+s
    const VarSet* vts = VarSet::intern({"a0", "a1", "a2", "a3", "a4", "a5", "a6", "t", "s"});
    PolyGF3 one = PolyGF3::constant(vts, GF3(1));
    PolyGF3 zero = PolyGF3::zero(vts);
    PolyGF3 t = PolyGF3::variable(vts, 7), s = PolyGF3::variable(vts, 8);
    auto img_t = coefficient_substitution<GF3>({one, zero, t, one}, vts);
    auto img_s = coefficient_substitution<GF3>({one, zero, s, one}, vts);
    auto img_ts = coefficient_substitution<GF3>({one, zero, t + s, one}, vts);

    SplitMix64 rng(101);
    for (int iter = 0; iter < 20; ++iter) {
        PolyGF3 P = reindex(random_poly(rng, 4, 2), vts);
        std::map<size_t, PolyGF3> bt, bs, bts;
        for (size_t k = 0; k < 7; ++k) {
            bt.emplace(k, img_t[k]);
            bs.emplace(k, img_s[k]);
            bts.emplace(k, img_ts[k]);
        }
        EXPECT_EQ(P.substitute(bt).substitute(bs), P.substitute(bts));
    }
}

TEST(CoefficientSubstitution, IdentityMatrix) {
    PolyGF3 one = PolyGF3::constant(AT, GF3(1));
    PolyGF3 zero = PolyGF3::zero(AT);
    auto img = coefficient_substitution<GF3>({one, zero, zero, one}, AT);
    for (size_t k = 0; k < 7; ++k) EXPECT_EQ(img[k], PolyGF3::variable(AT, k));
}

TEST(CoefficientSubstitution, MatrixProductComposes) {
    const VarSet* vts = VarSet::intern({"a0", "a1", "a2", "a3", "a4", "a5", "a6", "t", "s"});
    PolyGF3 one = PolyGF3::constant(vts, GF3(1));
    PolyGF3 zero = PolyGF3::zero(vts);
    PolyGF3 t = PolyGF3::variable(vts, 7), s = PolyGF3::variable(vts, 8);
    Matrix2<GF3> Ut{one, zero, t, one};           // upper, parameter t
    Matrix2<GF3> Ls{one, s, zero, one};           // lower, parameter s
    auto img_prod = coefficient_substitution<GF3>(Ut.mul(Ls), vts);
    auto img_t = coefficient_substitution<GF3>(Ut, vts);
    auto img_s = coefficient_substitution<GF3>(Ls, vts);
    // f((Ut*Ls) x) = g(Ls x) with g = f(Ut .): the product's coefficient map is
    // the Ls formula evaluated on the Ut images
    std::map<size_t, PolyGF3> bt;
    for (size_t k = 0; k < 7; ++k) bt.emplace(k, img_t[k]);
    for (size_t k = 0; k < 7; ++k) EXPECT_EQ(img_prod[k], img_s[k].substitute(bt));
}

TEST(IsobaricWeight, Examples) {
    EXPECT_EQ(isobaric_weight(golden_A()), std::optional<uint64_t>(6));
    PolyGF3 mixed = PolyGF3::variable(AV, 0) + PolyGF3::variable(AV, 1);
    EXPECT_EQ(isobaric_weight(mixed), std::nullopt);
    EXPECT_THROW(isobaric_weight(PolyGF3::zero(AV)), std::invalid_argument);
}

TEST(IsInvariant, Examples) {
    EXPECT_TRUE(is_invariant(golden_A()));
    EXPECT_TRUE(is_invariant(golden_B()));
    EXPECT_FALSE(is_invariant(PolyGF3::variable(AV, 3)));
    EXPECT_FALSE(is_invariant(PolyGF3::zero(AV)));
    // right weight but visibly perturbed: a3 has weight 3 = 3*1, still moves
    EXPECT_EQ(isobaric_weight(PolyGF3::variable(AV, 3)), std::optional<uint64_t>(3));
}

TEST(IsobaricMonomials, CountsAndOrder) {
    auto m2 = isobaric_monomials(2, 6);
    EXPECT_EQ(m2.size(), 4u);  // a3^2, a2 a4, a1 a5, a0 a6
    // deterministic lexicographic backtracking order on (e0, ..., e6)
    for (size_t i = 1; i < m2.size(); ++i) {
        std::vector<uint32_t> prev(m2[i - 1].e.begin(), m2[i - 1].e.begin() + 7);
        std::vector<uint32_t> cur(m2[i].e.begin(), m2[i].e.begin() + 7);
        EXPECT_LT(prev, cur);
    }
    EXPECT_EQ(isobaric_monomials(1, 3).size(), 1u);  // just a3
}

TEST(InvariantSpaceBasis, SmallDegrees) {
    EXPECT_EQ(invariant_space_basis(0).size(), 1u);
    EXPECT_EQ(invariant_space_basis(1).size(), 0u);
    auto b2 = invariant_space_basis(2);
    ASSERT_EQ(b2.size(), 1u);
    // spanned by A up to scalar
    EXPECT_TRUE(b2[0] == golden_A() || b2[0] == golden_A().scaled(GF3(2)));
    EXPECT_EQ(invariant_space_basis(4).size(), 2u);
    EXPECT_EQ(invariant_space_basis(6).size(), 3u);
    EXPECT_EQ(invariant_space_basis(8).size(), 4u);
}

TEST(InvariantSpaceBasis, EveryElementIsInvariant) {
    for (uint32_t d : {2u, 4u, 6u}) {
        for (const auto& p : invariant_space_basis(d)) {
            EXPECT_TRUE(is_invariant(p));
            EXPECT_EQ(isobaric_weight(p), std::optional<uint64_t>(3ull * d));
            EXPECT_EQ(p.degree(), d);
        }
    }
}

TEST(InvariantSpaceBasis, DimensionsMatchGeneratorCount) {
    // independent count: monomials in generators of degrees 2,4,6,10 per degree
    auto expected = [](uint32_t d) {
        size_t n = 0;
        for (uint32_t i10 = 0; 10 * i10 <= d; ++i10)
            for (uint32_t i6 = 0; 10 * i10 + 6 * i6 <= d; ++i6)
                for (uint32_t i4 = 0; 10 * i10 + 6 * i6 + 4 * i4 <= d; ++i4)
                    if ((d - 10 * i10 - 6 * i6 - 4 * i4) % 2 == 0) ++n;
        return n;
    };
    const size_t want[] = {1, 1, 2, 3, 4, 6};
    uint32_t degs[] = {0, 2, 4, 6, 8, 10};
    for (int i = 0; i < 6; ++i) {
        EXPECT_EQ(expected(degs[i]), want[i]) << "degree " << degs[i];
        EXPECT_EQ(invariant_space_basis(degs[i]).size(), want[i]) << "degree " << degs[i];
    }
}

TEST(InvariantSpaceBasis, CapRejected) {
    EXPECT_THROW(invariant_space_basis(15, 100), std::invalid_argument);
}

TEST(MirrorSwap, OnGenerators) {
    EXPECT_EQ(mirror_swap(golden_A()), golden_A());
    EXPECT_EQ(mirror_swap(golden_B()), golden_B());
}

TEST(Transvectant, ZerothIsProduct) {
    BinaryForm<QQ> f = BinaryForm<QQ>::universal_sextic();
    BinaryForm<QQ> fg = transvectant(f, f, 0);
    EXPECT_EQ(fg.poly(), f.poly() * f.poly());
    EXPECT_EQ(fg.order(), 12u);
}

TEST(Transvectant, NormalizationConstant) {
    // (x1^2, x2^2)_2 = 1 under the classical normalization
    const VarSet* FV = VarSet::form();
    BinaryForm<QQ> x1sq(PolyQQ::variable(FV, 7, 2), 2);
    BinaryForm<QQ> x2sq(PolyQQ::variable(FV, 8, 2), 2);
    BinaryForm<QQ> tv = transvectant(x1sq, x2sq, 2);
    EXPECT_EQ(tv.order(), 0u);
    EXPECT_EQ(tv.poly(), PolyQQ::constant(FV, QQ(1)));
}

TEST(Transvectant, OddSelfTransvectantsVanish) {
    BinaryForm<QQ> f = BinaryForm<QQ>::universal_sextic();
    for (uint32_t k : {1u, 3u, 5u}) EXPECT_TRUE(transvectant(f, f, k).is_zero()) << k;
}

TEST(Transvectant, RangeChecked) {
    BinaryForm<QQ> f = BinaryForm<QQ>::universal_sextic();
    EXPECT_THROW(transvectant(f, f, 7), std::invalid_argument);
}

TEST(Rank, Gf3RankBasics) {
    PolyGF3 a = golden_A();
    EXPECT_EQ(gf3_rank({a, a.scaled(GF3(2))}), 1u);
    EXPECT_EQ(gf3_rank({a, golden_B()}), 2u);
    EXPECT_EQ(gf3_rank({}), 0u);
}

}  // namespace
