#include <gtest/gtest.h>

#include "siegel3/poly.hpp"
#include "siegel3/poly_json.hpp"
#include "siegel3/rng.hpp"
#include "siegel3/sha256.hpp"

using namespace siegel3;

namespace {

const VarSet* AV = VarSet::invariant();

PolyGF3 gf3_poly(std::initializer_list<std::pair<std::vector<uint32_t>, int>> ts) {
    std::vector<std::pair<std::vector<uint32_t>, GF3>> v;
    for (const auto& [e, c] : ts) v.push_back({e, GF3::of(c)});
    return PolyGF3::from_terms(AV, v);
}

// a1*a5 - a2*a4
PolyGF3 poly_A() {
    return gf3_poly({{{0, 1, 0, 0, 0, 1, 0}, 1}, {{0, 0, 1, 0, 1, 0, 0}, -1}});
}

PolyGF3 random_poly(SplitMix64& rng, int max_terms = 6, uint32_t max_exp = 3) {
    std::vector<std::pair<std::vector<uint32_t>, GF3>> ts;
    int n = 1 + static_cast<int>(rng.below(max_terms));
    for (int k = 0; k < n; ++k) {
        std::vector<uint32_t> e(7, 0);
        for (auto& x : e) x = static_cast<uint32_t>(rng.below(max_exp));
        ts.push_back({e, rng.gf3()});
    }
    return PolyGF3::from_terms(AV, ts);
}

TEST(PolyArith, CancellationExample) {
    PolyGF3 a2a4 = gf3_poly({{{0, 0, 1, 0, 1, 0, 0}, 1}});
    PolyGF3 expect = gf3_poly({{{0, 1, 0, 0, 0, 1, 0}, 1}});
    EXPECT_EQ(poly_A() + a2a4, expect);
}

TEST(PolyArith, SquareMod3) {
    // (x - y)^2 = x^2 + xy + y^2 over GF(3)
    PolyGF3 sq = poly_A().pow(2);
    PolyGF3 expect = gf3_poly({{{0, 2, 0, 0, 0, 2, 0}, 1},
                               {{0, 1, 1, 0, 1, 1, 0}, 1},
                               {{0, 0, 2, 0, 2, 0, 0}, 1}});
    EXPECT_EQ(sq, expect);
}

TEST(PolyArith, MulByZeroAbsorbs) {
    EXPECT_TRUE((poly_A() * PolyGF3::zero(AV)).is_zero());
}

TEST(PolyArith, DomainMismatchThrows) {
    PolyGF3 f = poly_A();
    PolyGF3 g = PolyGF3::variable(VarSet::invariant_t(), 7);
    EXPECT_THROW(f * g, std::invalid_argument);
    EXPECT_THROW(f + g, std::invalid_argument);
}

TEST(PolyArith, ExponentOverflowRejected) {
    PolyGF3 x = PolyGF3::variable(AV, 0, kMaxExponent);
    EXPECT_THROW(x * x, std::overflow_error);
}

TEST(PolyArith, RingLawsRandom) {
    SplitMix64 rng(42);
    for (int i = 0; i < 1200; ++i) {
        PolyGF3 f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        EXPECT_EQ((f + g) + h, f + (g + h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ(f - f, PolyGF3::zero(AV));
    }
}

TEST(PolyArith, PowMatchesRepeatedMul) {
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        PolyGF3 f = random_poly(rng, 4, 2);
        PolyGF3 acc = PolyGF3::constant(AV, GF3(1));
        for (uint64_t e = 0; e <= 6; ++e) {
            EXPECT_EQ(f.pow(e), acc);
            acc *= f;
        }
    }
}

TEST(ExactDivide, ConstructedProduct) {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        PolyGF3 f = random_poly(rng), g = random_poly(rng);
        if (g.is_zero()) continue;
        PolyGF3 prod = f * g;
        auto q = exact_divide(prod, g);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q * g, prod);
        EXPECT_EQ(*q, f);
    }
}

TEST(ExactDivide, SoundnessOnRandomPairs) {
    SplitMix64 rng(13);
    for (int i = 0; i < 300; ++i) {
        PolyGF3 f = random_poly(rng), g = random_poly(rng);
        if (g.is_zero()) continue;
        auto q = exact_divide(f, g);
        if (q) EXPECT_EQ(*q * g, f);
    }
}

TEST(ExactDivide, ZeroDivisorThrows) {
    EXPECT_THROW(exact_divide(poly_A(), PolyGF3::zero(AV)), std::invalid_argument);
}

TEST(ExactDivide, IntegerCoefficients) {
    const VarSet* v = AV;
    PolyZZ f = PolyZZ::from_terms(v, {{{2, 0, 0, 0, 0, 0, 0}, ZZ(6)}, {{0, 1, 0, 0, 0, 0, 0}, ZZ(4)}});
    PolyZZ g = PolyZZ::from_terms(v, {{{1, 0, 0, 0, 0, 0, 0}, ZZ(2)}});
    EXPECT_FALSE(exact_divide(f, g).has_value());  // 4*a1 / 2*a0 fails on the monomial
    PolyZZ h = f * g;
    auto q = exact_divide(h, g);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, f);
    // coefficient non-divisibility: 3*a0 / 2*a0
    PolyZZ c3 = PolyZZ::from_terms(v, {{{1, 0, 0, 0, 0, 0, 0}, ZZ(3)}});
    EXPECT_FALSE(exact_divide(c3, g).has_value());
}

TEST(Substitute, IdentityBinding) {
    std::map<size_t, PolyGF3> b;
    b.emplace(1, PolyGF3::variable(AV, 1));
    EXPECT_EQ(poly_A().substitute(b), poly_A());
}

TEST(Substitute, BinomialExpansion) {
    // x1^2 under x1 -> x1 + t*x2 gives x1^2 + 2t*x1*x2 + t^2*x2^2
    const VarSet* FV = VarSet::form();
    const VarSet* FT = VarSet::form_t();
    PolyGF3 x1sq = PolyGF3::variable(FV, 7, 2);
    PolyGF3 image = PolyGF3::variable(FT, 7) +
                    PolyGF3::variable(FT, 9) * PolyGF3::variable(FT, 8);
    std::map<size_t, PolyGF3> b;
    b.emplace(7, image);
    PolyGF3 got = x1sq.substitute(b);
    std::vector<std::pair<std::vector<uint32_t>, GF3>> ts = {
        {{0, 0, 0, 0, 0, 0, 0, 2, 0, 0}, GF3(1)},
        {{0, 0, 0, 0, 0, 0, 0, 1, 1, 1}, GF3(2)},
        {{0, 0, 0, 0, 0, 0, 0, 0, 2, 2}, GF3(1)}};
    EXPECT_EQ(got, PolyGF3::from_terms(FT, ts));
}

TEST(Substitute, IsRingHomomorphism) {
    SplitMix64 rng(17);
    for (int i = 0; i < 60; ++i) {
        PolyGF3 f = random_poly(rng, 4, 2), g = random_poly(rng, 4, 2);
        std::map<size_t, PolyGF3> b;
        b.emplace(2, random_poly(rng, 3, 2));
        b.emplace(5, random_poly(rng, 3, 2));
        EXPECT_EQ((f * g).substitute(b), f.substitute(b) * g.substitute(b));
        EXPECT_EQ((f + g).substitute(b), f.substitute(b) + g.substitute(b));
    }
}

TEST(Evaluate, Basics) {
    std::vector<GF3> zeros(7, GF3(0));
    EXPECT_EQ(poly_A().evaluate(zeros), GF3(0));
    std::vector<GF3> pt(7, GF3(0));
    pt[1] = pt[5] = pt[2] = pt[4] = GF3(1);
    EXPECT_EQ(poly_A().evaluate(pt), GF3(0));  // 1 - 1
    EXPECT_THROW(poly_A().evaluate(std::vector<GF3>(3, GF3(0))), std::invalid_argument);
}

TEST(Evaluate, HomomorphismRandom) {
    SplitMix64 rng(23);
    for (int i = 0; i < 200; ++i) {
        PolyGF3 f = random_poly(rng), g = random_poly(rng);
        auto pt = rng.gf3x_point(7);
        GF3x lhs = (f * g).evaluate(pt);
        GF3x rhs = f.evaluate(pt) * g.evaluate(pt);
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ((f + g).evaluate(pt), f.evaluate(pt) + g.evaluate(pt));
    }
}

TEST(Evaluate, SubstituteCompatible) {
    // evaluate(substitute(f,B), P) = evaluate(f, evaluate.B at P)
    SplitMix64 rng(29);
    for (int i = 0; i < 40; ++i) {
        PolyGF3 f = random_poly(rng, 4, 2);
        std::map<size_t, PolyGF3> b;
        b.emplace(0, random_poly(rng, 3, 2));
        b.emplace(3, random_poly(rng, 3, 2));
        auto pt = rng.gf3x_point(7);
        std::vector<GF3x> pt2 = pt;
        pt2[0] = b.at(0).evaluate(pt);
        pt2[3] = b.at(3).evaluate(pt);
        EXPECT_EQ(f.substitute(b).evaluate(pt), f.evaluate(pt2));
    }
}

TEST(ReduceMod3, Basics) {
    PolyZZ f = PolyZZ::from_terms(AV, {{{1, 0, 0, 0, 0, 0, 0}, ZZ(3)}});
    EXPECT_TRUE(reduce_mod_3(f).is_zero());
    PolyZZ g = PolyZZ::from_terms(AV, {{{1, 0, 0, 0, 0, 0, 0}, ZZ(-1)},
                                       {{0, 1, 0, 0, 0, 0, 0}, ZZ(7)}});
    PolyGF3 exp = gf3_poly({{{1, 0, 0, 0, 0, 0, 0}, 2}, {{0, 1, 0, 0, 0, 0, 0}, 1}});
    EXPECT_EQ(reduce_mod_3(g), exp);
}

TEST(ReduceMod3, RingHomomorphismRandom) {
    SplitMix64 rng(31);
    auto random_zz = [&](int mt) {
        std::vector<std::pair<std::vector<uint32_t>, ZZ>> ts;
        int n = 1 + static_cast<int>(rng.below(mt));
        for (int k = 0; k < n; ++k) {
            std::vector<uint32_t> e(7, 0);
            for (auto& x : e) x = static_cast<uint32_t>(rng.below(3));
            ts.push_back({e, ZZ(static_cast<long long>(rng.below(2001)) - 1000)});
        }
        return PolyZZ::from_terms(AV, ts);
    };
    for (int i = 0; i < 150; ++i) {
        PolyZZ f = random_zz(5), g = random_zz(5);
        EXPECT_EQ(reduce_mod_3(f * g), reduce_mod_3(f) * reduce_mod_3(g));
        EXPECT_EQ(reduce_mod_3(f + g), reduce_mod_3(f) + reduce_mod_3(g));
    }
}

TEST(CanonicalForm, NoZeroCoefficientsObservable) {
    SplitMix64 rng(37);
    for (int i = 0; i < 300; ++i) {
        PolyGF3 f = random_poly(rng), g = random_poly(rng);
        for (const auto& op : {f + g, f - g, f * g}) {
            for (const auto& t : op.terms()) EXPECT_FALSE(t.c.is_zero());
            // sorted strictly descending
            for (size_t k = 1; k < op.terms().size(); ++k)
                EXPECT_GT(grevlex_cmp(op.terms()[k - 1].m, op.terms()[k].m), 0);
        }
    }
}

TEST(Json, ZeroPolynomial) {
    std::string s = to_canonical_json(PolyGF3::zero(AV));
    EXPECT_EQ(parse_poly<GF3>(s), PolyGF3::zero(AV));
    EXPECT_EQ(s.back(), '\n');
}

TEST(Json, RoundTripRandom) {
    SplitMix64 rng(41);
    for (int i = 0; i < 200; ++i) {
        PolyGF3 f = random_poly(rng);
        EXPECT_EQ(parse_poly<GF3>(to_canonical_json(f)), f);
    }
}

TEST(Json, RoundTripIntegerDomain) {
    PolyZZ f = PolyZZ::from_terms(
        AV, {{{1, 2, 0, 0, 0, 0, 0}, ZZ("-123456789012345678901234567890")},
             {{0, 0, 0, 3, 0, 0, 0}, ZZ(17)}});
    EXPECT_EQ(parse_poly<ZZ>(to_canonical_json(f)), f);
}

TEST(Json, EqualPolynomialsSerializeIdentically) {
    SplitMix64 rng(43);
    for (int i = 0; i < 100; ++i) {
        PolyGF3 f = random_poly(rng), g = random_poly(rng);
        PolyGF3 s1 = f + g, s2 = g + f;
        EXPECT_EQ(to_canonical_json(s1), to_canonical_json(s2));
        EXPECT_EQ(sha256_hex(to_canonical_json(s1)), sha256_hex(to_canonical_json(s2)));
    }
}

TEST(Json, MalformedInputReportsOffset) {
    try {
        parse_poly<GF3>("{\"domain\": \"GF3\", ");
        FAIL() << "expected throw";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
    }
    EXPECT_THROW(parse_poly<GF3>("{\"domain\": \"Z\", \"vars\": [\"a0\"], \"terms\": []}"),
                 std::invalid_argument);
    // non-canonical coefficient
    EXPECT_THROW(parse_poly<GF3>(
                     "{\"domain\": \"GF3\", \"vars\": [\"a0\"], \"terms\": [{\"e\": [1], \"c\": \"3\"}]}"),
                 std::invalid_argument);
}

TEST(Sha256, KnownVectors) {
    EXPECT_EQ(sha256_hex(""),
              "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex("abc"),
              "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(GF3Field, Basics) {
    EXPECT_EQ(GF3::of(-1), GF3(2));
    EXPECT_EQ(GF3(2) * GF3(2), GF3(1));
    EXPECT_EQ(GF3(2).inverse(), GF3(2));
    EXPECT_THROW(GF3(0).inverse(), std::domain_error);
}

TEST(GF3ExtField, ModulusIsIrreducibleAndFieldLawsHold) {
    // modulus x^8 + x^2 + 2 passes the exhaustive factor check at startup
    EXPECT_NO_THROW(GF3x::modulus_tail());
    SplitMix64 rng(47);
    for (int i = 0; i < 500; ++i) {
        GF3x a = rng.gf3x(), b = rng.gf3x(), c = rng.gf3x();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), GF3x::one());
        }
    }
    // Fermat: x^(3^8) = x
    for (int i = 0; i < 50; ++i) {
        GF3x a = rng.gf3x();
        EXPECT_EQ(a.pow(6561), a);
    }
}

}  // namespace
