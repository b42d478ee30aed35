#include "anosov/errors.hpp"
#include "anosov/polycore.hpp"
#include "anosov/unitlattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace anosov;

namespace {

IntPoly P(const char* s) { return parse_poly(s); }

IntVec V(std::initializer_list<long> xs)
{
    IntVec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

Int coordinate_gcd(const std::vector<IntVec>& rows)
{
    Int g = 0;
    for (const auto& r : rows) {
        Int s = 0;
        for (const auto& x : r)
            s += x;
        g = gcd(g, s);
    }
    return g;
}

} // namespace

TEST(Lll, ReducesKnownBasis)
{
    std::vector<IntVec> rows{V({1, 1, 1}), V({-1, 0, 2}), V({3, 5, 6})};
    auto red = lll_reduce(rows);
    EXPECT_EQ(hnf(red), hnf(rows));
    Int n0 = 0;
    for (const auto& x : red[0])
        n0 += x * x;
    EXPECT_LE(n0, 3);
}

TEST(Hnf, CanonicalAndMembership)
{
    auto h = hnf({V({2, 4, 6}), V({0, 3, 3}), V({2, 7, 9})});
    ASSERT_EQ(h.size(), 2u);
    EXPECT_TRUE(hnf_contains(h, V({4, 11, 15})));
    EXPECT_FALSE(hnf_contains(h, V({1, 2, 3})));
    EXPECT_EQ(h, hnf({V({2, 7, 9}), V({2, 4, 6})}));
}

TEST(IntegerKernel, SmallSystem)
{
    auto k = integer_kernel({V({1, 2}), V({2, 4}), V({0, 1})});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], V({2, -1, 0}));
}

TEST(RelationLattice, GoldenQuadratic)
{
    RelationLattice l = relation_lattice(isolate_roots(P("x^2-3x+1")));
    ASSERT_EQ(l.rank(), 1);
    EXPECT_EQ(l.basis[0], V({1, 1}));
}

TEST(RelationLattice, CubicWithRootProductMinusOne)
{
    // Product of roots is -1, and prime degree forces lattice rank 1.
    RelationLattice l = relation_lattice(isolate_roots(P("x^3-x^2-2x+1")));
    ASSERT_EQ(l.rank(), 1);
    EXPECT_EQ(l.basis[0], V({2, 2, 2}));
}

TEST(RelationLattice, Biquadratic)
{
    // Roots in box order: -a, -1/a, 1/a, a with a = sqrt2 + sqrt3. Besides the
    // two reciprocal pairs, (-a)^2 = a^2 gives a third independent relation,
    // so the lattice has rank 3 and the roots generate a rank-1 group.
    RootSet rs = isolate_roots(P("x^4-10x^2+1"));
    Completeness c;
    RelationLattice l = relation_lattice(rs, &c);
    EXPECT_EQ(l.basis, hnf({V({1, 1, 0, 0}), V({0, 0, 1, 1}), V({2, 0, 0, -2})}));
    EXPECT_FALSE(l.contains(V({1, 0, 0, -1})));
    EXPECT_EQ(c, Completeness::Certified);
}

TEST(VerifyRelation, Examples)
{
    RootSet q = isolate_roots(P("x^2-3x+1"));
    EXPECT_TRUE(verify_relation(q, V({1, 1})));
    EXPECT_FALSE(verify_relation(q, V({1, 0})));
    RootSet c = isolate_roots(P("x^3-x^2-2x+1"));
    EXPECT_FALSE(verify_relation(c, V({1, 1, 1})));
    EXPECT_TRUE(verify_relation(c, V({2, 2, 2})));
    RootSet b = isolate_roots(P("x^4-10x^2+1"));
    EXPECT_TRUE(verify_relation(b, V({2, 0, 0, -2})));
    EXPECT_FALSE(verify_relation(b, V({1, 0, 1, 0})));
}

TEST(RankOfRoots, GoldenQuadratic)
{
    AnosovProfile p = rank_of_roots(P("x^2-3x+1"));
    EXPECT_EQ(p.rank, 1);
    EXPECT_EQ(p.d, 2);
    EXPECT_EQ(p.normalization_power, 1);
}

TEST(RankOfRoots, CubicNormalizedBySquaring)
{
    AnosovProfile p = rank_of_roots(P("x^3-x^2-2x+1"));
    EXPECT_EQ(p.rank, 2);
    EXPECT_EQ(p.normalization_power, 2);
    EXPECT_EQ(p.profiled, composed_power(P("x^3-x^2-2x+1"), 2));
    ASSERT_EQ(p.lattice.rank(), 1);
    EXPECT_EQ(p.lattice.basis[0], V({1, 1, 1}));
    EXPECT_EQ(p.d, 3);
}

TEST(RankOfRoots, ProductOfPowerRelatedQuadratics)
{
    // lambda^3 is the large root of x^2 - 18x + 1.
    AnosovProfile p = rank_of_roots(P("x^2-3x+1") * P("x^2-18x+1"));
    EXPECT_EQ(p.rank, 1);
    EXPECT_EQ(p.d, 2);
    EXPECT_EQ(p.lattice.rank(), 3);
}

TEST(RankOfRoots, RejectsNonUnitInput)
{
    EXPECT_THROW(rank_of_roots(P("x^2-3x+2")), InputError);
}

TEST(FullRank, Examples)
{
    EXPECT_TRUE(is_full_rank(P("x^3-x^2-2x+1")));
    EXPECT_TRUE(is_full_rank(P("x^2-3x+1")));
    EXPECT_FALSE(is_full_rank(P("x^4-10x^2+1")));
    EXPECT_TRUE(is_full_rank(P("x^4-6x^3-6x^2-6x-1")));
}

TEST(MonomialMinPoly, Examples)
{
    IntPoly f = P("x^2-3x+1");
    EXPECT_EQ(monomial_min_poly(f, V({1, 1})), P("x-1"));
    EXPECT_EQ(monomial_min_poly(f, V({1, 0})), P("x^2-3x+1"));
    EXPECT_EQ(monomial_min_poly(f, V({0, 1})), P("x^2-3x+1"));
    EXPECT_EQ(monomial_min_poly(f, V({2, 1})), P("x^2-3x+1"));
    EXPECT_EQ(monomial_min_poly(f, V({2, 0})), P("x^2-7x+1"));
}

TEST(MonomialMinPoly, VanishesAtTheMonomial)
{
    IntPoly f = P("x^4-6x^3-6x^2-6x-1");
    RootSet rs = isolate_roots(f, 256);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ex(-2, 2);
    for (int t = 0; t < 20; ++t) {
        IntVec e{ex(rng), ex(rng), ex(rng), ex(rng)};
        IntPoly m = monomial_min_poly(rs, e);
        CBall mu = monomial_ball(rs, e, 512);
        EXPECT_TRUE(eval(m, mu).may_contain_zero());
        EXPECT_TRUE(factor_over_rationals(m).irreducible());
    }
}

TEST(EvenDegree, Examples)
{
    IntPoly f = P("x^4-10x^2+1");
    // a^2 = 5 + 2 sqrt6 and (5 + 2 sqrt6)(5 - 2 sqrt6) = 1.
    EvenDegreeResult r = even_degree_check(f, V({0, 0, 0, 2}));
    EXPECT_TRUE(r.even);
    EXPECT_EQ(r.min_poly, P("x^2-10x+1"));
    EXPECT_THROW(even_degree_check(f, V({0, 0, 1, 1})), InputError);
}

TEST(QuarticRankCase, Examples)
{
    QuarticClassification a = classify_quartic_rank_case(P("x^2-3x+1") * P("x^2-18x+1"));
    EXPECT_EQ(a.kind, QuarticRankCase::RankOne);
    EXPECT_EQ(a.power, 1);
    EXPECT_EQ(a.k, 3);
    EXPECT_EQ(a.l, 1);
    EXPECT_EQ(a.d, 2);

    QuarticClassification b = classify_quartic_rank_case(P("x^4-10x^2+1"));
    EXPECT_EQ(b.kind, QuarticRankCase::RankOne);
    EXPECT_EQ(b.power, 2);
    EXPECT_EQ(b.k, 1);
    EXPECT_EQ(b.l, 1);

    QuarticClassification c = classify_quartic_rank_case(P("x^4-6x^3-6x^2-6x-1"));
    EXPECT_EQ(c.kind, QuarticRankCase::FullRank);
    EXPECT_EQ(c.d, 4);
}

TEST(QuarticRankCase, RankTwoExample)
{
    // Product of two unrelated golden-type quadratics: lattice {(1,1,0,0),(0,0,1,1)}.
    QuarticClassification q = classify_quartic_rank_case(P("x^2-3x+1") * P("x^2-4x+1"));
    EXPECT_EQ(q.kind, QuarticRankCase::RankTwo);
    EXPECT_EQ(q.d, 2);
}

TEST(NormalizedPower, Examples)
{
    EXPECT_EQ(normalized_power_for_rank1(P("x^2-3x+1")), 1);
    EXPECT_EQ(normalized_power_for_rank1(P("x^2-3x+1") * P("x^2-18x+1")), 1);
    IntPoly f = P("x^4-10x^2+1");
    int m = normalized_power_for_rank1(f);
    EXPECT_EQ(m, 2);
    for (const auto& fac : factor_over_rationals(composed_power(f, m)).factors)
        EXPECT_EQ(fac.poly.degree(), 2);
    EXPECT_THROW(normalized_power_for_rank1(P("x^3-x^2-2x+1")), InputError);
}

TEST(Profiles, CorpusLaws)
{
    std::vector<IntPoly> corpus = oracle::anosov_corpus(2, 8);
    for (const IntPoly& f : oracle::anosov_corpus(3, 5))
        corpus.push_back(f);
    for (const IntPoly& f : oracle::anosov_corpus(4, 2))
        corpus.push_back(f);
    ASSERT_GT(corpus.size(), 100u);
    for (const IntPoly& f : corpus) {
        AnosovProfile p = rank_of_roots(f);
        int n = f.degree();
        EXPECT_GE(p.rank, 1) << to_string(f);
        EXPECT_LE(p.rank, n - 1) << to_string(f);
        IntVec twos(n, Int(2));
        EXPECT_TRUE(p.lattice.contains(twos)) << to_string(f);
        for (const auto& z : p.lattice.basis)
            EXPECT_TRUE(verify_relation(p.roots, z)) << to_string(f);
        EXPECT_EQ(p.d, coordinate_gcd(p.lattice.basis));
        if (p.rank == n - 1)
            EXPECT_EQ(p.d, n) << to_string(f);
        if (n == 2 || n == 3) {
            if (factor_over_rationals(f).irreducible())
                EXPECT_EQ(p.rank, n - 1) << to_string(f);
        }
        for (int e : {2, 3})
            EXPECT_EQ(rank_of_roots(composed_power(f, e)).rank, p.rank) << to_string(f);
        if (n == 4) {
            // The case split holds after replacing A by the reported power.
            QuarticClassification q = classify_quartic_rank_case(f);
            AnosovProfile powered = rank_of_roots(composed_power(f, q.power));
            EXPECT_EQ(q.d, powered.d) << to_string(f);
            if (q.kind == QuarticRankCase::FullRank)
                EXPECT_EQ(q.d, 4) << to_string(f);
            if (q.kind == QuarticRankCase::RankTwo)
                EXPECT_EQ(q.d, 2) << to_string(f);
            if (q.kind == QuarticRankCase::RankOne)
                EXPECT_EQ(q.d, (q.k + q.l) % 2 == 0 ? 2 : 1) << to_string(f);
        }
    }
}

TEST(Profiles, DeterministicRootOrder)
{
    IntPoly f = P("x^4-6x^3-6x^2-6x-1");
    AnosovProfile a = rank_of_roots(f), b = rank_of_roots(f);
    EXPECT_EQ(a.lattice, b.lattice);
    ASSERT_EQ(a.roots.size(), b.roots.size());
    for (size_t i = 0; i < a.roots.size(); ++i) {
        EXPECT_EQ(a.roots.roots[i].box.re_lo, b.roots.roots[i].box.re_lo);
        EXPECT_EQ(a.roots.roots[i].box.im_lo, b.roots.roots[i].box.im_lo);
    }
}
