#include "anosov/errors.hpp"
#include "anosov/polycore.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace anosov;

namespace {

IntPoly P(const char* s) { return parse_poly(s); }

} // namespace

TEST(Parse, TextAndDescendingCoefficientsAgree)
{
    EXPECT_EQ(P("x^4-10x^2+1"), poly_from_descending({"1", "0", "-10", "0", "1"}));
    EXPECT_EQ(descending_strings(P("x^4-10x^2+1")),
              (std::vector<std::string>{"1", "0", "-10", "0", "1"}));
    EXPECT_EQ(to_string(P("x^3 - x - 1")), "x^3-x-1");
    EXPECT_THROW(parse_poly("x^^2"), InputError);
}

TEST(CharPoly, Identity)
{
    CharPoly cp = char_poly(RatMatrix::identity(2));
    EXPECT_EQ(to_int_poly(cp.poly), P("x^2-2x+1"));
    EXPECT_TRUE(cp.integral);
}

TEST(CharPoly, Companion)
{
    EXPECT_EQ(to_int_poly(char_poly(companion(P("x^2-3x+1"))).poly), P("x^2-3x+1"));
}

TEST(CharPoly, CubeOfPellUnitBlock)
{
    // (3 + 2 sqrt2)^3 = 99 + 70 sqrt2: trace 198, determinant 99^2 - 2 * 70^2 = 1.
    RatMatrix b{{99, 140}, {70, 99}};
    EXPECT_EQ(to_int_poly(char_poly(b).poly), P("x^2-198x+1"));
}

TEST(CharPoly, FlagsNonIntegralInput)
{
    RatMatrix m(1, 1);
    m(0, 0) = Rat(1, 2);
    EXPECT_FALSE(char_poly(m).integral);
}

TEST(Factor, DifferenceOfSquares)
{
    FactorList fl = factor_over_rationals(P("x^2-1"));
    ASSERT_EQ(fl.factors.size(), 2u);
    EXPECT_EQ(fl.factors[0].poly, P("x-1"));
    EXPECT_EQ(fl.factors[1].poly, P("x+1"));
}

TEST(Factor, RecoversConstructedProduct)
{
    FactorList fl = factor_over_rationals(P("x^2-3x+1") * P("x^2-7x+1"));
    ASSERT_EQ(fl.factors.size(), 2u);
    EXPECT_EQ(fl.factors[0].poly, P("x^2-7x+1"));
    EXPECT_EQ(fl.factors[1].poly, P("x^2-3x+1"));
    EXPECT_EQ(fl.unit, 1);
}

TEST(Factor, BiquadraticIsIrreducible)
{
    // Any monic quadratic factor x^2 + ax + b needs b | 1 and |a| <= 2 * 3.2.
    IntPoly f = P("x^4-10x^2+1");
    for (long a = -7; a <= 7; ++a)
        for (long b : {-1L, 1L})
            EXPECT_FALSE(divides(IntPoly{b, a, 1}, f)) << a << " " << b;
    EXPECT_TRUE(factor_over_rationals(f).irreducible());
}

TEST(Factor, ProductReconstructsInput)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly f = IntPoly::constant(Int(1));
        int parts = 1 + trial % 3;
        for (int p = 0; p < parts; ++p) {
            std::vector<Int> c;
            int deg = 1 + (trial + p) % 3;
            for (int i = 0; i < deg; ++i)
                c.emplace_back(coef(rng));
            c.emplace_back(1 + (trial % 2));
            f = f * IntPoly(c);
        }
        if (f.is_zero())
            continue;
        FactorList fl = factor_over_rationals(f);
        EXPECT_EQ(fl.product(), f) << to_string(f);
        for (size_t i = 0; i + 1 < fl.factors.size(); ++i)
            EXPECT_FALSE(factor_less(fl.factors[i + 1].poly, fl.factors[i].poly));
        for (const auto& fac : fl.factors) {
            EXPECT_EQ(content(fac.poly), 1);
            EXPECT_GT(fac.poly.lead(), 0);
        }
    }
}

TEST(Factor, RejectsZero)
{
    EXPECT_THROW(factor_over_rationals(IntPoly()), InputError);
}

TEST(ComposedPower, Examples)
{
    IntPoly f = P("x^2-3x+1");
    EXPECT_EQ(composed_power(f, 2), P("x^2-7x+1"));
    EXPECT_EQ(composed_power(f, 3), P("x^2-18x+1"));
    EXPECT_EQ(composed_power(f, 1), f);
    EXPECT_THROW(composed_power(f, 0), InputError);
}

TEST(ComposedPower, MatchesMatrixPowers)
{
    for (int d : {2, 3, 4})
        for (const IntPoly& f : oracle::anosov_corpus(d, d == 4 ? 2 : 4))
            for (int e : {2, 3, 5})
                EXPECT_EQ(composed_power(f, e), oracle::power_by_matrix(f, e))
                    << to_string(f) << " e=" << e;
}

TEST(ComposedPower, PowersOfRootsLieInOutputBoxes)
{
    for (const char* s : {"x^3-x^2-2x+1", "x^4-10x^2+1", "x^4-6x^3-6x^2-6x-1"}) {
        IntPoly f = P(s);
        IntPoly g = composed_power(f, 3);
        ASSERT_EQ(g.degree(), f.degree());
        RootSet rf = isolate_roots(f, 128), rg = isolate_roots(g, 128);
        for (size_t i = 0; i < rf.size(); ++i) {
            CBall cube = rf.ball(i, 256).pow(3);
            bool hit = false;
            for (size_t j = 0; j < rg.size(); ++j)
                hit = hit || (cube - rg.ball(j, 256)).may_contain_zero();
            EXPECT_TRUE(hit) << s;
        }
    }
}

TEST(ComposedProduct, Examples)
{
    IntPoly g = P("x^2-3x+1");
    EXPECT_EQ(composed_product(P("x-1"), g), g);
    EXPECT_EQ(composed_product(g, P("x-1")), g);
    EXPECT_EQ(composed_product(P("x+1"), g), P("x^2+3x+1"));
    EXPECT_EQ(composed_product(g, P("x^2-7x+1")), P("x^2-18x+1") * P("x^2-3x+1"));
}

TEST(ComposedProduct, MatchesKroneckerProduct)
{
    std::vector<IntPoly> small = oracle::anosov_corpus(2, 5);
    std::vector<IntPoly> cubics = oracle::anosov_corpus(3, 2);
    for (size_t i = 0; i < small.size(); i += 3)
        for (size_t j = 0; j < cubics.size(); j += 4) {
            IntPoly p = composed_product(small[i], cubics[j]);
            EXPECT_EQ(p.degree(), 6);
            EXPECT_EQ(p, oracle::product_by_kronecker(small[i], cubics[j]));
        }
}

TEST(IsolateRoots, QuadraticFormula)
{
    RootSet rs = isolate_roots(P("x^2-3x+1"), 64);
    ASSERT_EQ(rs.size(), 2u);
    // (3 - sqrt5)/2 = 0.38196..., (3 + sqrt5)/2 = 2.61803...
    EXPECT_NEAR(rs.ball(0).re.to_double(), 0.3819660112501051, 1e-15);
    EXPECT_NEAR(rs.ball(1).re.to_double(), 2.618033988749895, 1e-15);
    EXPECT_TRUE(rs.roots[0].real && rs.roots[1].real);
}

TEST(IsolateRoots, Biquadratic)
{
    RootSet rs = isolate_roots(P("x^4-10x^2+1"), 64);
    ASSERT_EQ(rs.size(), 4u);
    double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
    double expect[] = {-r2 - r3, r2 - r3, r3 - r2, r2 + r3};
    for (int i = 0; i < 4; ++i) {
        EXPECT_TRUE(rs.roots[i].real);
        EXPECT_NEAR(rs.ball(i).re.to_double(), expect[i], 1e-14);
    }
}

TEST(IsolateRoots, UnitRootsAndMultiplicity)
{
    RootSet rs = isolate_roots(P("x^2-1"), 64);
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_NEAR(rs.ball(0).re.to_double(), -1.0, 1e-18);
    EXPECT_NEAR(rs.ball(1).re.to_double(), 1.0, 1e-18);

    IntPoly sq = P("x^2-x-1") * P("x^2-x-1");
    RootSet r2 = isolate_roots(sq, 64);
    ASSERT_EQ(r2.size(), 2u);
    EXPECT_EQ(r2.roots[0].multiplicity, 2);
    EXPECT_EQ(r2.indexed().size(), 4u);
}

TEST(IsolateRoots, BoxesDisjointNarrowAndNested)
{
    for (const char* s : {"x^5-x-1", "x^4-6x^3-6x^2-6x-1", "x^6+x^5-3x^3+2x-1"}) {
        IntPoly f = P(s);
        RootSet a = isolate_roots(f, 64);
        EXPECT_EQ(int(a.size()), squarefree_part(f).degree());
        for (size_t i = 0; i < a.size(); ++i) {
            EXPECT_LE(a.roots[i].box.width(), Rat(Int(1), Int(1) << 64));
            for (size_t j = i + 1; j < a.size(); ++j)
                EXPECT_TRUE(a.roots[i].box.disjoint(a.roots[j].box));
        }
        RootSet b = a.refined(200);
        for (size_t i = 0; i < a.size(); ++i) {
            const ComplexBox &x = a.roots[i].box, &y = b.roots[i].box;
            EXPECT_TRUE(x.re_lo <= y.re_lo && y.re_hi <= x.re_hi && x.im_lo <= y.im_lo &&
                        y.im_hi <= x.im_hi);
        }
    }
}

TEST(Hyperbolic, Examples)
{
    EXPECT_FALSE(is_hyperbolic(P("x^4+x^3+x^2+x+1")));
    EXPECT_TRUE(is_hyperbolic(P("x^2-3x+1")));
    EXPECT_TRUE(is_hyperbolic(P("x^2-x-1")));
    EXPECT_FALSE(is_hyperbolic(P("x^2-2x+1")));
    EXPECT_FALSE(is_hyperbolic(P("x^4-x^3-x^2-x+1")));
}

TEST(Hyperbolic, AgreesWithCertifiedNumerics)
{
    int checked = 0;
    for (int d : {2, 3, 4})
        oracle::for_each_unit_poly(d, d == 4 ? 3 : 6, [&](const IntPoly& f) {
            EXPECT_EQ(is_hyperbolic(f), oracle::hyperbolic_numeric(f)) << to_string(f);
            ++checked;
        });
    EXPECT_GT(checked, 1000);
}

TEST(IntegerLike, Examples)
{
    EXPECT_TRUE(is_integer_like(P("x^2-3x+1")));
    EXPECT_FALSE(is_integer_like(P("x^2-2")));
    EXPECT_TRUE(is_integer_like(P("x^3-x-1")));
    EXPECT_THROW(is_integer_like(P("2x^2-1")), InputError);
}

TEST(AnosovPolynomial, Examples)
{
    EXPECT_TRUE(is_anosov_polynomial(P("x^2-3x+1")));
    EXPECT_FALSE(is_anosov_polynomial(P("x-1")));
    EXPECT_FALSE(is_anosov_polynomial(P("x-2")));
    EXPECT_FALSE(is_anosov_polynomial(P("x^4+x^3+x^2+x+1")));
}

TEST(AnosovFactors, Examples)
{
    AnosovFactorReport r = irreducible_factors_are_anosov(P("x^2-3x+1") * P("x^2-7x+1"));
    EXPECT_TRUE(r.all_anosov);
    ASSERT_EQ(r.factors.size(), 2u);
    EXPECT_TRUE(r.factors[0].anosov && r.factors[1].anosov);

    EXPECT_TRUE(irreducible_factors_are_anosov(P("x^2-3x+1")).all_anosov);
    r = irreducible_factors_are_anosov(P("x^4-10x^2+1"));
    EXPECT_TRUE(r.all_anosov);
    EXPECT_EQ(r.factors.size(), 1u);
    EXPECT_THROW(irreducible_factors_are_anosov(P("x^2-x+1")), InputError);
}

TEST(AnosovFactors, RandomProductsOfQuadraticsAndCubics)
{
    std::vector<IntPoly> pool = oracle::anosov_corpus(2, 8);
    for (const IntPoly& c : oracle::anosov_corpus(3, 4))
        pool.push_back(c);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> count(2, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        IntPoly f = IntPoly::constant(Int(1));
        for (int i = count(rng); i > 0; --i)
            f = f * pool[pick(rng)];
        ASSERT_TRUE(is_anosov_polynomial(f));
        EXPECT_TRUE(irreducible_factors_are_anosov(f).all_anosov) << to_string(f);
    }
}

TEST(Discriminant, CubicFormula)
{
    // 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 for x^3 + ax^2 + bx + c.
    auto formula = [](long a, long b, long c) {
        return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
    };
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                EXPECT_EQ(discriminant(IntPoly{c, b, a, 1}), formula(a, b, c));
}
