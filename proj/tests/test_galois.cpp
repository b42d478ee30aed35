#include "anosov/errors.hpp"
#include "anosov/galois.hpp"
#include "anosov/unitlattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace anosov;

namespace {

IntPoly P(const char* s) { return parse_poly(s); }

int order(GaloisGroupTag g)
{
    switch (g) {
    case GaloisGroupTag::Z2: return 2;
    case GaloisGroupTag::Z2xZ2: return 4;
    case GaloisGroupTag::Z3: return 3;
    case GaloisGroupTag::S3: return 6;
    case GaloisGroupTag::Z4: return 4;
    case GaloisGroupTag::K4: return 4;
    case GaloisGroupTag::D8: return 8;
    case GaloisGroupTag::A4: return 12;
    case GaloisGroupTag::S4: return 24;
    }
    return 0;
}

} // namespace

TEST(Cubic, DiscriminantDecides)
{
    EXPECT_EQ(discriminant(P("x^3-x^2-2x+1")), 49);
    EXPECT_EQ(galois_group_cubic(P("x^3-x^2-2x+1")), GaloisGroupTag::Z3);
    EXPECT_EQ(discriminant(P("x^3-x-1")), -23);
    EXPECT_EQ(galois_group_cubic(P("x^3-x-1")), GaloisGroupTag::S3);
    EXPECT_EQ(discriminant(P("x^3-3x-1")), 81);
    EXPECT_EQ(galois_group_cubic(P("x^3-3x-1")), GaloisGroupTag::Z3);
    EXPECT_THROW(galois_group_cubic(P("x^3-1")), InputError);
    EXPECT_THROW(galois_group_cubic(P("x^2-3x+1")), InputError);
}

TEST(Quartic, Examples)
{
    EXPECT_EQ(galois_group_quartic(P("x^4-10x^2+1")), GaloisGroupTag::K4);
    EXPECT_EQ(galois_group_quartic(P("x^4+x^3+x^2+x+1")), GaloisGroupTag::Z4);
    // Not hyperbolic, but the group computation does not care. Self-reciprocal
    // quartics have group inside D8.
    EXPECT_EQ(galois_group_quartic(P("x^4-x^3-x^2-x+1")), GaloisGroupTag::D8);
    EXPECT_EQ(galois_group_quartic(P("x^4-6x^3-6x^2-6x-1")), GaloisGroupTag::S4);
    EXPECT_EQ(galois_group_quartic(P("x^4-3x^3+3x^2+2x+1")), GaloisGroupTag::A4);
    EXPECT_EQ(galois_group_quartic(P("x^4-2")), GaloisGroupTag::D8);
    EXPECT_THROW(galois_group_quartic(P("x^4-1")), InputError);
}

TEST(Quartic, ResolventCubicConvention)
{
    // x^4 + ax^3 + bx^2 + cx + d with (a, b, c, d) = (1, 2, 3, 4):
    // y^3 - 2y^2 + (3 - 16)y - (4 - 32 + 9).
    EXPECT_EQ(resolvent_cubic(P("x^4+x^3+2x^2+3x+4")), P("x^3-2x^2-13x+19"));
}

TEST(Tags, RoundTrip)
{
    for (auto g : {GaloisGroupTag::Z2, GaloisGroupTag::Z2xZ2, GaloisGroupTag::Z3,
                   GaloisGroupTag::S3, GaloisGroupTag::Z4, GaloisGroupTag::K4, GaloisGroupTag::D8,
                   GaloisGroupTag::A4, GaloisGroupTag::S4})
        EXPECT_EQ(galois_tag_from_string(to_string(g)), g);
    EXPECT_THROW(galois_tag_from_string("C5"), InputError);
}

TEST(Table1, Examples)
{
    GaloisReport q = table1_check(P("x^2-3x+1"));
    EXPECT_TRUE(q.table1_row_ok);
    EXPECT_EQ(q.group, GaloisGroupTag::Z2);

    GaloisReport b = table1_check(P("x^4-10x^2+1"));
    EXPECT_TRUE(b.table1_row_ok);
    EXPECT_TRUE(b.irreducible);
    EXPECT_FALSE(b.full_rank);
    EXPECT_EQ(b.group, GaloisGroupTag::K4);

    GaloisReport r = table1_check(P("x^2-3x+1") * P("x^2-7x+1"));
    EXPECT_TRUE(r.table1_row_ok);
    EXPECT_FALSE(r.irreducible);
    EXPECT_TRUE(r.group == GaloisGroupTag::Z2 || r.group == GaloisGroupTag::Z2xZ2);

    EXPECT_THROW(table1_check(P("x^5-x-1")), InputError);
}

TEST(Table1, RowsMatchPublishedTable)
{
    using G = GaloisGroupTag;
    std::map<std::tuple<int, bool, bool>, std::vector<G>> want{
        {{2, true, true}, {G::Z2}},
        {{3, true, true}, {G::Z3, G::S3}},
        {{4, false, false}, {G::Z2, G::Z2xZ2}},
        {{4, false, true}, {G::Z4, G::K4, G::D8}},
        {{4, true, true}, {G::Z4, G::K4, G::D8, G::A4, G::S4}},
    };
    ASSERT_EQ(table1_rows().size(), want.size());
    for (const auto& row : table1_rows()) {
        auto it = want.find({row.degree, row.full_rank, row.irreducible});
        ASSERT_NE(it, want.end());
        EXPECT_EQ(row.allowed, it->second);
    }
}

TEST(Cubic, OrderDivisibleByThree)
{
    for (const IntPoly& f : oracle::anosov_corpus(3, 8)) {
        if (!factor_over_rationals(f).irreducible())
            continue;
        EXPECT_EQ(order(galois_group_cubic(f)) % 3, 0) << to_string(f);
    }
}

TEST(BruteForce, AgreesOnCubicsAndQuartics)
{
    int compared = 0;
    for (const IntPoly& f : oracle::anosov_corpus(3, 3)) {
        auto bf = oracle::galois_brute_force(f);
        ASSERT_TRUE(bf.has_value()) << to_string(f);
        if (factor_over_rationals(f).irreducible()) {
            EXPECT_EQ(galois_group_cubic(f), *bf) << to_string(f);
            ++compared;
        }
    }
    std::map<GaloisGroupTag, int> seen;
    std::vector<IntPoly> quartics = oracle::anosov_corpus(4, 6);
    for (size_t i = 0; i < quartics.size(); ++i) {
        const IntPoly& f = quartics[i];
        GaloisGroupTag g = galois_group_small(f);
        // Every rare group, and a stride through the common ones.
        if (g == GaloisGroupTag::S4 && i % 40 != 0)
            continue;
        if (g == GaloisGroupTag::D8 && i % 4 != 0)
            continue;
        auto bf = oracle::galois_brute_force(f);
        ASSERT_TRUE(bf.has_value()) << to_string(f);
        EXPECT_EQ(g, *bf) << to_string(f);
        ++seen[g];
        ++compared;
    }
    for (auto g : {GaloisGroupTag::Z2, GaloisGroupTag::Z2xZ2, GaloisGroupTag::Z4,
                   GaloisGroupTag::K4, GaloisGroupTag::D8, GaloisGroupTag::A4, GaloisGroupTag::S4})
        EXPECT_GT(seen[g], 0) << to_string(g);
    EXPECT_GT(compared, 200);
}

TEST(BruteForce, NonAnosovQuartics)
{
    EXPECT_EQ(oracle::galois_brute_force(P("x^4+x^3+x^2+x+1")), GaloisGroupTag::Z4);
    EXPECT_EQ(oracle::galois_brute_force(P("x^4-2")), GaloisGroupTag::D8);
    EXPECT_EQ(oracle::galois_brute_force(P("x^4-x^3-x^2-x+1")), GaloisGroupTag::D8);
    EXPECT_EQ(oracle::galois_brute_force(P("x^4-10x^2+1")), GaloisGroupTag::K4);
}

TEST(Table1, NoOrderThreeWithoutFullRank)
{
    for (const IntPoly& f : oracle::anosov_corpus(4, 4)) {
        GaloisReport r = table1_check(f);
        EXPECT_TRUE(r.table1_row_ok) << to_string(f);
        EXPECT_EQ(r.full_rank, is_full_rank(f));
        if (r.irreducible && !r.full_rank)
            EXPECT_TRUE(r.group != GaloisGroupTag::A4 && r.group != GaloisGroupTag::S4)
                << to_string(f);
    }
}
