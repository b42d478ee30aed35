#include "anosov/galois.hpp"

#include "anosov/errors.hpp"
#include "anosov/factor.hpp"
#include "anosov/polycore.hpp"
#include "anosov/unitlattice.hpp"

#include <algorithm>

namespace anosov {

namespace {

bool is_int_square(const Int& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

/* q is a square in Q(sqrt D), D not a rational square. */
bool square_in_quadratic(const Rat& q, const Rat& D)
{
    return is_rational_square(q) || is_rational_square(q * D);
}

} // namespace

const char* to_string(GaloisGroupTag g)
{
    switch (g) {
    case GaloisGroupTag::Z2: return "Z2";
    case GaloisGroupTag::Z2xZ2: return "Z2xZ2";
    case GaloisGroupTag::Z3: return "Z3";
    case GaloisGroupTag::S3: return "S3";
    case GaloisGroupTag::Z4: return "Z4";
    case GaloisGroupTag::K4: return "K4";
    case GaloisGroupTag::D8: return "D8";
    case GaloisGroupTag::A4: return "A4";
    case GaloisGroupTag::S4: return "S4";
    }
    return "?";
}

GaloisGroupTag galois_tag_from_string(const std::string& s)
{
    for (auto g : {GaloisGroupTag::Z2, GaloisGroupTag::Z2xZ2, GaloisGroupTag::Z3, GaloisGroupTag::S3,
                   GaloisGroupTag::Z4, GaloisGroupTag::K4, GaloisGroupTag::D8, GaloisGroupTag::A4,
                   GaloisGroupTag::S4})
        if (s == to_string(g))
            return g;
    throw InputError("unknown Galois group tag: " + s);
}

bool is_rational_square(const Rat& q)
{
    if (q < 0)
        return false;
    return is_int_square(q.get_num()) && is_int_square(q.get_den());
}

GaloisGroupTag galois_group_cubic(const IntPoly& f)
{
    if (f.degree() != 3)
        throw InputError("galois_group_cubic needs a cubic");
    if (!factor_over_rationals(f).irreducible())
        throw InputError("galois_group_cubic needs an irreducible cubic");
    return is_int_square(discriminant(f)) ? GaloisGroupTag::Z3 : GaloisGroupTag::S3;
}

IntPoly resolvent_cubic(const IntPoly& f)
{
    if (f.degree() != 4 || f.lead() != 1)
        throw InputError("resolvent_cubic needs a monic quartic");
    Int a = f.c[3], b = f.c[2], c = f.c[1], d = f.c[0];
    return IntPoly(std::vector<Int>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Int(1)});
}

GaloisGroupTag galois_group_quartic(const IntPoly& f)
{
    if (f.degree() != 4 || f.lead() != 1)
        throw InputError("galois_group_quartic needs a monic quartic");
    if (!factor_over_rationals(f).irreducible())
        throw InputError("galois_group_quartic needs an irreducible quartic");
    Int D = discriminant(f);
    IntPoly R = resolvent_cubic(f);
    FactorList rf = factor_over_rationals(R);
    std::vector<Rat> rational_roots;
    for (const auto& fac : rf.factors)
        if (fac.poly.degree() == 1)
            for (int m = 0; m < fac.multiplicity; ++m)
                rational_roots.push_back(Rat(-fac.poly.c[0], fac.poly.c[1]));
    for (auto& r : rational_roots)
        r.canonicalize();
    if (rational_roots.empty())
        return is_int_square(D) ? GaloisGroupTag::A4 : GaloisGroupTag::S4;
    if (rational_roots.size() == 3)
        return GaloisGroupTag::K4;
    // one rational root r: Z4 iff f splits over Q(sqrt D) into two quadratics,
    // i.e. x^2 - r x + d and x^2 + a x + (b - r) both split there.
    Rat r = rational_roots[0];
    Rat a(f.c[3]), b(f.c[2]), d(f.c[0]);
    Rat q1 = r * r - 4 * d;
    Rat q2 = a * a - 4 * (b - r);
    Rat disc(D);
    bool z4 = square_in_quadratic(q1, disc) && square_in_quadratic(q2, disc);
    return z4 ? GaloisGroupTag::Z4 : GaloisGroupTag::D8;
}

GaloisGroupTag galois_group_small(const IntPoly& f)
{
    int n = f.degree();
    if (n < 2 || n > 4)
        throw InputError("galois_group_small handles degrees 2 to 4");
    FactorList fl = factor_over_rationals(f);
    for (const auto& fac : fl.factors)
        if (fac.poly.degree() == 1)
            throw InputError("polynomial has a rational root");
    if (n == 2)
        return GaloisGroupTag::Z2;
    if (n == 3)
        return galois_group_cubic(f);
    if (fl.irreducible())
        return galois_group_quartic(primitive_part(f));
    // product of quadratics (or a square of one)
    Int prod = 1;
    for (const auto& fac : fl.factors)
        if (fac.multiplicity % 2)
            prod *= discriminant(fac.poly);
    if (fl.factors.size() == 1 || is_int_square(prod))
        return GaloisGroupTag::Z2;
    return GaloisGroupTag::Z2xZ2;
}

const std::vector<Table1Row>& table1_rows()
{
    using G = GaloisGroupTag;
    static const std::vector<Table1Row> rows = {
        {2, true, true, {G::Z2}},
        {3, true, true, {G::Z3, G::S3}},
        {4, true, true, {G::Z4, G::K4, G::D8, G::A4, G::S4}},
        {4, false, true, {G::Z4, G::K4, G::D8}},
        {4, false, false, {G::Z2, G::Z2xZ2}},
    };
    return rows;
}

GaloisReport table1_check(const IntPoly& f)
{
    if (!is_anosov_polynomial(f) || f.degree() > 4)
        throw InputError("table1_check needs an Anosov polynomial of degree 2 to 4");
    GaloisReport rep;
    rep.poly = f;
    rep.degree = f.degree();
    rep.irreducible = factor_over_rationals(f).irreducible();
    rep.full_rank = is_full_rank(f);
    rep.group = galois_group_small(f);
    rep.table1_row_ok = false;
    for (const auto& row : table1_rows()) {
        if (row.degree != rep.degree || row.full_rank != rep.full_rank ||
            row.irreducible != rep.irreducible)
            continue;
        rep.table1_row_ok =
            std::find(row.allowed.begin(), row.allowed.end(), rep.group) != row.allowed.end();
    }
    return rep;
}

} // namespace anosov
