#include "anosov/polycore.hpp"

#include "anosov/errors.hpp"

namespace anosov {

namespace {

/* x^-m h(x) = H(x + 1/x) for palindromic h of degree 2m. */
RatPoly reciprocal_reduce(const IntPoly& h)
{
    int m = h.degree() / 2;
    // T_k(y) with x^k + x^-k = T_k(x + 1/x)
    std::vector<RatPoly> t{RatPoly::constant(2), RatPoly::x()};
    for (int k = 2; k <= m; ++k)
        t.push_back(RatPoly::x() * t[k - 1] - t[k - 2]);
    RatPoly H = RatPoly::constant(Rat(h.c[m]));
    for (int k = 1; k <= m; ++k)
        H += t[k] * Rat(h.c[m + k]);
    return H;
}

bool palindromic(const IntPoly& h)
{
    int d = h.degree();
    for (int i = 0; i <= d; ++i)
        if (h.c[i] != h.c[d - i])
            return false;
    return true;
}

} // namespace

IntPoly to_int_poly(const RatPoly& p)
{
    std::vector<Int> c;
    for (const auto& v : p.c) {
        if (v.get_den() != 1)
            throw InputError("polynomial has non-integral coefficients");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

bool is_hyperbolic(const IntPoly& f0)
{
    if (f0.is_zero())
        throw InputError("is_hyperbolic of the zero polynomial");
    IntPoly f = primitive_part(f0);
    while (f.degree() > 0 && f.c[0] == 0)
        f.c.erase(f.c.begin());
    if (f.degree() < 1)
        return true;
    if (f.eval(1) == 0 || f.eval(-1) == 0)
        return false;
    IntPoly h = gcd(f, reverse(f));
    if (h.degree() < 1)
        return true;
    if (!palindromic(h)) {
        IntPoly neg = -h;
        if (!palindromic(neg))
            throw std::logic_error("reciprocal gcd is not palindromic");
        h = neg;
    }
    RatPoly H = reciprocal_reduce(h);
    return sturm_count(H, Rat(-2), Rat(2)) == 0 && H.eval(Rat(-2)) != 0;
}

bool is_hyperbolic(const RatPoly& f) { return is_hyperbolic(primitive_part(f)); }

bool is_integer_like(const IntPoly& f)
{
    if (f.degree() < 1 || f.lead() != 1)
        throw InputError("is_integer_like requires a monic polynomial");
    return f.c[0] == 1 || f.c[0] == -1;
}

bool is_anosov_polynomial(const IntPoly& f)
{
    if (f.degree() < 2 || f.lead() != 1)
        return false;
    return is_integer_like(f) && is_hyperbolic(f);
}

bool all_roots_outside_unit_disk(const RatPoly& f)
{
    if (f.is_zero() || f.c[0] == 0)
        return false;
    std::vector<Rat> rc(f.c.rbegin(), f.c.rend());
    return schur_stable(RatPoly(std::move(rc)));
}

AnosovFactorReport irreducible_factors_are_anosov(const IntPoly& f)
{
    if (!is_anosov_polynomial(f))
        throw InputError("irreducible_factors_are_anosov needs an Anosov polynomial");
    AnosovFactorReport rep{true, {}};
    FactorList fl = factor_over_rationals(f);
    for (const auto& fac : fl.factors) {
        bool ok = is_anosov_polynomial(fac.poly);
        rep.factors.push_back({fac.poly, fac.multiplicity, ok});
        rep.all_anosov = rep.all_anosov && ok;
    }
    if (fl.unit != 1 && fl.unit != -1)
        rep.all_anosov = false;
    return rep;
}

} // namespace anosov
