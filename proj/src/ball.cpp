#include "anosov/ball.hpp"

#include "anosov/errors.hpp"

#include <algorithm>
#include <utility>

namespace anosov {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

/* |x| rounded up into a fresh radius-precision number. */
Real abs_up(const Real& x)
{
    Real r(kRadPrec);
    mpfr_abs(r.get(), x.get(), MPFR_RNDU);
    return r;
}

/* |re| + |im| rounded up. */
Real norm1(const CBall& z)
{
    Real a = abs_up(z.re);
    Real b = abs_up(z.im);
    mpfr_add(a.get(), a.get(), b.get(), MPFR_RNDU);
    return a;
}

} // namespace

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_swap(v_, o.v_);
    }
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

void add_rounding(Real& acc, const Real& x, mpfr_prec_t prec)
{
    Real t(kRadPrec);
    mpfr_abs(t.get(), x.get(), MPFR_RNDU);
    mpfr_mul_2si(t.get(), t.get(), 1 - long(prec), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDU);
}

Rat to_rat(const Real& x)
{
    Rat q;
    mpfr_get_q(q.get_mpq_t(), x.get());
    return q;
}

CBall::CBall(mpfr_prec_t prec) : re(prec), im(prec), rad(kRadPrec) {}

CBall CBall::from_rat(const Rat& r, const Rat& i, mpfr_prec_t prec)
{
    CBall z(prec);
    mpfr_set_q(z.re.get(), r.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(z.im.get(), i.get_mpq_t(), MPFR_RNDN);
    add_rounding(z.rad, z.re, prec);
    add_rounding(z.rad, z.im, prec);
    return z;
}

CBall CBall::from_int(long v, mpfr_prec_t prec)
{
    CBall z(prec);
    mpfr_set_si(z.re.get(), v, MPFR_RNDN);
    add_rounding(z.rad, z.re, prec);
    return z;
}

CBall CBall::from_parts(const Real& r, const Real& i, const Real& rad)
{
    CBall z(std::max(r.prec(), i.prec()));
    mpfr_set(z.re.get(), r.get(), MPFR_RNDN);
    mpfr_set(z.im.get(), i.get(), MPFR_RNDN);
    mpfr_set(z.rad.get(), rad.get(), MPFR_RNDU);
    return z;
}

CBall operator+(const CBall& a, const CBall& b)
{
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    CBall z(p);
    mpfr_add(z.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(z.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(z.rad.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
    Real n = norm1(z);
    add_rounding(z.rad, n, p);
    return z;
}

CBall CBall::operator-() const
{
    CBall z = *this;
    mpfr_neg(z.re.get(), z.re.get(), MPFR_RNDN);
    mpfr_neg(z.im.get(), z.im.get(), MPFR_RNDN);
    return z;
}

CBall operator-(const CBall& a, const CBall& b) { return a + (-b); }

CBall operator*(const CBall& a, const CBall& b)
{
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    CBall z(p);
    Real t1(p), t2(p);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(z.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(z.im.get(), t1.get(), t2.get(), MPFR_RNDN);

    Real na = norm1(a), nb = norm1(b);
    Real r(kRadPrec), t(kRadPrec);
    mpfr_mul(r.get(), na.get(), b.rad.get(), MPFR_RNDU);
    mpfr_mul(t.get(), nb.get(), a.rad.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), na.get(), nb.get(), MPFR_RNDU);
    mpfr_mul_2si(t.get(), t.get(), 2 - long(p), MPFR_RNDU);
    mpfr_add(z.rad.get(), r.get(), t.get(), MPFR_RNDU);
    return z;
}

CBall CBall::inv() const
{
    mpfr_prec_t p = prec();
    Real lo(kRadPrec), t(kRadPrec);
    mpfr_abs(lo.get(), re.get(), MPFR_RNDD);
    mpfr_abs(t.get(), im.get(), MPFR_RNDD);
    mpfr_max(lo.get(), lo.get(), t.get(), MPFR_RNDD);
    if (mpfr_cmp(lo.get(), rad.get()) <= 0)
        throw PrecisionError("ball inversion: ball contains zero");

    CBall z(p);
    Real d(p + 8);
    Real sq(p + 8);
    mpfr_sqr(d.get(), re.get(), MPFR_RNDN);
    mpfr_sqr(sq.get(), im.get(), MPFR_RNDN);
    mpfr_add(d.get(), d.get(), sq.get(), MPFR_RNDN);
    mpfr_div(z.re.get(), re.get(), d.get(), MPFR_RNDN);
    mpfr_div(z.im.get(), im.get(), d.get(), MPFR_RNDN);
    mpfr_neg(z.im.get(), z.im.get(), MPFR_RNDN);

    // rounding: a few ulps of 1/|mid|
    Real r(kRadPrec);
    mpfr_ui_div(r.get(), 1, lo.get(), MPFR_RNDU);
    mpfr_mul_2si(r.get(), r.get(), 4 - long(p), MPFR_RNDU);
    // propagation: rad / (|m| (|m| - rad))
    Real den(kRadPrec);
    mpfr_sub(den.get(), lo.get(), rad.get(), MPFR_RNDD);
    mpfr_mul(den.get(), den.get(), lo.get(), MPFR_RNDD);
    mpfr_div(t.get(), rad.get(), den.get(), MPFR_RNDU);
    mpfr_add(z.rad.get(), r.get(), t.get(), MPFR_RNDU);
    return z;
}

CBall operator/(const CBall& a, const CBall& b) { return a * b.inv(); }

CBall CBall::pow(long e) const
{
    if (e < 0)
        return inv().pow(-e);
    CBall result = CBall::from_int(1, prec());
    CBall base = *this;
    bool first = true;
    while (e > 0) {
        if (e & 1) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

bool CBall::may_contain_zero() const
{
    Real lo(kRadPrec), t(kRadPrec), r2(kRadPrec);
    mpfr_sqr(lo.get(), re.get(), MPFR_RNDD);
    mpfr_sqr(t.get(), im.get(), MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
    mpfr_sqr(r2.get(), rad.get(), MPFR_RNDU);
    return mpfr_cmp(lo.get(), r2.get()) <= 0;
}

Real CBall::abs_upper() const
{
    Real a(kRadPrec), t(kRadPrec);
    mpfr_hypot(a.get(), re.get(), im.get(), MPFR_RNDU);
    mpfr_add(a.get(), a.get(), rad.get(), MPFR_RNDU);
    return a;
}

Real CBall::abs_lower() const
{
    Real a(kRadPrec);
    mpfr_hypot(a.get(), re.get(), im.get(), MPFR_RNDD);
    mpfr_sub(a.get(), a.get(), rad.get(), MPFR_RNDD);
    if (mpfr_sgn(a.get()) < 0)
        mpfr_set_zero(a.get(), 1);
    return a;
}

std::optional<Int> CBall::round_to_int() const
{
    Int n;
    mpfr_get_z(n.get_mpz_t(), re.get(), MPFR_RNDN);
    Real d(prec() + 8);
    mpfr_sub_z(d.get(), re.get(), n.get_mpz_t(), MPFR_RNDN);
    Real err(kRadPrec);
    mpfr_abs(err.get(), d.get(), MPFR_RNDU);
    add_rounding(err, d, prec() + 8);
    Real t = abs_up(im);
    mpfr_add(err.get(), err.get(), t.get(), MPFR_RNDU);
    mpfr_add(err.get(), err.get(), rad.get(), MPFR_RNDU);
    if (mpfr_cmp_d(err.get(), 0.5) < 0)
        return n;
    return std::nullopt;
}

CBall eval(const IntPoly& p, const CBall& z)
{
    mpfr_prec_t prec = z.prec();
    CBall acc(prec);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * z;
        acc = acc + CBall::from_rat(Rat(p.c[i]), Rat(0), prec);
    }
    return acc;
}

} // namespace anosov
