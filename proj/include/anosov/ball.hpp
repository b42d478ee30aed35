#ifndef ANOSOV_BALL_HPP
#define ANOSOV_BALL_HPP

#include "anosov/poly.hpp"

#include <mpfr.h>

#include <optional>

namespace anosov {

/* Owning wrapper around mpfr_t. */
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

/*
 * Complex ball: the true value lies within distance rad of re + i*im.
 * Every operation inflates rad to cover rounding, so predicates answered
 * "yes" are rigorous.
 */
class CBall {
public:
    explicit CBall(mpfr_prec_t prec = 64);
    static CBall from_rat(const Rat& re, const Rat& im, mpfr_prec_t prec);
    static CBall from_int(long v, mpfr_prec_t prec);
    static CBall from_parts(const Real& re, const Real& im, const Real& rad);

    Real re, im, rad;

    mpfr_prec_t prec() const { return re.prec(); }

    friend CBall operator+(const CBall& a, const CBall& b);
    friend CBall operator-(const CBall& a, const CBall& b);
    friend CBall operator*(const CBall& a, const CBall& b);
    friend CBall operator/(const CBall& a, const CBall& b);
    CBall operator-() const;
    /* Throws PrecisionError if the ball contains zero. */
    CBall inv() const;
    CBall pow(long e) const;

    bool may_contain_zero() const;
    /* Upper bound on |z| over the ball. */
    Real abs_upper() const;
    /* Lower bound on |z| over the ball, clamped at zero. */
    Real abs_lower() const;
    /* Integer n with the whole ball within distance 1/2 of n, if any. */
    std::optional<Int> round_to_int() const;
};

/* Ball evaluation of an integer polynomial by Horner's rule. */
CBall eval(const IntPoly& p, const CBall& z);

/* Largest ulp-scaled term: a bound 2^(1-prec) * x, rounded up, added to acc. */
void add_rounding(Real& acc, const Real& x, mpfr_prec_t prec);

/* mpfr value to exact rational. */
Rat to_rat(const Real& x);

} // namespace anosov

#endif
