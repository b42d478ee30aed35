#include "anosov/roots.hpp"

#include "anosov/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace anosov {

namespace {

/* Midpoint-only complex number used by the iteration. */
struct Cx {
    Real re, im;
    explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

mpfr_prec_t prec_of(const Cx& z) { return z.re.prec(); }

Cx cx_sub(const Cx& a, const Cx& b)
{
    Cx z(prec_of(a));
    mpfr_sub(z.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(z.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return z;
}

Cx cx_add(const Cx& a, const Cx& b)
{
    Cx z(prec_of(a));
    mpfr_add(z.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(z.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return z;
}

Cx cx_mul(const Cx& a, const Cx& b)
{
    mpfr_prec_t p = prec_of(a);
    Cx z(p);
    Real t(p);
    mpfr_mul(z.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(z.re.get(), z.re.get(), t.get(), MPFR_RNDN);
    mpfr_mul(z.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(z.im.get(), z.im.get(), t.get(), MPFR_RNDN);
    return z;
}

bool cx_is_zero(const Cx& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

Cx cx_div(const Cx& a, const Cx& b)
{
    mpfr_prec_t p = prec_of(a);
    Real d(p), t(p);
    mpfr_sqr(d.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(d.get(), d.get(), t.get(), MPFR_RNDN);
    Cx conj(p);
    mpfr_set(conj.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
    Cx z = cx_mul(a, conj);
    mpfr_div(z.re.get(), z.re.get(), d.get(), MPFR_RNDN);
    mpfr_div(z.im.get(), z.im.get(), d.get(), MPFR_RNDN);
    return z;
}

void cx_abs(Real& out, const Cx& a) { mpfr_hypot(out.get(), a.re.get(), a.im.get(), MPFR_RNDN); }

Cx cx_set_prec(const Cx& a, mpfr_prec_t p)
{
    Cx z(p);
    mpfr_set(z.re.get(), a.re.get(), MPFR_RNDN);
    mpfr_set(z.im.get(), a.im.get(), MPFR_RNDN);
    return z;
}

/* p(z) and p'(z) by Horner. */
void horner2(const IntPoly& g, const Cx& z, Cx& val, Cx& der)
{
    mpfr_prec_t p = prec_of(z);
    val = Cx(p);
    der = Cx(p);
    for (int i = g.degree(); i >= 0; --i) {
        der = cx_add(cx_mul(der, z), val);
        val = cx_mul(val, z);
        mpfr_add_z(val.re.get(), val.re.get(), g.c[i].get_mpz_t(), MPFR_RNDN);
    }
}

std::vector<Cx> initial_points(const IntPoly& g, mpfr_prec_t p)
{
    int n = g.degree();
    double a0 = std::fabs(mpz_get_d(g.c[0].get_mpz_t()));
    double an = std::fabs(mpz_get_d(g.lead().get_mpz_t()));
    double r = (a0 > 0 && an > 0) ? std::pow(a0 / an, 1.0 / n) : 1.0;
    if (!std::isfinite(r) || r <= 0)
        r = 1.0;
    std::vector<Cx> z;
    for (int k = 0; k < n; ++k) {
        double ang = 2 * M_PI * k / n + 0.7;
        Cx c(p);
        mpfr_set_d(c.re.get(), r * std::cos(ang), MPFR_RNDN);
        mpfr_set_d(c.im.get(), r * std::sin(ang), MPFR_RNDN);
        z.push_back(std::move(c));
    }
    return z;
}

/* Aberth-Ehrlich iteration; returns true on convergence at precision p. */
bool aberth(const IntPoly& g, std::vector<Cx>& z, mpfr_prec_t p, int max_iter)
{
    int n = g.degree();
    Real tol(64), corr_abs(64), zabs(64);
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            Cx val(p), der(p);
            horner2(g, z[i], val, der);
            if (cx_is_zero(val))
                continue;
            if (cx_is_zero(der)) {
                mpfr_nextabove(z[i].re.get());
                done = false;
                continue;
            }
            Cx w = cx_div(val, der);
            Cx s(p);
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                Cx d = cx_sub(z[i], z[j]);
                if (cx_is_zero(d))
                    continue;
                Cx one(p);
                mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
                s = cx_add(s, cx_div(one, d));
            }
            Cx one(p);
            mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
            Cx den = cx_sub(one, cx_mul(w, s));
            Cx corr = cx_is_zero(den) ? w : cx_div(w, den);
            z[i] = cx_sub(z[i], corr);
            cx_abs(corr_abs, corr);
            cx_abs(zabs, z[i]);
            if (mpfr_cmp_ui(zabs.get(), 1) < 0)
                mpfr_set_ui(zabs.get(), 1, MPFR_RNDN);
            mpfr_mul_2si(tol.get(), zabs.get(), -long(p) + 12, MPFR_RNDN);
            if (!mpfr_number_p(corr_abs.get()) || mpfr_cmp(corr_abs.get(), tol.get()) > 0)
                done = false;
        }
        if (done)
            return true;
    }
    return false;
}

/* Force exact conjugate symmetry and put near-real approximations on the axis. */
void symmetrize(std::vector<Cx>& z, mpfr_prec_t p)
{
    size_t n = z.size();
    std::vector<int> kind(n, 0); // 0 real, 1 upper, -1 lower
    Real a(64), t(64);
    for (size_t i = 0; i < n; ++i) {
        cx_abs(a, z[i]);
        if (mpfr_cmp_ui(a.get(), 1) < 0)
            mpfr_set_ui(a.get(), 1, MPFR_RNDN);
        mpfr_mul_2si(a.get(), a.get(), -long(p) / 2, MPFR_RNDN);
        mpfr_abs(t.get(), z[i].im.get(), MPFR_RNDN);
        if (mpfr_cmp(t.get(), a.get()) <= 0)
            kind[i] = 0;
        else
            kind[i] = mpfr_sgn(z[i].im.get()) > 0 ? 1 : -1;
    }
    std::vector<bool> used(n, false);
    for (size_t i = 0; i < n; ++i) {
        if (kind[i] != 1)
            continue;
        Cx c(p);
        mpfr_set(c.re.get(), z[i].re.get(), MPFR_RNDN);
        mpfr_neg(c.im.get(), z[i].im.get(), MPFR_RNDN);
        int best = -1;
        Real bd(64), d(64);
        for (size_t j = 0; j < n; ++j) {
            if (kind[j] != -1 || used[j])
                continue;
            cx_abs(d, cx_sub(z[j], c));
            if (best < 0 || mpfr_cmp(d.get(), bd.get()) < 0) {
                best = int(j);
                mpfr_set(bd.get(), d.get(), MPFR_RNDN);
            }
        }
        if (best < 0)
            return;
        used[best] = true;
        z[best] = std::move(c);
    }
    for (size_t i = 0; i < n; ++i)
        if (kind[i] == 0)
            mpfr_set_zero(z[i].im.get(), 1);
}

CBall exact_ball(const Cx& z)
{
    Real zero(64);
    return CBall::from_parts(z.re, z.im, zero);
}

Rat floor_grid(const Real& x, long q)
{
    Real t(x.prec() + 2);
    mpfr_mul_2si(t.get(), x.get(), q, MPFR_RNDD);
    Int n;
    mpfr_get_z(n.get_mpz_t(), t.get(), MPFR_RNDD);
    Rat r(n);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), q);
    return r;
}

Rat ceil_grid(const Real& x, long q)
{
    Real t(x.prec() + 2);
    mpfr_mul_2si(t.get(), x.get(), q, MPFR_RNDU);
    Int n;
    mpfr_get_z(n.get_mpz_t(), t.get(), MPFR_RNDU);
    Rat r(n);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), q);
    return r;
}

/*
 * Inclusion disks |z - z_i| <= n |g(z_i) / (lc prod_{j!=i} (z_i - z_j))|.
 * Their union holds all roots and each connected component holds as many
 * roots as disks, so pairwise disjoint disks isolate.
 */
bool certify(const IntPoly& g, const std::vector<Cx>& z, int target, int mult,
             std::vector<CertifiedRoot>& out)
{
    int n = g.degree();
    mpfr_prec_t p = prec_of(z[0]);
    std::vector<Real> rad;
    std::vector<CBall> balls;
    for (const auto& zi : z)
        balls.push_back(exact_ball(zi));
    CBall lc = CBall::from_rat(Rat(g.lead()), 0, p);
    Real limit(64);
    mpfr_set_ui(limit.get(), 1, MPFR_RNDN);
    mpfr_mul_2si(limit.get(), limit.get(), -long(target) - 2, MPFR_RNDN);
    for (int i = 0; i < n; ++i) {
        CBall num = eval(g, balls[i]);
        CBall den = lc;
        for (int j = 0; j < n; ++j)
            if (j != i)
                den = den * (balls[i] - balls[j]);
        Real lo = den.abs_lower();
        if (mpfr_zero_p(lo.get()))
            return false;
        Real r = num.abs_upper();
        mpfr_div(r.get(), r.get(), lo.get(), MPFR_RNDU);
        mpfr_mul_ui(r.get(), r.get(), unsigned(n), MPFR_RNDU);
        if (mpfr_cmp(r.get(), limit.get()) > 0)
            return false;
        rad.push_back(r);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Real d = (balls[i] - balls[j]).abs_lower();
            Real s(64);
            mpfr_add(s.get(), rad[i].get(), rad[j].get(), MPFR_RNDU);
            if (mpfr_cmp(d.get(), s.get()) <= 0)
                return false;
        }
    long q = target + 2;
    for (int i = 0; i < n; ++i) {
        CertifiedRoot cr;
        cr.multiplicity = mult;
        Real lo(p + 64), hi(p + 64);
        mpfr_sub(lo.get(), z[i].re.get(), rad[i].get(), MPFR_RNDD);
        mpfr_add(hi.get(), z[i].re.get(), rad[i].get(), MPFR_RNDU);
        cr.box.re_lo = floor_grid(lo, q);
        cr.box.re_hi = ceil_grid(hi, q);
        if (mpfr_zero_p(z[i].im.get())) {
            cr.real = true;
            cr.box.im_lo = cr.box.im_hi = 0;
        } else {
            mpfr_sub(lo.get(), z[i].im.get(), rad[i].get(), MPFR_RNDD);
            mpfr_add(hi.get(), z[i].im.get(), rad[i].get(), MPFR_RNDU);
            cr.box.im_lo = floor_grid(lo, q);
            cr.box.im_hi = ceil_grid(hi, q);
        }
        out.push_back(std::move(cr));
    }
    return true;
}

void sort_roots(std::vector<CertifiedRoot>& roots)
{
    std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        return a.box.re_lo < b.box.re_lo;
    });
    // clusters of horizontally overlapping boxes are ordered by imaginary part
    size_t i = 0;
    while (i < roots.size()) {
        size_t j = i + 1;
        Rat hi = roots[i].box.re_hi;
        while (j < roots.size() && roots[j].box.re_lo <= hi) {
            hi = std::max(hi, roots[j].box.re_hi);
            ++j;
        }
        std::sort(roots.begin() + i, roots.begin() + j,
                  [](const CertifiedRoot& a, const CertifiedRoot& b) {
                      Rat ia = a.box.im_lo + a.box.im_hi, ib = b.box.im_lo + b.box.im_hi;
                      if (ia != ib)
                          return ia < ib;
                      return a.box.re_lo + a.box.re_hi < b.box.re_lo + b.box.re_hi;
                  });
        i = j;
    }
}

} // namespace

ComplexBox ComplexBox::intersect(const ComplexBox& o) const
{
    return {std::max(re_lo, o.re_lo), std::min(re_hi, o.re_hi), std::max(im_lo, o.im_lo),
            std::min(im_hi, o.im_hi)};
}

std::vector<CBall> approximate_roots(const IntPoly& g, mpfr_prec_t prec)
{
    std::vector<Cx> z = initial_points(g, 64);
    aberth(g, z, 64, 2000);
    if (prec > 64) {
        for (auto& v : z)
            v = cx_set_prec(v, prec);
        aberth(g, z, prec, 200);
    }
    std::vector<CBall> out;
    for (const auto& v : z)
        out.push_back(exact_ball(v));
    return out;
}

RootSet isolate_roots(const IntPoly& f, int precision)
{
    if (f.degree() < 1)
        throw InputError("isolate_roots needs a nonconstant polynomial");
    if (precision < 1)
        throw InputError("precision must be positive");
    auto parts = squarefree_decomposition(f);
    std::vector<std::vector<Cx>> hints(parts.size());
    mpfr_prec_t wp = std::max(64, precision + 32);
    bool first = true;
    while (true) {
        if (wp > kPrecisionCap)
            throw PrecisionError("root isolation exceeded the precision cap");
        std::vector<CertifiedRoot> all;
        bool ok = true;
        for (size_t m = 0; m < parts.size() && ok; ++m) {
            const IntPoly& g = parts[m];
            if (g.degree() < 1)
                continue;
            if (g.degree() == 1) {
                Rat r(-g.c[0], g.c[1]);
                r.canonicalize();
                CertifiedRoot cr;
                cr.box = {r, r, 0, 0};
                cr.real = true;
                cr.multiplicity = int(m) + 1;
                all.push_back(cr);
                continue;
            }
            auto& z = hints[m];
            if (z.empty())
                z = initial_points(g, wp);
            else
                for (auto& v : z)
                    v = cx_set_prec(v, wp);
            aberth(g, z, wp, first ? 4000 : 200);
            symmetrize(z, wp);
            ok = certify(g, z, precision, int(m) + 1, all);
        }
        first = false;
        if (ok) {
            for (size_t i = 0; i < all.size() && ok; ++i)
                for (size_t j = i + 1; j < all.size() && ok; ++j)
                    if (all[i].box.intersects(all[j].box))
                        ok = false;
        }
        if (ok) {
            sort_roots(all);
            RootSet rs;
            rs.poly = f;
            rs.roots = std::move(all);
            rs.precision = precision;
            return rs;
        }
        wp *= 2;
    }
}

CBall RootSet::ball(size_t i, mpfr_prec_t prec) const
{
    const ComplexBox& b = roots.at(i).box;
    Rat mr = (b.re_lo + b.re_hi) / 2, mi = (b.im_lo + b.im_hi) / 2;
    CBall z = CBall::from_rat(mr, mi, prec);
    Rat hw = (b.re_hi - b.re_lo) / 2 + (b.im_hi - b.im_lo) / 2;
    Real h(64);
    mpfr_set_q(h.get(), hw.get_mpq_t(), MPFR_RNDU);
    mpfr_add(z.rad.get(), z.rad.get(), h.get(), MPFR_RNDU);
    return z;
}

RootSet RootSet::refined(int new_precision) const
{
    if (new_precision <= precision)
        return *this;
    RootSet fresh = isolate_roots(poly, new_precision);
    RootSet out = *this;
    out.precision = new_precision;
    std::vector<bool> taken(fresh.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        int hit = -1;
        for (size_t j = 0; j < fresh.size(); ++j) {
            if (!taken[j] && roots[i].box.intersects(fresh.roots[j].box)) {
                if (hit >= 0)
                    throw PrecisionError("ambiguous root refinement");
                hit = int(j);
            }
        }
        if (hit < 0)
            throw std::logic_error("refined root lost its box");
        taken[hit] = true;
        out.roots[i].box = roots[i].box.intersect(fresh.roots[hit].box);
        out.roots[i].real = roots[i].real || fresh.roots[hit].real;
    }
    return out;
}

std::vector<size_t> RootSet::indexed() const
{
    std::vector<size_t> idx;
    for (size_t i = 0; i < roots.size(); ++i)
        for (int k = 0; k < roots[i].multiplicity; ++k)
            idx.push_back(i);
    return idx;
}

} // namespace anosov
