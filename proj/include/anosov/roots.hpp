#ifndef ANOSOV_ROOTS_HPP
#define ANOSOV_ROOTS_HPP

#include "anosov/ball.hpp"
#include "anosov/poly.hpp"

#include <vector>

namespace anosov {

struct ComplexBox {
    Rat re_lo, re_hi, im_lo, im_hi;

    bool disjoint(const ComplexBox& o) const
    {
        return re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo;
    }
    bool intersects(const ComplexBox& o) const { return !disjoint(o); }
    Rat width() const { return std::max(Rat(re_hi - re_lo), Rat(im_hi - im_lo)); }
    ComplexBox intersect(const ComplexBox& o) const;
};

struct CertifiedRoot {
    ComplexBox box;        // contains exactly one root of the parent polynomial
    bool real = false;     // certified real; then im_lo = im_hi = 0
    int multiplicity = 1;
};

/*
 * Distinct roots of a polynomial, each in its own isolating box of width at
 * most 2^-precision. Order: boxes separated horizontally compare by real part,
 * otherwise by imaginary part.
 */
class RootSet {
public:
    IntPoly poly;
    std::vector<CertifiedRoot> roots;
    int precision = 0;

    size_t size() const { return roots.size(); }
    /* Ball enclosing root i (the box's circumscribed disk). */
    CBall ball(size_t i, mpfr_prec_t prec) const;
    CBall ball(size_t i) const { return ball(i, precision + 32); }
    /* Same roots, same order, boxes shrunk to the new precision. */
    RootSet refined(int new_precision) const;
    /* Distinct-root index of each root counted with multiplicity, in order. */
    std::vector<size_t> indexed() const;
};

/* Throws PrecisionError beyond the precision cap and InputError on bad input. */
RootSet isolate_roots(const IntPoly& f, int precision = 64);

/* Plain multiprecision approximations, no certification. */
std::vector<CBall> approximate_roots(const IntPoly& squarefree, mpfr_prec_t prec);

} // namespace anosov

#endif
