#ifndef ANOSOV_POLYCORE_HPP
#define ANOSOV_POLYCORE_HPP

#include "anosov/factor.hpp"
#include "anosov/matrix.hpp"
#include "anosov/poly.hpp"
#include "anosov/roots.hpp"

#include <vector>

namespace anosov {

/* No root of modulus one. Exact: reciprocal-gcd reduction plus Sturm count. */
bool is_hyperbolic(const IntPoly& f);
bool is_hyperbolic(const RatPoly& f);

/* Monic with constant term +-1. Throws InputError on a non-monic input. */
bool is_integer_like(const IntPoly& f);

/* Integer-like, hyperbolic, degree >= 2. */
bool is_anosov_polynomial(const IntPoly& f);

/* Every root strictly outside the closed unit disk. Exact (Schur-Cohn). */
bool all_roots_outside_unit_disk(const RatPoly& f);

struct FactorReport {
    IntPoly factor;
    int multiplicity;
    bool anosov;
};

struct AnosovFactorReport {
    bool all_anosov;
    std::vector<FactorReport> factors;
};

AnosovFactorReport irreducible_factors_are_anosov(const IntPoly& f);

/* Integer polynomial from a rational one with integral coefficients; throws otherwise. */
IntPoly to_int_poly(const RatPoly& p);

} // namespace anosov

#endif
