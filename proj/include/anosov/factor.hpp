#ifndef ANOSOV_FACTOR_HPP
#define ANOSOV_FACTOR_HPP

#include "anosov/poly.hpp"

#include <vector>

namespace anosov {

struct Factor {
    IntPoly poly;   // primitive, positive leading coefficient
    int multiplicity;
};

/*
 * unit * prod(poly^multiplicity) == input. Factors are ordered by degree and
 * then lexicographically on descending coefficients. For primitive input with
 * positive leading coefficient the unit is 1.
 */
struct FactorList {
    Int unit = 1;
    std::vector<Factor> factors;

    IntPoly product() const;
    bool irreducible() const { return factors.size() == 1 && factors[0].multiplicity == 1; }
};

/* Zassenhaus: factor mod a good prime, Hensel lift, recombine. Degree <= 64. */
FactorList factor_over_rationals(const IntPoly& f);

/* Irreducible factors of a squarefree primitive polynomial of degree >= 1. */
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

bool factor_less(const IntPoly& a, const IntPoly& b);

} // namespace anosov

#endif
