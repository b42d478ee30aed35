#ifndef ANOSOV_LATTICE_HPP
#define ANOSOV_LATTICE_HPP

#include "anosov/poly.hpp"

#include <vector>

namespace anosov {

using IntVec = std::vector<Int>;

/* Exact LLL on the rows, delta = 3/4. Rows must be linearly independent. */
std::vector<IntVec> lll_reduce(std::vector<IntVec> rows);

/*
 * Row Hermite normal form of the lattice spanned by the rows: nonzero rows
 * only, strictly increasing pivot columns, positive pivots, and entries above
 * each pivot reduced into [0, pivot).
 */
std::vector<IntVec> hnf(std::vector<IntVec> rows);

bool hnf_contains(const std::vector<IntVec>& hnf_rows, const IntVec& v);

/* Basis of {x in Z^n : sum_i x_i rows[i] = 0}, in HNF. */
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows);

/* {z : m z in L} for the lattice L given by its rows, in HNF. */
std::vector<IntVec> scaled_preimage(const std::vector<IntVec>& rows, long m, int dim);

} // namespace anosov

#endif
