#ifndef ANOSOV_LP_HPP
#define ANOSOV_LP_HPP

#include "anosov/matrix.hpp"

#include <optional>

namespace anosov {

/*
 * Exact two-phase simplex with Bland's rule:
 * minimize cost . x subject to A x = b, x >= 0.
 * Returns nothing when infeasible; throws std::runtime_error when unbounded.
 */
std::optional<RatVec> lp_minimize(const RatMatrix& A, const RatVec& b, const RatVec& cost);

} // namespace anosov

#endif
