#pragma once

#include <optional>

#include "zonocut/linalg.hpp"

namespace zono {

// Exact feasibility of { x : E x = f, G x >= h } over free x, decided by a
// rational phase-I simplex with Bland's rule. Returns a feasible point or
// absent. Either block may be empty (0 rows).
std::optional<RatVec> lp_feasible(const RatMat& E, const RatVec& f,
                                  const RatMat& G, const RatVec& h);

// A combination lambda with lambda_j >= 1 for all j and lambda^T M = 0, or
// absent if none exists. (Equivalent, up to scaling, to a strictly positive
// left-kernel vector.)
std::optional<RatVec> feasible_strictly_positive_combination(const RatMat& M);

}  // namespace zono
