#pragma once

#include <cstdint>
#include <optional>

#include "superext/poly.hpp"
#include "superext/weights.hpp"

namespace superext {

/// K^{lambda,nu}(z) from the closed forms.
///
/// GL, OSP t=0,2 and Q are evaluated directly on arch diagrams; OSP t=1 goes
/// through the tau-preimages.  OSP with lambda = 0 raises OspLambdaZero.
KPoly kpoly(const BlockWeight& lambda, const BlockWeight& nu);

/// The q recursion (base cases at lambda_1 <= 1, rank drop when
/// lambda_1 = lambda_2 + 1), evaluated literally with a per-call memo.
KPoly kpoly_q_recursive(const BlockWeight& lambda, const BlockWeight& nu);

/// Weight used for all K-data: the tau-preimage for OSP t=1, else w itself.
BlockWeight kernel_weight(const BlockWeight& w);

/// n + 1 - min{i : lambda_i != nu_i}, computed on kernel weights.  Weights
/// differing only in the sign use the index carrying the sign.
int s_zero(const BlockWeight& lambda, const BlockWeight& nu);

/// K_{(s)}: drop the leading n-s coordinates (which must agree) and evaluate
/// in the rank-s algebra of the same family.  nullopt marks an OSP term with
/// restricted lambda' = 0, which the closed forms do not cover.
std::optional<KPoly> k_restricted(const BlockWeight& lambda, const BlockWeight& nu, int s);

/// sum_s w^s K_{(s)}(z).
KPoly2 k_hat(const BlockWeight& lambda, const BlockWeight& nu);

/// Constant term of K_{(s_zero)}; an uncovered OSP term counts as 0.
std::int64_t k_zero(const BlockWeight& lambda, const BlockWeight& nu);

}  // namespace superext
