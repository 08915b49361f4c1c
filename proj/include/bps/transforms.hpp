#pragma once

#include "bps/exact.hpp"
#include "bps/sequence.hpp"

namespace bps {

/// Contribution of k-fold multiple covers of a rigid maximal-tangency curve
/// with tangency w to the degree-k relative GW invariant:
///
///     M[k] = (1/k^2) * binom(k(w-1) - 1, k - 1).
///
/// M[1] = 1 for every w, and for w = 2 the binomial collapses so that
/// M[k] = 1/k^2. Throws std::invalid_argument unless k, w >= 1.
Rational multiple_cover_contribution(long long k, long long w);

/// Local BPS -> local GW: I(m) = sum_{d | m} n(d) * (d/m)^3, the degree-k
/// cover of a rigid rational curve contributing 1/k^3. Lower triangular with
/// unit diagonal in the degree index.
InvariantSequence local_gw_from_bps(const InvariantSequence& n, const TangencyContext& ctx);

/// Exact inverse of local_gw_from_bps on the truncation, via the explicit
/// Moebius formula n(m) = (1/m^3) sum_{d | m} mu(m/d) d^3 I(d).
InvariantSequence local_bps_from_gw(const InvariantSequence& gw, const TangencyContext& ctx);

/// Relative BPS -> relative GW: N(m) = sum_{d | m} n(d) * M[m/d] taken at
/// tangency d*w, i.e. the kernel entry is multiple_cover_contribution(m/d, d*w).
InvariantSequence relative_gw_from_bps(const InvariantSequence& n, const TangencyContext& ctx);

/// Exact inverse of relative_gw_from_bps, computed by a unit-diagonal
/// triangular solve over the divisor lattice (the k = 1 coefficient is 1).
InvariantSequence relative_bps_from_gw(const InvariantSequence& gw, const TangencyContext& ctx);

/// Dense kernel matrix of local_gw_from_bps: entry (m-1, d-1) is (d/m)^3 for
/// d | m and 0 otherwise. Unit lower triangular.
RatMat local_gw_kernel(Eigen::Index n);

/// Dense kernel matrix of relative_gw_from_bps for the given context: entry
/// (m-1, d-1) is multiple_cover_contribution(m/d, d*w) for d | m, 0 otherwise.
RatMat relative_gw_kernel(const TangencyContext& ctx);

}  // namespace bps
