#pragma once

#include "ybx/constructors.hpp"

namespace ybx {

/// Three-leg permutation operators written with the cycle (ijk) acting on
/// leg positions: P_123 sends v1 (x) v2 (x) v3 to v3 (x) v1 (x) v2.
TensorMat p123_op(int n, const VarContext& ring);
TensorMat p213_op(int n, const VarContext& ring);
/// The invariant alternating element Omega = P_123 - P_213.
TensorMat omega_op(int n, const VarContext& ring);

/// R12 R13 R23 - R23 R13 R12 on V_n^(x)3.
Residual qybe_residual(const TensorMat& M);

/// QYBE residual minus lambda (P_123 R12 - P_213 R23).
Residual mqybe_residual(const TensorMat& M, const RatFunc& lambda);

/// [r12, r13] + [r12, r23] + [r13, r23] - mu * Omega.
Residual cybe_residual(const TensorMat& r, const RatFunc& mu);

/// (P M - q)(P M + q^-1); q_var indexes q in M's ring.
Residual hecke_residual(const TensorMat& M, std::size_t q_var);

/// (P Q P) Q - I.
Residual unitarity_residual(const TensorMat& Q);

/// Constant term and h-linear term of a matrix polynomial in h; throws
/// HNotPolynomialError when any reduced denominator involves h. h_var
/// indexes h in M's ring; the results keep M's ring with h unused.
std::pair<TensorMat, TensorMat> semiclassical(const TensorMat& M, std::size_t h_var);

/// Operator-level residual of phi_t Q_p phi_t^-1 - B_{p,h,n} at t = h/(p-1),
/// decided on monomials up to the funcfield degree bound.
Residual similarity_check(int n);

/// Entrywise limit p -> 1 of the restricted boundary operator minus the
/// closed-formula Jordanian matrix; throws PolePersistsError if any entry
/// keeps a genuine pole at p = 1.
Residual boundary_limit(int n);

} // namespace ybx
