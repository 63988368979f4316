#pragma once

#include <utility>

#include "ybx/fieldop.hpp"

namespace ybx {

/// Sign function of the divided-difference structure:
/// 1 when i <= k < j, -1 when j <= k < i, 0 otherwise.
int eta(long i, long j, long k);

/// Context for two-variable operators: z1, z2 first, parameters after.
VarContext op_context(std::vector<std::string> params);

// --- operators on the function field ---------------------------------------

/// R = I + kappa/(z1 - z2) (I - P); solves the YBE for any kappa.
FieldOp make_rational_r_op(const VarContext& ctx, const RatFunc& kappa);

/// r = (I - P)/(z1 - z2), the square-zero operator with R = I + kappa r.
FieldOp make_nilpotent_r_op(const VarContext& ctx);

/// Additive twist f(z1, z2) -> f(z1 + p, z2 - p).
FieldOp make_additive_twist(const VarContext& ctx, const RatFunc& p);

/// Scaling twist f(z1, z2) -> f(p^-1 z1, p z2).
FieldOp make_scaling_twist(const VarContext& ctx, const RatFunc& p);

/// Mixed twist f(z1, z2) -> f(p^-1 z1 + p^-1 h, p z2 - h).
FieldOp make_mixed_twist(const VarContext& ctx, const RatFunc& p, const RatFunc& h);

/// Diagonal shift f(z1, z2) -> f(z1 - t, z2 - t).
FieldOp make_shift_op(const VarContext& ctx, const RatFunc& t);

/// The twisted operator with kappa = -h n whose restriction to V_n (x) V_n
/// is the generalized Jordanian matrix.
FieldOp make_rp_op(const VarContext& ctx, int n, const RatFunc& h);

/// Two-parameter Cremmer-Gervais operator; ctx must contain p and q.
FieldOp make_cg_op(const VarContext& ctx);

/// Modified one-parameter Cremmer-Gervais operator (q^2 = p^n eliminated);
/// ctx must contain p.
FieldOp make_qp_op(const VarContext& ctx, int n);

/// Boundary family interpolating between the modified Cremmer-Gervais
/// operator (h = 0) and the Jordanian operator (p = 1); ctx must contain
/// p and h.
FieldOp make_boundary_op(const VarContext& ctx, int n);

// --- matrices ---------------------------------------------------------------

/// Matrix of the Jordanian operator from the closed coefficient formula,
/// over the ring {h}.
TensorMat rp_matrix_formula(int n);

/// Classical limit r_p as a constant matrix (wedge convention
/// x^y = x(x)y - y(x)x).
TensorMat classical_rp(int n);

/// The Cremmer-Gervais classical boundary matrix b_CG; matrix units with
/// out-of-range indices are dropped.
TensorMat b_cg(int n);

/// phi (x) phi with phi(E_ij) = -E_{n+1-j,n+1-i} on each leg.
TensorMat phi_map(const TensorMat& m);

/// Hecke-to-modified transform: Q = (2M + (q^-1 - q)P)/(q + q^-1) together
/// with lambda = (1 - q^2)^2/(1 + q^2)^2. q_var indexes q in M's ring.
std::pair<TensorMat, RatFunc> hecke_to_mqybe(const TensorMat& M, std::size_t q_var);

} // namespace ybx
