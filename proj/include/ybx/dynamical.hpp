#pragma once

#include "ybx/tensormat.hpp"

namespace ybx {

/// The weight data: n, the generators nu_1..nu_n of the coefficient field,
/// and the pairing (nu_i, nu_j) = delta_ij - 1/n. The pairing is symmetric
/// and each row sums to zero.
struct WeightBasis {
    int n;
    VarContext ctx; // nu1..nuN

    static WeightBasis make(int n);
    /// 1-based indices.
    Rat pairing(int i, int j) const;
};

/// Substitute nu_i -> nu_i + sign * (nu_i, nu_j) for all i: the weight shift
/// by nu_j, an automorphism of the coefficient field. j is 1-based.
RatFunc nu_shift(const WeightBasis& wb, const RatFunc& f, int j, int sign);

/// Matrix on V_n^(x)legs with entries in the rational-function field in
/// nu_1..nu_n; basis vector e_i carries weight nu_i, which drives the
/// coefficient shifts of leg embedding.
struct DynMat {
    WeightBasis basis;
    TensorMat mat;
};

/// The rational dynamical solution: column (i,j) has 1/(nu_i - nu_j +
/// delta_ij) at row (i,j) and 1 - 1/(nu_j - nu_i + delta_ij) at row (j,i),
/// so the two coefficients of each row sum to 1.
DynMat make_dyn_r(int n);

/// The change-of-basis operator A(e_i) = sum_k e_k (x) nu_k^(i-1) (1 leg).
DynMat make_A(int n);

/// Embed a 2-leg dynamical matrix onto legs 12 or 23 of three. For legs 12
/// the third-leg index shifts every coefficient (sign gives the shift
/// direction); for legs 23 coefficients pass through unshifted.
TensorMat dyn_embed(const DynMat& M, int legs, int sign);

/// M12 M23 M12 - M23 M12 M23 with dyn_embed placements; composition of the
/// embedded matrices is the plain product over the nu-field.
Residual dbe_residual(const DynMat& M, int sign);

/// Residual of the change-of-basis identity between the dynamical solution
/// and the braid form of the Jordanian matrix at h = 1/n, as a 2-leg matrix
/// over the nu-field: rows (m,s), columns (i,j).
Residual vertex_irf_residual(int n, int sign);

/// Exact determinant of a 1-leg matrix by expansion over permutations
/// (intended for small n).
RatFunc dyn_det(const DynMat& A);

/// The Vandermonde product prod_{k<l} (nu_l - nu_k) over the basis field.
RatFunc vandermonde(const WeightBasis& wb);

} // namespace ybx
