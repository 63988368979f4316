#pragma once

#include "ybx/tensormat.hpp"

namespace ybx {

/// Substitution symbol on the z-variables: variable i is replaced by
/// scale[i] * z[target[i]] + offset[i]. target is a permutation of the
/// z-variables (the identity for pure affine substitutions, a transposition
/// for the swap P and its affine composites); scale and offset are rational
/// functions in the parameter variables only, with scale[i] never zero so the
/// substitution stays invertible.
struct ZMap {
    std::vector<std::size_t> target;
    std::vector<RatFunc> scale;
    std::vector<RatFunc> offset;

    friend bool operator==(const ZMap& a, const ZMap& b) {
        return a.target == b.target && a.scale == b.scale && a.offset == b.offset;
    }
};

struct OpTerm {
    RatFunc coeff; // rational function in z-variables and parameters
    ZMap map;
};

/// Formal finite sum of rational-function coefficients times substitution
/// symbols, acting linearly on polynomials (and rational functions) in the
/// z-variables. The context lists the z-variables first, parameters after;
/// terms with identical symbols are merged and the empty sum is the zero
/// operator.
class FieldOp {
  public:
    FieldOp(VarContext ctx, std::size_t num_z);

    static FieldOp zero(const VarContext& ctx, std::size_t num_z) { return FieldOp(ctx, num_z); }
    static FieldOp identity(const VarContext& ctx, std::size_t num_z);

    const VarContext& context() const { return ctx_; }
    std::size_t num_z() const { return num_z_; }
    const std::vector<OpTerm>& terms() const { return terms_; }
    /// Context holding only the parameter variables.
    VarContext param_context() const;

    ZMap identity_map() const;
    /// Transposition of z-variables a and b (0-based), affine part trivial.
    ZMap swap_map(std::size_t a, std::size_t b) const;

    /// Merge a term in; zero coefficients and cancellations are dropped.
    void add_term(RatFunc coeff, ZMap map);

    /// Full rational action: sum of coeff * (f after substitution).
    RatFunc apply_rf(const RatFunc& f) const;

    /// Action on a polynomial that must land on a polynomial in the
    /// z-variables (parameters may still appear in denominators); throws
    /// NotDivisibleError when the image leaves the polynomial ring.
    RatFunc apply(const MPoly& f) const;

  private:
    VarContext ctx_;
    std::size_t num_z_;
    std::vector<OpTerm> terms_;

    RatFunc apply_map(const ZMap& m, const MPoly& f) const;
    RatFunc apply_map_rf(const ZMap& m, const RatFunc& f) const;
    friend FieldOp compose(const FieldOp& a, const FieldOp& b);
};

/// Group-algebra product: apply(compose(a, b), f) = apply(a, apply(b, f)).
FieldOp compose(const FieldOp& a, const FieldOp& b);

/// Embed a two-variable operator onto the chosen legs of z1, z2, z3 (legs is
/// 12, 13 or 23), identity on the remaining variable.
FieldOp embed_leg(const FieldOp& op, int legs);

/// Matrix of the operator on V_n per leg in the monomial basis e_i = z^(i-1);
/// throws NotClosedError when an image leaves the subspace and propagates
/// NotDivisibleError from apply.
TensorMat restrict_to(const FieldOp& op, int n);

/// Operator equality decided by action on all monomials with per-variable
/// exponents up to 2 * (max substitution degree + n) = 2 * (1 + n). Merged
/// term lists are used as a sufficient certificate before falling back to
/// the action comparison.
bool op_equal(const FieldOp& a, const FieldOp& b, int n);

/// Same decision but reporting the first differing monomial as a witness
/// (row = the monomial's exponent tuple).
Residual op_residual(const FieldOp& a, const FieldOp& b, int n);

} // namespace ybx
