#include "ybx/verifiers.hpp"

namespace ybx {

// P_{ijk} is the cycle (ijk) acting on the leg positions: the vector in leg
// i moves to leg j, leg j to leg k, leg k to leg i. So P_123 sends
// v1 (x) v2 (x) v3 to v3 (x) v1 (x) v2 and P_213 sends it to v2 (x) v3 (x) v1.
// This reading is pinned by the modified equation for Q_p, which vanishes
// under it and under no other pairing.
TensorMat p123_op(int n, const VarContext& ring) { return TensorMat::perm_op(n, {3, 1, 2}, ring); }

TensorMat p213_op(int n, const VarContext& ring) { return TensorMat::perm_op(n, {2, 3, 1}, ring); }

TensorMat omega_op(int n, const VarContext& ring) {
    return p123_op(n, ring) - p213_op(n, ring);
}

namespace {

void require_square_2leg(const TensorMat& M, const char* where) {
    if (M.legs() != 2) throw DimensionError(std::string(where) + ": needs a 2-leg matrix");
}

TensorMat qybe_matrix(const TensorMat& M) {
    const TensorMat m12 = M.place(1, 2);
    const TensorMat m13 = M.place(1, 3);
    const TensorMat m23 = M.place(2, 3);
    return m12 * m13 * m23 - m23 * m13 * m12;
}

} // namespace

Residual qybe_residual(const TensorMat& M) {
    require_square_2leg(M, "qybe_residual");
    return residual_of(qybe_matrix(M));
}

Residual mqybe_residual(const TensorMat& M, const RatFunc& lambda) {
    require_square_2leg(M, "mqybe_residual");
    check_same_context(M.ring(), lambda.context(), "mqybe_residual");
    TensorMat res = qybe_matrix(M);
    if (!lambda.is_zero()) {
        TensorMat rhs = p123_op(M.n(), M.ring()) * M.place(1, 2) -
                        p213_op(M.n(), M.ring()) * M.place(2, 3);
        rhs.scale(lambda);
        res -= rhs;
    }
    return residual_of(std::move(res));
}

Residual cybe_residual(const TensorMat& r, const RatFunc& mu) {
    require_square_2leg(r, "cybe_residual");
    check_same_context(r.ring(), mu.context(), "cybe_residual");
    const TensorMat r12 = r.place(1, 2);
    const TensorMat r13 = r.place(1, 3);
    const TensorMat r23 = r.place(2, 3);
    auto bracket = [](const TensorMat& a, const TensorMat& b) { return a * b - b * a; };
    TensorMat res = bracket(r12, r13) + bracket(r12, r23) + bracket(r13, r23);
    if (!mu.is_zero()) {
        TensorMat om = omega_op(r.n(), r.ring());
        om.scale(mu);
        res -= om;
    }
    return residual_of(std::move(res));
}

Residual hecke_residual(const TensorMat& M, std::size_t q_var) {
    require_square_2leg(M, "hecke_residual");
    const VarContext& ring = M.ring();
    const RatFunc q = RatFunc::variable(ring, q_var);
    const TensorMat pm = TensorMat::swap_op(M.n(), ring) * M;
    TensorMat lhs = pm;
    TensorMat qi = TensorMat::identity(M.n(), 2, ring);
    qi.scale(q);
    lhs -= qi;
    TensorMat rhs = pm;
    TensorMat qinvi = TensorMat::identity(M.n(), 2, ring);
    qinvi.scale(q.inverse());
    rhs += qinvi;
    return residual_of(lhs * rhs);
}

Residual unitarity_residual(const TensorMat& Q) {
    require_square_2leg(Q, "unitarity_residual");
    return residual_of(Q.flip() * Q - TensorMat::identity(Q.n(), 2, Q.ring()));
}

std::pair<TensorMat, TensorMat> semiclassical(const TensorMat& M, std::size_t h_var) {
    TensorMat order0(M.n(), M.legs(), M.ring());
    TensorMat order1(M.n(), M.legs(), M.ring());
    for (const auto& [key, v] : M.entries()) {
        if (v.den().uses_var(h_var))
            throw HNotPolynomialError("semiclassical: entry has h in a reduced denominator");
        MPoly c0 = v.num().coeff_of_var(h_var, 0);
        MPoly c1 = v.num().coeff_of_var(h_var, 1);
        if (!c0.is_zero()) order0.set_flat(key.first, key.second, RatFunc(std::move(c0), v.den()));
        if (!c1.is_zero()) order1.set_flat(key.first, key.second, RatFunc(std::move(c1), v.den()));
    }
    return {std::move(order0), std::move(order1)};
}

Residual similarity_check(int n) {
    const VarContext ctx = op_context({"p", "h"});
    const RatFunc p = RatFunc::variable(ctx, 2);
    const RatFunc h = RatFunc::variable(ctx, 3);
    const RatFunc t = h / (p - RatFunc::one(ctx));
    const FieldOp qp = make_qp_op(ctx, n);
    const FieldOp conj = compose(compose(make_shift_op(ctx, t), qp), make_shift_op(ctx, -t));
    return op_residual(conj, make_boundary_op(ctx, n), n);
}

Residual boundary_limit(int n) {
    const VarContext ctx = op_context({"p", "h"});
    const TensorMat b = restrict_to(make_boundary_op(ctx, n), n);
    const std::size_t p_var = b.ring().require("p");
    TensorMat at_one = b.map_entries([&](const RatFunc& v) { return v.limit_at(p_var, Rat(1)); });
    const TensorMat rp = rp_matrix_formula(n).transport_ring(b.ring());
    return residual_of(at_one - rp);
}

} // namespace ybx
