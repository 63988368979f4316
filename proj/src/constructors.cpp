#include "ybx/constructors.hpp"

namespace ybx {

int eta(long i, long j, long k) {
    if (i <= k && k < j) return 1;
    if (j <= k && k < i) return -1;
    return 0;
}

VarContext op_context(std::vector<std::string> params) {
    std::vector<std::string> names{"z1", "z2"};
    for (auto& p : params) names.push_back(std::move(p));
    return VarContext(std::move(names));
}

namespace {

RatFunc zvar(const VarContext& ctx, std::size_t i) { return RatFunc::variable(ctx, i); }

} // namespace

FieldOp make_rational_r_op(const VarContext& ctx, const RatFunc& kappa) {
    FieldOp op(ctx, 2);
    RatFunc c = kappa / (zvar(ctx, 0) - zvar(ctx, 1));
    op.add_term(RatFunc::one(ctx) + c, op.identity_map());
    op.add_term(-c, op.swap_map(0, 1));
    return op;
}

FieldOp make_nilpotent_r_op(const VarContext& ctx) {
    FieldOp op(ctx, 2);
    RatFunc c = RatFunc::one(ctx) / (zvar(ctx, 0) - zvar(ctx, 1));
    op.add_term(c, op.identity_map());
    op.add_term(-c, op.swap_map(0, 1));
    return op;
}

FieldOp make_additive_twist(const VarContext& ctx, const RatFunc& p) {
    FieldOp op(ctx, 2);
    ZMap m = op.identity_map();
    m.offset[0] = p;
    m.offset[1] = -p;
    op.add_term(RatFunc::one(ctx), std::move(m));
    return op;
}

FieldOp make_scaling_twist(const VarContext& ctx, const RatFunc& p) {
    FieldOp op(ctx, 2);
    ZMap m = op.identity_map();
    m.scale[0] = p.inverse();
    m.scale[1] = p;
    op.add_term(RatFunc::one(ctx), std::move(m));
    return op;
}

FieldOp make_mixed_twist(const VarContext& ctx, const RatFunc& p, const RatFunc& h) {
    FieldOp op(ctx, 2);
    ZMap m = op.identity_map();
    m.scale[0] = p.inverse();
    m.offset[0] = p.inverse() * h;
    m.scale[1] = p;
    m.offset[1] = -h;
    op.add_term(RatFunc::one(ctx), std::move(m));
    return op;
}

FieldOp make_shift_op(const VarContext& ctx, const RatFunc& t) {
    FieldOp op(ctx, 2);
    ZMap m = op.identity_map();
    m.offset[0] = -t;
    m.offset[1] = -t;
    op.add_term(RatFunc::one(ctx), std::move(m));
    return op;
}

FieldOp make_rp_op(const VarContext& ctx, int n, const RatFunc& h) {
    // F~_h - h n/(z1 - z2 + h) (F~_h - P)
    FieldOp op(ctx, 2);
    RatFunc c = RatFunc::constant(ctx, Rat(n)) * h / (zvar(ctx, 0) - zvar(ctx, 1) + h);
    ZMap twist = op.identity_map();
    twist.offset[0] = h;
    twist.offset[1] = -h;
    op.add_term(RatFunc::one(ctx) - c, std::move(twist));
    op.add_term(c, op.swap_map(0, 1));
    return op;
}

FieldOp make_cg_op(const VarContext& ctx) {
    const RatFunc p = RatFunc::variable(ctx, ctx.require("p"));
    const RatFunc q = RatFunc::variable(ctx, ctx.require("q"));
    const RatFunc qhat = q - q.inverse();
    const RatFunc z1 = zvar(ctx, 0), z2 = zvar(ctx, 1);
    RatFunc c = qhat * p * z2 / (p * z2 - z1);
    FieldOp op(ctx, 2);
    op.add_term(c, op.swap_map(0, 1));
    ZMap twist = op.identity_map();
    twist.scale[0] = p.inverse();
    twist.scale[1] = p;
    op.add_term(q - c, std::move(twist));
    return op;
}

FieldOp make_qp_op(const VarContext& ctx, int n) {
    const RatFunc p = RatFunc::variable(ctx, ctx.require("p"));
    const RatFunc z1 = zvar(ctx, 0), z2 = zvar(ctx, 1);
    const RatFunc pn = p.pow(n);
    const RatFunc one = RatFunc::one(ctx);
    RatFunc c = (pn - one) * (z2 + p.inverse() * z1) / ((pn + one) * (z2 - p.inverse() * z1));
    FieldOp op(ctx, 2);
    ZMap twist = op.identity_map();
    twist.scale[0] = p.inverse();
    twist.scale[1] = p;
    op.add_term(one - c, std::move(twist));
    op.add_term(c, op.swap_map(0, 1));
    return op;
}

FieldOp make_boundary_op(const VarContext& ctx, int n) {
    const RatFunc p = RatFunc::variable(ctx, ctx.require("p"));
    const RatFunc h = RatFunc::variable(ctx, ctx.require("h"));
    const RatFunc z1 = zvar(ctx, 0), z2 = zvar(ctx, 1);
    const RatFunc pn = p.pow(n);
    const RatFunc one = RatFunc::one(ctx);
    const RatFunc denom = (pn + one) * (p * z2 - z1 - h);
    RatFunc c = (pn - one) * (p * z2 + z1) / denom - h * (pn - one) * (p + one) / ((p - one) * denom);
    FieldOp op(ctx, 2);
    ZMap twist = op.identity_map();
    twist.scale[0] = p.inverse();
    twist.offset[0] = p.inverse() * h;
    twist.scale[1] = p;
    twist.offset[1] = -h;
    op.add_term(one - c, std::move(twist));
    op.add_term(c, op.swap_map(0, 1));
    return op;
}

TensorMat rp_matrix_formula(int n) {
    const VarContext ring({"h"});
    TensorMat out(n, 2, ring);
    auto sign = [](long m) { return (m % 2 + 2) % 2 == 0 ? Rat(1) : Rat(-1); };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long a = 0; a < n; ++a)
                for (long b = 0; b < n; ++b) {
                    Rat bracket = binomial(i, a) * binomial(j, b);
                    for (long k = 0; k <= i; ++k) {
                        const int s = eta(j, k, a);
                        if (s == 0) continue;
                        bracket += Rat(n * s) * sign(k - a) * binomial(i, k) * binomial(j + k - a - 1, b);
                    }
                    if (bracket.is_zero()) continue;
                    const long hexp = i + j - a - b;
                    Exponents e{static_cast<std::uint32_t>(hexp)};
                    MPoly value = MPoly::monomial(ring, e, sign(j - b) * bracket);
                    out.set({static_cast<int>(a) + 1, static_cast<int>(b) + 1},
                            {static_cast<int>(i) + 1, static_cast<int>(j) + 1}, RatFunc(std::move(value)));
                }
    return out;
}

namespace {

/// m += coeff * E_{a,b} (x) E_{c,d} - coeff * E_{c,d} (x) E_{a,b}
void add_wedge(TensorMat& m, const Rat& coeff, int a, int b, int c, int d) {
    const RatFunc v = RatFunc::constant(m.ring(), coeff);
    m.add_to({a, c}, {b, d}, v);
    m.add_to({c, a}, {d, b}, -v);
}

} // namespace

TensorMat classical_rp(int n) {
    TensorMat m(n, 2, VarContext());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i; k <= j - 1; ++k)
                add_wedge(m, Rat(n), k, i, i + j - k - 1, j);
    for (int i = 1; i <= n; ++i)
        for (int j = 2; j <= n; ++j)
            add_wedge(m, Rat(j - 1), j - 1, j, i, i);
    return m;
}

TensorMat b_cg(int n) {
    TensorMat m(n, 2, VarContext());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= j - i; ++k)
                add_wedge(m, Rat(n), i, j - k + 1, j, i + k);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j + 1 > n) continue; // absent matrix unit
            add_wedge(m, Rat(n - j), i, i, j, j + 1);
        }
    return m;
}

TensorMat phi_map(const TensorMat& m) {
    if (m.legs() != 2) throw DimensionError("phi_map: needs a 2-leg matrix");
    const int n = m.n();
    TensorMat out(n, 2, m.ring());
    for (const auto& [key, v] : m.entries()) {
        MultiIndex row = m.unflatten(key.first);  // (a, c)
        MultiIndex col = m.unflatten(key.second); // (b, d)
        // phi(E_ab) (x) phi(E_cd) = E_{n+1-b,n+1-a} (x) E_{n+1-d,n+1-c}
        out.add_to({n + 1 - col[0], n + 1 - col[1]}, {n + 1 - row[0], n + 1 - row[1]}, v);
    }
    return out;
}

std::pair<TensorMat, RatFunc> hecke_to_mqybe(const TensorMat& M, std::size_t q_var) {
    const VarContext& ring = M.ring();
    const RatFunc q = RatFunc::variable(ring, q_var);
    const RatFunc qinv = q.inverse();
    TensorMat P = TensorMat::swap_op(M.n(), ring);
    TensorMat Q = M;
    Q.scale(RatFunc::constant(ring, Rat(2)));
    P.scale(qinv - q);
    Q += P;
    Q.scale((q + qinv).inverse());
    const RatFunc one = RatFunc::one(ring);
    RatFunc q2 = q * q;
    RatFunc lambda = ((one - q2) * (one - q2)) / ((one + q2) * (one + q2));
    return {std::move(Q), std::move(lambda)};
}

} // namespace ybx
