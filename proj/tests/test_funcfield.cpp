#include <doctest.h>

#include "ybx/constructors.hpp"
#include "ybx/fieldop.hpp"
#include "ybx/grammar.hpp"
#include "ybx/verifiers.hpp"

using namespace ybx;

namespace {

RatFunc F(const VarContext& ctx, const char* s) { return parse_ratfunc(ctx, s); }
MPoly P(const VarContext& ctx, const char* s) { return parse_poly(ctx, s); }

FieldOp swap_only(const VarContext& ctx) {
    FieldOp op(ctx, 2);
    op.add_term(RatFunc::one(ctx), op.swap_map(0, 1));
    return op;
}

} // namespace

TEST_CASE("apply") {
    const VarContext ctx = op_context({"kappa"});
    const RatFunc kappa = F(ctx, "kappa");
    const FieldOp R = make_rational_r_op(ctx, kappa);

    // oracle: (z1 - z2)/(z1 - z2) = 1, so R z1 = z1 + kappa
    CHECK(R.apply(P(ctx, "z1")) == F(ctx, "z1 + kappa"));

    // swap
    CHECK(swap_only(ctx).apply(P(ctx, "z1^2*z2")) == F(ctx, "z2^2*z1"));

    // symmetric monomials are fixed
    CHECK(R.apply(P(ctx, "z1*z2")) == F(ctx, "z1*z2"));

    // Jordanian operator at n = 2: oracle expands the twist and divides
    const VarContext hctx = op_context({"h"});
    const FieldOp rp = make_rp_op(hctx, 2, F(hctx, "h"));
    {
        MPoly shifted = P(hctx, "z1 + h");                 // twist image of z1
        MPoly diff = P(hctx, "z1 + h") - P(hctx, "z2");    // (twist - P) z1
        MPoly q = divide_exact(diff, P(hctx, "z1 - z2 + h"));
        RatFunc expect = RatFunc(shifted) - F(hctx, "2*h") * RatFunc(q);
        CHECK(expect == F(hctx, "z1 - h"));
        CHECK(rp.apply(P(hctx, "z1")) == expect);
    }

    // an image with a surviving z-denominator is flagged
    FieldOp bad(ctx, 2);
    bad.add_term(F(ctx, "(1)/(z1 - z2)"), bad.identity_map());
    CHECK_THROWS_AS(bad.apply(P(ctx, "z1")), NotDivisibleError);
}

TEST_CASE("compose") {
    const VarContext ctx = op_context({"p", "q", "t"});

    // P o P = I
    const FieldOp Pop = swap_only(ctx);
    const FieldOp I = FieldOp::identity(ctx, 2);
    CHECK(op_equal(compose(Pop, Pop), I, 2));

    // additive shifts compose
    const FieldOp Fp = make_additive_twist(ctx, F(ctx, "p"));
    const FieldOp Fq = make_additive_twist(ctx, F(ctx, "q"));
    CHECK(op_equal(compose(Fp, Fq), make_additive_twist(ctx, F(ctx, "p + q")), 2));

    // compose(phi_t, F_p) against its own post-condition, checked by
    // applying both sides to z1 and z2
    const FieldOp phi = make_shift_op(ctx, F(ctx, "t"));
    const FieldOp scale = make_scaling_twist(ctx, F(ctx, "p"));
    const FieldOp comp = compose(phi, scale);
    for (const char* var : {"z1", "z2"}) {
        CHECK(comp.apply(P(ctx, var)) == phi.apply_rf(scale.apply(P(ctx, var))));
    }
    REQUIRE(comp.terms().size() == 1);
    const ZMap& m = comp.terms()[0].map;
    CHECK(m.target == std::vector<std::size_t>{0, 1});
    CHECK(m.scale[0] == F(ctx, "(1)/(p)"));
    CHECK(m.offset[0] == F(ctx, "(-t)/(p)"));
    CHECK(m.scale[1] == F(ctx, "p"));
    CHECK(m.offset[1] == F(ctx, "-p*t"));

    // general post-condition spot-check on a composite with coefficients
    const VarContext hctx = op_context({"h"});
    const FieldOp rp = make_rp_op(hctx, 2, F(hctx, "h"));
    const FieldOp Ph = swap_only(hctx);
    const FieldOp both = compose(rp, Ph);
    for (const char* s : {"1", "z1", "z2", "z1*z2", "z1^2"}) {
        CHECK(both.apply_rf(RatFunc(P(hctx, s))) == rp.apply_rf(Ph.apply_rf(RatFunc(P(hctx, s)))));
    }
}

TEST_CASE("embed_leg") {
    const VarContext ctx = op_context({});
    const FieldOp Pop = swap_only(ctx);

    const FieldOp p13 = embed_leg(Pop, 13);
    CHECK(p13.apply(parse_poly(p13.context(), "z1*z2^2*z3^3")) ==
          parse_ratfunc(p13.context(), "z3*z2^2*z1^3"));

    const FieldOp I3 = embed_leg(FieldOp::identity(ctx, 2), 13);
    CHECK(op_equal(I3, FieldOp::identity(I3.context(), 3), 1));

    // embedding on legs 12 commutes with multiplication by z3^k
    const VarContext hctx = op_context({"h"});
    const FieldOp rp = make_rp_op(hctx, 2, parse_ratfunc(hctx, "h"));
    const FieldOp rp12 = embed_leg(rp, 12);
    const VarContext& c3 = rp12.context();
    for (int k = 0; k <= 2; ++k) {
        for (const char* f : {"z1", "z1*z2", "z2^2"}) {
            MPoly zf = parse_poly(c3, f) * MPoly::variable(c3, 2).pow(k);
            RatFunc img2 = rp.apply(parse_poly(hctx, f)).transport_by_name(c3);
            CHECK(rp12.apply(zf) == img2 * RatFunc(MPoly::variable(c3, 2).pow(k)));
        }
    }
}

TEST_CASE("restrict") {
    const VarContext ctx = op_context({});
    for (int n = 2; n <= 4; ++n) {
        CHECK(restrict_to(swap_only(ctx), n) == TensorMat::swap_op(n, VarContext()));
    }

    const VarContext hctx = op_context({"h"});
    // h = 0 collapses the Jordanian operator to the identity
    CHECK(restrict_to(make_rp_op(hctx, 2, RatFunc::zero(hctx)), 2) ==
          TensorMat::identity(2, 2, VarContext({"h"})));

    // the n = 2 matrix, column by column
    const TensorMat m = restrict_to(make_rp_op(hctx, 2, parse_ratfunc(hctx, "h")), 2);
    const VarContext ring({"h"});
    TensorMat expect(2, 2, ring);
    expect.set({1, 1}, {1, 1}, F(ring, "1"));
    expect.set({2, 1}, {2, 1}, F(ring, "1"));
    expect.set({1, 1}, {2, 1}, F(ring, "-h"));
    expect.set({1, 2}, {1, 2}, F(ring, "1"));
    expect.set({1, 1}, {1, 2}, F(ring, "h"));
    expect.set({2, 2}, {2, 2}, F(ring, "1"));
    expect.set({2, 1}, {2, 2}, F(ring, "-h"));
    expect.set({1, 2}, {2, 2}, F(ring, "h"));
    expect.set({1, 1}, {2, 2}, F(ring, "h^2"));
    CHECK(m == expect);

    // images escaping V_n are flagged
    FieldOp raise(ctx, 2);
    raise.add_term(RatFunc(MPoly::variable(ctx, 0)), raise.identity_map());
    CHECK_THROWS_AS(restrict_to(raise, 2), NotClosedError);

    // restrict o compose = product o restrict
    const FieldOp rp = make_rp_op(hctx, 3, parse_ratfunc(hctx, "h"));
    const FieldOp Ph = swap_only(hctx);
    CHECK(restrict_to(compose(rp, Ph), 3) == restrict_to(rp, 3) * restrict_to(Ph, 3));
    CHECK(restrict_to(compose(rp, rp), 3) == restrict_to(rp, 3) * restrict_to(rp, 3));
}

TEST_CASE("alpha/beta functional equations") {
    const VarContext ctx({"x", "y", "kappa"});
    auto alpha = [&](const RatFunc& arg) { return -F(ctx, "kappa") / arg; };
    auto beta = [&](const RatFunc& arg) { return RatFunc::one(ctx) - alpha(arg); };
    const RatFunc x = F(ctx, "x"), y = F(ctx, "y");

    CHECK(alpha(x) * alpha(y) == alpha(x - y) * alpha(y) + alpha(x) * alpha(y - x));
    CHECK(alpha(x) * alpha(y) * alpha(y) + beta(y) * beta(-y) * alpha(x + y) ==
          alpha(x) * alpha(x) * alpha(y) + beta(x) * beta(-x) * alpha(x + y));
}

TEST_CASE("nilpotent r") {
    const VarContext ctx = op_context({});
    const FieldOp r = make_nilpotent_r_op(ctx);
    // every monomial lands on a polynomial
    for (std::uint32_t a = 0; a <= 6; ++a)
        for (std::uint32_t b = 0; b <= 6; ++b)
            CHECK_NOTHROW(r.apply(MPoly::monomial(ctx, {a, b}, Rat(1))));
    for (int n = 1; n <= 6; ++n) {
        TensorMat rm = restrict_to(r, n);
        CHECK((rm * rm).is_zero());
    }
}

TEST_CASE("twist lemma") {
    const VarContext ctx = op_context({"p", "kappa"});
    const RatFunc p = F(ctx, "p");
    const FieldOp R = make_rational_r_op(ctx, F(ctx, "kappa"));
    const FieldOp Ftw = make_additive_twist(ctx, p);
    const FieldOp Pop = swap_only(ctx);

    // F21 = F12^-1, checked as F21 o F12 = I without forming an inverse
    const FieldOp F21 = compose(Pop, compose(Ftw, Pop));
    CHECK(op_equal(compose(F21, Ftw), FieldOp::identity(ctx, 2), 2));
    CHECK(op_equal(compose(Ftw, F21), FieldOp::identity(ctx, 2), 2));

    const FieldOp F12 = embed_leg(Ftw, 12);
    const FieldOp F13 = embed_leg(Ftw, 13);
    const FieldOp F23 = embed_leg(Ftw, 23);
    const FieldOp R12 = embed_leg(R, 12);
    const FieldOp R23 = embed_leg(R, 23);

    CHECK(op_equal(compose(F12, compose(F13, F23)), compose(F23, compose(F13, F12)), 2));
    CHECK(op_equal(compose(R12, compose(F23, F13)), compose(F13, compose(F23, R12)), 2));
    CHECK(op_equal(compose(R23, compose(F12, F13)), compose(F13, compose(F12, R23)), 2));

    // negative control: the scaling twist does not intertwine this R
    const FieldOp G = make_scaling_twist(ctx, p);
    const FieldOp G12 = embed_leg(G, 12);
    const FieldOp G13 = embed_leg(G, 13);
    const FieldOp G23 = embed_leg(G, 23);
    Residual res = op_residual(compose(R12, compose(G23, G13)), compose(G13, compose(G23, R12)), 1);
    CHECK_FALSE(res.is_zero);
    CHECK(res.witness.has_value());
}
