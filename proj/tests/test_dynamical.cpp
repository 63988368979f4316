#include <doctest.h>

#include <random>

#include "ybx/dynamical.hpp"
#include "ybx/grammar.hpp"

using namespace ybx;

namespace {
RatFunc F(const VarContext& ctx, const char* s) { return parse_ratfunc(ctx, s); }
} // namespace

TEST_CASE("weight pairing") {
    for (int n = 2; n <= 5; ++n) {
        WeightBasis wb = WeightBasis::make(n);
        for (int i = 1; i <= n; ++i) {
            Rat row_sum(0);
            for (int j = 1; j <= n; ++j) {
                CHECK(wb.pairing(i, j) == wb.pairing(j, i));
                row_sum += wb.pairing(i, j);
            }
            CHECK(row_sum.is_zero());
        }
    }
}

TEST_CASE("weight shifts") {
    WeightBasis wb = WeightBasis::make(2);
    CHECK(nu_shift(wb, F(wb.ctx, "nu1"), 1, +1) == F(wb.ctx, "nu1 + 1/2"));
    CHECK(nu_shift(wb, F(wb.ctx, "nu2"), 1, +1) == F(wb.ctx, "nu2 - 1/2"));
    CHECK(nu_shift(wb, F(wb.ctx, "7/3"), 2, +1) == F(wb.ctx, "7/3"));

    // shift(., j, +1) and shift(., j, -1) are mutually inverse automorphisms
    WeightBasis wb3 = WeightBasis::make(3);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<std::uint32_t> expo(0, 3);
    std::uniform_int_distribution<int> pick_j(1, 3);
    int done = 0;
    while (done < 200) {
        MPoly num(wb3.ctx), den(wb3.ctx);
        for (int t = 0; t < 4; ++t) {
            num.add_term({expo(rng), expo(rng), expo(rng)}, Rat(coeff(rng)));
            den.add_term({expo(rng), expo(rng), expo(rng)}, Rat(coeff(rng)));
        }
        if (den.is_zero()) continue;
        RatFunc f(num, den);
        const int j = pick_j(rng);
        CHECK(nu_shift(wb3, nu_shift(wb3, f, j, +1), j, -1) == f);
        ++done;
    }
}

TEST_CASE("dynamical matrix") {
    // n = 1 collapses to the 1x1 identity
    DynMat r1 = make_dyn_r(1);
    CHECK(r1.mat == TensorMat::identity(1, 2, r1.basis.ctx));

    DynMat r2 = make_dyn_r(2);
    const VarContext& nu = r2.basis.ctx;
    // diagonal columns are fixed
    CHECK(r2.mat.get({1, 1}, {1, 1}) == F(nu, "1"));
    CHECK(r2.mat.get({2, 2}, {2, 2}) == F(nu, "1"));
    // the two coefficients of row (1,2)
    CHECK(r2.mat.get({1, 2}, {1, 2}) == F(nu, "(1)/(nu1 - nu2)"));
    CHECK(r2.mat.get({1, 2}, {2, 1}) == F(nu, "1") - F(nu, "(1)/(nu1 - nu2)"));

    // row coefficients sum to 1 for i != j
    for (int n = 2; n <= 4; ++n) {
        DynMat r = make_dyn_r(n);
        const RatFunc one = RatFunc::one(r.basis.ctx);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                CHECK(r.mat.get({i, j}, {i, j}) + r.mat.get({i, j}, {j, i}) == one);
            }
    }
}

TEST_CASE("beta pivot vanishes exactly on the diagonal") {
    // beta(nu_m^{nu_s} - nu_s) = 0 iff m = s under the adopted shift
    for (int n = 2; n <= 3; ++n) {
        WeightBasis wb = WeightBasis::make(n);
        const RatFunc one = RatFunc::one(wb.ctx);
        const RatFunc hinv = RatFunc::constant(wb.ctx, Rat(1, n));
        for (int m = 1; m <= n; ++m)
            for (int s = 1; s <= n; ++s) {
                RatFunc num = RatFunc::variable(wb.ctx, static_cast<std::size_t>(m - 1));
                RatFunc x = nu_shift(wb, num, s, +1) -
                            RatFunc::variable(wb.ctx, static_cast<std::size_t>(s - 1));
                RatFunc beta = one - (x + hinv).inverse();
                CHECK(beta.is_zero() == (m == s));
            }
    }
}

TEST_CASE("change-of-basis operator") {
    DynMat a1 = make_A(1);
    CHECK(a1.mat.get({1}, {1}) == RatFunc::one(a1.basis.ctx));

    DynMat a2 = make_A(2);
    const VarContext& nu = a2.basis.ctx;
    CHECK(a2.mat.get({1}, {1}) == F(nu, "1"));
    CHECK(a2.mat.get({1}, {2}) == F(nu, "nu1"));
    CHECK(a2.mat.get({2}, {1}) == F(nu, "1"));
    CHECK(a2.mat.get({2}, {2}) == F(nu, "nu2"));

    // exact determinant equals the Vandermonde product and is nonzero
    for (int n = 2; n <= 4; ++n) {
        DynMat a = make_A(n);
        RatFunc det = dyn_det(a);
        CHECK_FALSE(det.is_zero());
        CHECK(det == vandermonde(a.basis));
    }
}

TEST_CASE("leg embedding with weight shifts") {
    // identity embeds to identity: constants are unshifted
    WeightBasis wb = WeightBasis::make(2);
    DynMat id{wb, TensorMat::identity(2, 2, wb.ctx)};
    CHECK(dyn_embed(id, 12, +1) == TensorMat::identity(2, 3, wb.ctx));
    CHECK(dyn_embed(id, 23, +1) == TensorMat::identity(2, 3, wb.ctx));

    DynMat r = make_dyn_r(2);
    const TensorMat r12 = dyn_embed(r, 12, +1);
    // the (i,j) = (1,2), k = 1 coefficient is 1/(nu1 - nu2) shifted by nu1
    CHECK(r12.get({1, 2, 1}, {1, 2, 1}) ==
          nu_shift(r.basis, F(r.basis.ctx, "(1)/(nu1 - nu2)"), 1, +1));

    // legs 23 never alters coefficients
    const TensorMat r23 = dyn_embed(r, 23, +1);
    for (int k = 1; k <= 2; ++k)
        CHECK(r23.get({k, 1, 2}, {k, 1, 2}) == r.mat.get({1, 2}, {1, 2}));
}

TEST_CASE("dynamical braid equation") {
    WeightBasis wb = WeightBasis::make(2);
    DynMat id{wb, TensorMat::identity(2, 2, wb.ctx)};
    CHECK(dbe_residual(id, +1).is_zero);

    CHECK(dbe_residual(make_dyn_r(2), +1).is_zero);
    CHECK(dbe_residual(make_dyn_r(3), +1).is_zero);

    // the opposite shift convention breaks the equation
    Residual wrong = dbe_residual(make_dyn_r(2), -1);
    CHECK_FALSE(wrong.is_zero);
    CHECK(wrong.witness.has_value());
}

TEST_CASE("vertex-IRF identity") {
    CHECK(vertex_irf_residual(1, +1).is_zero);
    CHECK(vertex_irf_residual(2, +1).is_zero);
    CHECK(vertex_irf_residual(3, +1).is_zero);

    Residual wrong = vertex_irf_residual(2, -1);
    CHECK_FALSE(wrong.is_zero);

    // one sign convention settles both dynamical checks at once
    for (int sign : {+1, -1}) {
        const bool dbe = dbe_residual(make_dyn_r(2), sign).is_zero;
        const bool irf = vertex_irf_residual(2, sign).is_zero;
        CHECK(dbe == irf);
    }
}
