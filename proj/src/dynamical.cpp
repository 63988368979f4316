#include "ybx/dynamical.hpp"

#include <algorithm>
#include <numeric>

#include "ybx/constructors.hpp"
#include "ybx/fieldop.hpp"

namespace ybx {

WeightBasis WeightBasis::make(int n) {
    if (n < 1) throw DimensionError("WeightBasis: n must be positive");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("nu" + std::to_string(i));
    return WeightBasis{n, VarContext(std::move(names))};
}

Rat WeightBasis::pairing(int i, int j) const {
    Rat r = Rat(-1, n);
    if (i == j) r += Rat(1);
    return r;
}

RatFunc nu_shift(const WeightBasis& wb, const RatFunc& f, int j, int sign) {
    RatFunc r = f;
    for (int i = 1; i <= wb.n; ++i) {
        Rat delta = wb.pairing(i, j);
        if (sign < 0) delta = -delta;
        r = r.shift_var(static_cast<std::size_t>(i - 1), delta);
    }
    return r;
}

DynMat make_dyn_r(int n) {
    WeightBasis wb = WeightBasis::make(n);
    TensorMat m(n, 2, wb.ctx);
    const RatFunc one = RatFunc::one(wb.ctx);
    // Column (i,j) keeps e_i (x) e_j with coefficient 1/(nu_i - nu_j +
    // delta_ij) and flips to e_j (x) e_i with 1 - 1/(nu_j - nu_i + delta_ij).
    // The flipped coefficient is indexed by the OUTPUT pair: that is the form
    // the change-of-basis identity forces, and it makes the two entries of
    // every row (not column) sum to 1.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                m.set({i, i}, {i, i}, one);
                continue;
            }
            const RatFunc nui = RatFunc::variable(wb.ctx, static_cast<std::size_t>(i - 1));
            const RatFunc nuj = RatFunc::variable(wb.ctx, static_cast<std::size_t>(j - 1));
            m.set({i, j}, {i, j}, (nui - nuj).inverse());
            m.set({j, i}, {i, j}, one - (nuj - nui).inverse());
        }
    }
    return DynMat{std::move(wb), std::move(m)};
}

DynMat make_A(int n) {
    WeightBasis wb = WeightBasis::make(n);
    TensorMat m(n, 1, wb.ctx);
    for (int k = 1; k <= n; ++k) {
        const RatFunc nu_k = RatFunc::variable(wb.ctx, static_cast<std::size_t>(k - 1));
        for (int i = 1; i <= n; ++i) m.set({k}, {i}, nu_k.pow(i - 1));
    }
    return DynMat{std::move(wb), std::move(m)};
}

TensorMat dyn_embed(const DynMat& M, int legs, int sign) {
    if (M.mat.legs() != 2) throw DimensionError("dyn_embed: needs a 2-leg matrix");
    if (legs != 12 && legs != 23) throw DimensionError("dyn_embed: legs must be 12 or 23");
    const int n = M.mat.n();
    TensorMat out(n, 3, M.basis.ctx);
    for (const auto& [key, v] : M.mat.entries()) {
        MultiIndex row = M.mat.unflatten(key.first);
        MultiIndex col = M.mat.unflatten(key.second);
        for (int k = 1; k <= n; ++k) {
            if (legs == 12) {
                out.set({row[0], row[1], k}, {col[0], col[1], k}, nu_shift(M.basis, v, k, sign));
            } else {
                out.set({k, row[0], row[1]}, {k, col[0], col[1]}, v);
            }
        }
    }
    return out;
}

Residual dbe_residual(const DynMat& M, int sign) {
    const TensorMat m12 = dyn_embed(M, 12, sign);
    const TensorMat m23 = dyn_embed(M, 23, sign);
    return residual_of(m12 * m23 * m12 - m23 * m12 * m23);
}

Residual vertex_irf_residual(int n, int sign) {
    WeightBasis wb = WeightBasis::make(n);

    // Braid form of the Jordanian matrix at h = 1/n, entries are rational
    // constants carried into the nu-field.
    const VarContext zctx = op_context({});
    const RatFunc h = RatFunc::constant(zctx, Rat(1, n));
    TensorMat rp = restrict_to(make_rp_op(zctx, n, h), n);
    TensorMat rtilde = (rp * TensorMat::swap_op(n, rp.ring())).transport_ring(wb.ctx);

    const DynMat dynr = make_dyn_r(n);
    const DynMat A = make_A(n);

    // shifted[j][k][i] = (A^k_i) shifted by nu_j; indices 1-based
    auto shifted = std::vector<std::vector<std::vector<RatFunc>>>(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n; ++j) {
        auto& byk = shifted[static_cast<std::size_t>(j)];
        byk.assign(static_cast<std::size_t>(n + 1), {});
        for (int k = 1; k <= n; ++k) {
            auto& byi = byk[static_cast<std::size_t>(k)];
            byi.reserve(static_cast<std::size_t>(n + 1));
            byi.push_back(RatFunc::zero(wb.ctx)); // unused slot 0
            for (int i = 1; i <= n; ++i)
                byi.push_back(nu_shift(wb, A.mat.get({k}, {i}), j, sign));
        }
    }
    auto plain = [&](int k, int i) { return A.mat.get({k}, {i}); };

    TensorMat res(n, 2, wb.ctx);
    // sum_{c,d} R_dyn[(m,s),(c,d)] (A^c_i)^{nu_d} A^d_j
    for (const auto& [key, v] : dynr.mat.entries()) {
        MultiIndex ms = dynr.mat.unflatten(key.first);
        MultiIndex cd = dynr.mat.unflatten(key.second);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                res.add_to(ms, {i, j},
                           v * shifted[static_cast<std::size_t>(cd[1])][static_cast<std::size_t>(cd[0])]
                                      [static_cast<std::size_t>(i)] *
                               plain(cd[1], j));
    }
    // minus sum_{k,l} Rtilde[(k,l),(i,j)] (A^m_k)^{nu_s} A^s_l
    for (const auto& [key, v] : rtilde.entries()) {
        MultiIndex kl = rtilde.unflatten(key.first);
        MultiIndex ij = rtilde.unflatten(key.second);
        for (int m = 1; m <= n; ++m)
            for (int s = 1; s <= n; ++s)
                res.add_to({m, s}, ij,
                           -(v * shifted[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)]
                                        [static_cast<std::size_t>(kl[0])] *
                             plain(s, kl[1])));
    }
    return residual_of(std::move(res));
}

RatFunc dyn_det(const DynMat& A) {
    if (A.mat.legs() != 1) throw DimensionError("dyn_det: needs a 1-leg matrix");
    const int n = A.mat.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    RatFunc det = RatFunc::zero(A.basis.ctx);
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        RatFunc term = RatFunc::constant(A.basis.ctx, inversions % 2 == 0 ? Rat(1) : Rat(-1));
        for (int row = 1; row <= n; ++row) {
            term *= A.mat.get({row}, {perm[static_cast<std::size_t>(row - 1)]});
            if (term.is_zero()) break;
        }
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

RatFunc vandermonde(const WeightBasis& wb) {
    RatFunc v = RatFunc::one(wb.ctx);
    for (int k = 1; k <= wb.n; ++k)
        for (int l = k + 1; l <= wb.n; ++l)
            v *= RatFunc::variable(wb.ctx, static_cast<std::size_t>(l - 1)) -
                 RatFunc::variable(wb.ctx, static_cast<std::size_t>(k - 1));
    return v;
}

} // namespace ybx
