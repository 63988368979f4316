#include "ybx/fieldop.hpp"

#include <algorithm>
#include <cassert>

#include "ybx/grammar.hpp"

namespace ybx {

FieldOp::FieldOp(VarContext ctx, std::size_t num_z) : ctx_(std::move(ctx)), num_z_(num_z) {
    if (num_z_ < 1 || num_z_ > ctx_.size())
        throw ContextMismatchError("FieldOp: z-variable count out of range");
}

FieldOp FieldOp::identity(const VarContext& ctx, std::size_t num_z) {
    FieldOp op(ctx, num_z);
    op.add_term(RatFunc::one(ctx), op.identity_map());
    return op;
}

VarContext FieldOp::param_context() const {
    std::vector<std::string> names(ctx_.names().begin() + static_cast<long>(num_z_),
                                   ctx_.names().end());
    return VarContext(std::move(names));
}

ZMap FieldOp::identity_map() const {
    ZMap m;
    m.target.resize(num_z_);
    for (std::size_t i = 0; i < num_z_; ++i) m.target[i] = i;
    m.scale.assign(num_z_, RatFunc::one(ctx_));
    m.offset.assign(num_z_, RatFunc::zero(ctx_));
    return m;
}

ZMap FieldOp::swap_map(std::size_t a, std::size_t b) const {
    ZMap m = identity_map();
    std::swap(m.target[a], m.target[b]);
    return m;
}

void FieldOp::add_term(RatFunc coeff, ZMap map) {
    check_same_context(ctx_, coeff.context(), "FieldOp::add_term");
    assert(map.target.size() == num_z_);
    for (std::size_t i = 0; i < num_z_; ++i) {
        if (map.scale[i].is_zero())
            throw ContextMismatchError("FieldOp: substitution scale must be nonzero");
    }
    if (coeff.is_zero()) return;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].map == map) {
            terms_[k].coeff += coeff;
            if (terms_[k].coeff.is_zero())
                terms_.erase(terms_.begin() + static_cast<long>(k));
            return;
        }
    }
    terms_.push_back(OpTerm{std::move(coeff), std::move(map)});
}

RatFunc FieldOp::apply_map(const ZMap& m, const MPoly& f) const {
    // Per-variable powers of scale*z_target + offset, grown on demand.
    std::vector<std::vector<RatFunc>> pows(num_z_);
    auto base = [&](std::size_t i) {
        return m.scale[i] * RatFunc::variable(ctx_, m.target[i]) + m.offset[i];
    };
    RatFunc acc = RatFunc::zero(ctx_);
    for (const auto& [e, c] : f.terms()) {
        RatFunc term = RatFunc::constant(ctx_, c);
        Exponents params(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= num_z_) {
                params[i] = e[i];
                continue;
            }
            auto& cache = pows[i];
            if (cache.empty()) cache.push_back(RatFunc::one(ctx_));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * base(i));
            term *= cache[e[i]];
        }
        term *= RatFunc(MPoly::monomial(ctx_, params, Rat(1)));
        acc += term;
    }
    return acc;
}

RatFunc FieldOp::apply_map_rf(const ZMap& m, const RatFunc& f) const {
    std::map<std::size_t, RatFunc> sub;
    for (std::size_t i = 0; i < num_z_; ++i) {
        bool trivial = m.target[i] == i && m.scale[i] == RatFunc::one(ctx_) && m.offset[i].is_zero();
        if (!trivial)
            sub.emplace(i, m.scale[i] * RatFunc::variable(ctx_, m.target[i]) + m.offset[i]);
    }
    return f.substitute(sub);
}

RatFunc FieldOp::apply_rf(const RatFunc& f) const {
    check_same_context(ctx_, f.context(), "FieldOp::apply_rf");
    RatFunc acc = RatFunc::zero(ctx_);
    for (const auto& t : terms_) acc += t.coeff * apply_map_rf(t.map, f);
    return acc;
}

RatFunc FieldOp::apply(const MPoly& f) const {
    check_same_context(ctx_, f.context(), "FieldOp::apply");
    RatFunc acc = RatFunc::zero(ctx_);
    for (const auto& t : terms_) acc += t.coeff * apply_map(t.map, f);
    for (std::size_t i = 0; i < num_z_; ++i) {
        if (acc.den().uses_var(i))
            throw NotDivisibleError("FieldOp::apply: image of " + to_string(f) +
                                    " is not polynomial in " + ctx_.name(i));
    }
    return acc;
}

FieldOp compose(const FieldOp& a, const FieldOp& b) {
    check_same_context(a.context(), b.context(), "compose");
    if (a.num_z() != b.num_z()) throw ContextMismatchError("compose: different z-variable counts");
    FieldOp r(a.context(), a.num_z());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            // apply(a, apply(b, f)): push a's substitution through b's symbol
            ZMap net;
            net.target.resize(a.num_z());
            net.scale.reserve(a.num_z());
            net.offset.reserve(a.num_z());
            for (std::size_t i = 0; i < a.num_z(); ++i) {
                const std::size_t mid = tb.map.target[i];
                net.target[i] = ta.map.target[mid];
                net.scale.push_back(tb.map.scale[i] * ta.map.scale[mid]);
                net.offset.push_back(tb.map.scale[i] * ta.map.offset[mid] + tb.map.offset[i]);
            }
            RatFunc coeff = ta.coeff * a.apply_map_rf(ta.map, tb.coeff);
            r.add_term(std::move(coeff), std::move(net));
        }
    }
    return r;
}

FieldOp embed_leg(const FieldOp& op, int legs) {
    if (op.num_z() != 2) throw ContextMismatchError("embed_leg: needs a two-variable operator");
    int l1 = 0, l2 = 0;
    switch (legs) {
        case 12: l1 = 1, l2 = 2; break;
        case 13: l1 = 1, l2 = 3; break;
        case 23: l1 = 2, l2 = 3; break;
        default: throw DimensionError("embed_leg: legs must be 12, 13 or 23");
    }
    const VarContext& src = op.context();
    std::vector<std::string> names{"z1", "z2", "z3"};
    for (std::size_t i = 2; i < src.size(); ++i) names.push_back(src.name(i));
    VarContext ctx3(std::move(names));

    // src variable i -> position in the 3-leg context
    std::vector<std::size_t> vmap(src.size());
    vmap[0] = static_cast<std::size_t>(l1 - 1);
    vmap[1] = static_cast<std::size_t>(l2 - 1);
    for (std::size_t i = 2; i < src.size(); ++i) vmap[i] = i + 1;

    auto move_over = [&](const RatFunc& f) {
        return RatFunc(f.num().transport(ctx3, vmap), f.den().transport(ctx3, vmap));
    };

    FieldOp out(ctx3, 3);
    for (const auto& t : op.terms()) {
        ZMap m = out.identity_map();
        for (std::size_t i = 0; i < 2; ++i) {
            const std::size_t zi = vmap[i];
            m.target[zi] = vmap[t.map.target[i]];
            m.scale[zi] = move_over(t.map.scale[i]);
            m.offset[zi] = move_over(t.map.offset[i]);
        }
        out.add_term(move_over(t.coeff), std::move(m));
    }
    return out;
}

TensorMat restrict_to(const FieldOp& op, int n) {
    if (n < 1) throw DimensionError("restrict_to: n must be positive");
    const std::size_t legs = op.num_z();
    const VarContext& ctx = op.context();
    const VarContext ring = op.param_context();

    std::vector<std::size_t> pmap(ctx.size(), 0);
    for (std::size_t i = legs; i < ctx.size(); ++i) pmap[i] = i - legs;

    TensorMat out(n, static_cast<int>(legs), ring);
    std::vector<std::uint32_t> col(legs, 0);
    MultiIndex row_idx(legs), col_idx(legs);
    for (;;) {
        Exponents e(ctx.size(), 0);
        for (std::size_t i = 0; i < legs; ++i) e[i] = col[i];
        RatFunc img = op.apply(MPoly::monomial(ctx, e, Rat(1)));

        // split the numerator by z-monomial; coefficients live in the ring
        std::map<Exponents, MPoly, GrlexLess> groups;
        for (const auto& [exps, c] : img.num().terms()) {
            Exponents zpart(legs, 0);
            Exponents ppart(ring.size(), 0);
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (i < legs) {
                    if (exps[i] >= static_cast<std::uint32_t>(n))
                        throw NotClosedError("restrict_to: image of a basis monomial leaves V_n in " +
                                             ctx.name(i));
                    zpart[i] = exps[i];
                } else {
                    ppart[pmap[i]] = exps[i];
                }
            }
            auto [it, inserted] = groups.try_emplace(zpart, MPoly(ring));
            it->second.add_term(ppart, c);
        }
        MPoly den = img.den().transport(ring, pmap);
        for (std::size_t i = 0; i < legs; ++i) col_idx[i] = static_cast<int>(col[i]) + 1;
        for (auto& [zpart, num] : groups) {
            for (std::size_t i = 0; i < legs; ++i) row_idx[i] = static_cast<int>(zpart[i]) + 1;
            out.set(row_idx, col_idx, RatFunc(std::move(num), den));
        }

        // next column multi-exponent, last leg fastest
        std::size_t leg = legs;
        bool done = true;
        while (leg > 0) {
            --leg;
            if (col[leg] + 1 < static_cast<std::uint32_t>(n)) {
                ++col[leg];
                done = false;
                break;
            }
            col[leg] = 0;
        }
        if (done) return out;
    }
}

namespace {

bool term_lists_equal(const FieldOp& a, const FieldOp& b) {
    if (a.terms().size() != b.terms().size()) return false;
    for (const auto& ta : a.terms()) {
        bool found = false;
        for (const auto& tb : b.terms()) {
            if (ta.map == tb.map && ta.coeff == tb.coeff) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace

Residual op_residual(const FieldOp& a, const FieldOp& b, int n) {
    check_same_context(a.context(), b.context(), "op_residual");
    if (a.num_z() != b.num_z())
        throw ContextMismatchError("op_residual: different z-variable counts");
    Residual res;
    // Distinct substitution symbols are linearly independent over the
    // coefficient field, so equal merged term lists certify equality.
    if (term_lists_equal(a, b)) return res;
    const std::uint32_t bound = 2u * static_cast<std::uint32_t>(1 + n);
    const std::size_t legs = a.num_z();
    const VarContext& ctx = a.context();
    std::vector<std::uint32_t> exps(legs, 0);
    for (;;) {
        Exponents e(ctx.size(), 0);
        for (std::size_t i = 0; i < legs; ++i) e[i] = exps[i];
        RatFunc monomial(MPoly::monomial(ctx, e, Rat(1)));
        RatFunc fa = a.apply_rf(monomial);
        RatFunc fb = b.apply_rf(monomial);
        if (fa != fb) {
            res.is_zero = false;
            MultiIndex mi(legs);
            for (std::size_t i = 0; i < legs; ++i) mi[i] = static_cast<int>(exps[i]);
            res.witness = Witness{mi, {}, fa - fb};
            return res;
        }
        std::size_t leg = legs;
        bool rolled = true;
        while (leg > 0) {
            --leg;
            if (exps[leg] < bound) {
                ++exps[leg];
                rolled = false;
                break;
            }
            exps[leg] = 0;
        }
        if (rolled) return res;
    }
}

bool op_equal(const FieldOp& a, const FieldOp& b, int n) { return op_residual(a, b, n).is_zero; }

} // namespace ybx
