#include "ybx/ratfunc.hpp"

#include <cassert>

namespace ybx {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.context(), Rat(1))) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    check_same_context(num_.context(), den_.context(), "RatFunc");
    if (den_.is_zero()) throw ZeroDenominatorError("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.context(), Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    normalize_leading();
}

void RatFunc::normalize_leading() {
    const Rat& lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rat inv = Rat(1) / lc;
        num_.mul_scalar(inv);
        den_.mul_scalar(inv);
    }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, AlreadyCanonical{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    check_same_context(context(), o.context(), "RatFunc::operator+=");
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        MPoly n = num_ + o.num_;
        if (n.is_zero()) {
            *this = zero(context());
            return *this;
        }
        *this = RatFunc(std::move(n), den_);
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        // both monic constants, i.e. 1
        num_ += o.num_;
        if (num_.is_zero()) den_ = MPoly::constant(context(), Rat(1));
        return *this;
    }
    // a/b + c/d with g = gcd(b, d): the only factors the sum can share with
    // the lcm denominator lie in g, so one small gcd finishes the reduction.
    MPoly g = gcd(den_, o.den_);
    if (g.is_constant()) {
        MPoly n = num_ * o.den_ + o.num_ * den_;
        MPoly d = den_ * o.den_;
        if (n.is_zero()) {
            *this = zero(context());
            return *this;
        }
        num_ = std::move(n);
        den_ = std::move(d);
        normalize_leading();
        return *this;
    }
    MPoly b1 = divide_exact(den_, g);
    MPoly d1 = divide_exact(o.den_, g);
    MPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) {
        *this = zero(context());
        return *this;
    }
    MPoly h = gcd(n, g);
    if (!h.is_constant()) {
        n = divide_exact(n, h);
        g = divide_exact(g, h);
    }
    num_ = std::move(n);
    den_ = b1 * d1 * g;
    normalize_leading();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    check_same_context(context(), o.context(), "RatFunc::operator*=");
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = zero(context());
        return *this;
    }
    // Cross-cancel so the product is born reduced.
    MPoly an = num_, bd = o.den_;
    MPoly g1 = gcd(an, bd);
    if (!g1.is_constant()) {
        an = divide_exact(an, g1);
        bd = divide_exact(bd, g1);
    }
    MPoly bn = o.num_, ad = den_;
    MPoly g2 = gcd(bn, ad);
    if (!g2.is_constant()) {
        bn = divide_exact(bn, g2);
        ad = divide_exact(ad, g2);
    }
    num_ = an * bn;
    den_ = ad * bd;
    normalize_leading();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw ZeroDenominatorError("RatFunc: division by zero");
    return *this *= o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroDenominatorError("RatFunc::inverse: zero");
    RatFunc r(den_, num_, AlreadyCanonical{});
    r.normalize_leading();
    return r;
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc r = one(context());
    RatFunc base = *this;
    unsigned e = static_cast<unsigned>(k);
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

RatFunc substitute(const MPoly& p, const std::map<std::size_t, RatFunc>& assignment) {
    const VarContext& ctx = p.context();
    for (const auto& [var, value] : assignment) {
        (void)var;
        check_same_context(ctx, value.context(), "substitute");
    }
    RatFunc acc = RatFunc::zero(ctx);
    // Per-variable power caches keep repeated exponents cheap.
    std::map<std::size_t, std::vector<RatFunc>> pows;
    for (const auto& [e, c] : p.terms()) {
        RatFunc term = RatFunc::constant(ctx, c);
        Exponents untouched(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(i);
            if (it == assignment.end()) {
                untouched[i] = e[i];
                continue;
            }
            auto& cache = pows[i];
            if (cache.empty()) cache.push_back(RatFunc::one(ctx));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * it->second);
            term *= cache[e[i]];
        }
        term *= RatFunc(MPoly::monomial(ctx, untouched, Rat(1)));
        acc += term;
    }
    return acc;
}

RatFunc RatFunc::substitute(const std::map<std::size_t, RatFunc>& assignment) const {
    if (assignment.empty()) return *this;
    RatFunc n = ybx::substitute(num_, assignment);
    RatFunc d = ybx::substitute(den_, assignment);
    if (d.is_zero()) throw ZeroDenominatorError("RatFunc::substitute: denominator vanishes");
    return n / d;
}

RatFunc RatFunc::eval_var(std::size_t var, const Rat& value) const {
    MPoly d = den_.eval_var(var, value);
    if (d.is_zero()) throw ZeroDenominatorError("RatFunc::eval_var: denominator vanishes");
    return RatFunc(num_.eval_var(var, value), std::move(d));
}

RatFunc RatFunc::shift_var(std::size_t var, const Rat& offset) const {
    if (offset.is_zero()) return *this;
    // Shifts are automorphisms: coprimality survives, only re-normalize.
    RatFunc r(num_.shift_var(var, offset), den_.shift_var(var, offset), AlreadyCanonical{});
    r.normalize_leading();
    return r;
}

RatFunc RatFunc::limit_at(std::size_t var, const Rat& value) const {
    MPoly d = den_.eval_var(var, value);
    if (d.is_zero())
        throw PolePersistsError("RatFunc::limit_at: pole persists at " + context().name(var) + " = " +
                                value.str());
    return RatFunc(num_.eval_var(var, value), std::move(d));
}

RatFunc RatFunc::transport_by_name(const VarContext& target) const {
    return RatFunc(num_.transport_by_name(target), den_.transport_by_name(target));
}

} // namespace ybx
