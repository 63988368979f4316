#include "ybx/mpoly.hpp"

#include <algorithm>
#include <cassert>

namespace ybx {

namespace {
const std::shared_ptr<const std::vector<std::string>>& shared_empty_names() {
    static const auto empty = std::make_shared<const std::vector<std::string>>();
    return empty;
}
} // namespace

VarContext::VarContext() : names_(shared_empty_names()) {}

VarContext::VarContext(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    for (std::size_t i = 0; i < names_->size(); ++i)
        for (std::size_t j = i + 1; j < names_->size(); ++j)
            if ((*names_)[i] == (*names_)[j])
                throw ContextMismatchError("VarContext: duplicate variable \"" + (*names_)[i] + "\"");
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) return i;
    return std::nullopt;
}

std::size_t VarContext::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw ContextMismatchError("VarContext: no variable \"" + std::string(name) + "\"");
}

void check_same_context(const VarContext& a, const VarContext& b, const char* where) {
    if (a != b) throw ContextMismatchError(std::string(where) + ": mixed variable contexts");
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t ta = 0, tb = 0;
    for (auto e : a) ta += e;
    for (auto e : b) tb += e;
    if (ta != tb) return ta < tb;
    // Same total degree: earlier variables are more significant, larger
    // exponent means larger monomial.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MPoly MPoly::constant(const VarContext& ctx, const Rat& c) {
    MPoly p(ctx);
    if (!c.is_zero()) p.terms_.emplace(Exponents(ctx.size(), 0), c);
    return p;
}

MPoly MPoly::variable(const VarContext& ctx, std::size_t index) {
    assert(index < ctx.size());
    Exponents e(ctx.size(), 0);
    e[index] = 1;
    MPoly p(ctx);
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

MPoly MPoly::monomial(const VarContext& ctx, Exponents e, const Rat& c) {
    assert(e.size() == ctx.size());
    MPoly p(ctx);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    assert(is_constant());
    return terms_.begin()->second;
}

std::uint32_t MPoly::total_degree() const {
    if (terms_.empty()) return 0;
    // grlex max has maximal total degree
    const auto& e = terms_.rbegin()->first;
    std::uint32_t t = 0;
    for (auto k : e) t += k;
    return t;
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

const Exponents& MPoly::leading_exponents() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

Rat MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_context(ctx_, o.ctx_, "MPoly::operator+=");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_context(ctx_, o.ctx_, "MPoly::operator-=");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    check_same_context(a.ctx_, b.ctx_, "MPoly::operator*");
    MPoly r(a.ctx_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const std::size_t nv = a.ctx_.size();
    Exponents e(nv);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::mul_scalar(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(std::uint32_t k) const {
    MPoly r = MPoly::constant(ctx_, Rat(1));
    MPoly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.ctx_ != b.ctx_) return false;
    return a.terms_ == b.terms_;
}

MPoly MPoly::eval_var(std::size_t var, const Rat& value) const {
    // powers of value up to the degree actually used
    std::vector<Rat> pows{Rat(1)};
    MPoly r(ctx_);
    Exponents e;
    for (const auto& [exps, c] : terms_) {
        const std::uint32_t k = exps[var];
        while (pows.size() <= k) pows.push_back(pows.back() * value);
        e = exps;
        e[var] = 0;
        r.add_term(e, c * pows[k]);
    }
    return r;
}

MPoly MPoly::shift_var(std::size_t var, const Rat& offset) const {
    if (offset.is_zero()) return *this;
    std::vector<Rat> pows{Rat(1)};
    MPoly r(ctx_);
    Exponents e;
    for (const auto& [exps, c] : terms_) {
        const std::uint32_t k = exps[var];
        while (pows.size() <= k) pows.push_back(pows.back() * offset);
        e = exps;
        for (std::uint32_t m = 0; m <= k; ++m) {
            e[var] = m;
            r.add_term(e, c * binomial(k, m) * pows[k - m]);
        }
    }
    return r;
}

MPoly MPoly::coeff_of_var(std::size_t var, std::uint32_t k) const {
    MPoly r(ctx_);
    Exponents e;
    for (const auto& [exps, c] : terms_) {
        if (exps[var] != k) continue;
        e = exps;
        e[var] = 0;
        r.terms_.emplace(std::move(e), c);
        e.clear();
    }
    return r;
}

MPoly MPoly::transport(const VarContext& target, const std::vector<std::size_t>& index_map) const {
    assert(index_map.size() == ctx_.size());
    MPoly r(target);
    Exponents e(target.size(), 0);
    for (const auto& [exps, c] : terms_) {
        std::fill(e.begin(), e.end(), 0u);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            assert(index_map[i] < target.size());
            e[index_map[i]] = exps[i];
        }
        r.add_term(e, c);
    }
    return r;
}

MPoly MPoly::transport_by_name(const VarContext& target) const {
    std::vector<std::size_t> index_map(ctx_.size(), 0);
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
        if (auto idx = target.index_of(ctx_.name(i))) {
            index_map[i] = *idx;
        } else if (uses_var(i)) {
            throw ContextMismatchError("MPoly::transport_by_name: target context lacks \"" + ctx_.name(i) + "\"");
        }
    }
    return transport(target, index_map);
}

// ---------------------------------------------------------------------------
// Exact division
// ---------------------------------------------------------------------------

namespace {

bool exponents_divide(const Exponents& den, const Exponents& num) {
    for (std::size_t i = 0; i < den.size(); ++i)
        if (den[i] > num[i]) return false;
    return true;
}

} // namespace

std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g) {
    check_same_context(f.context(), g.context(), "try_divide");
    if (g.is_zero()) return std::nullopt;
    MPoly q(f.context());
    MPoly r = f;
    const Exponents& lg = g.leading_exponents();
    const Rat& cg = g.leading_coeff();
    const std::size_t nv = f.context().size();
    Exponents e(nv);
    // If g | f then every intermediate remainder is a multiple of g, so its
    // grlex-leading term must be divisible by g's. First sticking term
    // certifies failure.
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        if (!exponents_divide(lg, lr)) return std::nullopt;
        for (std::size_t i = 0; i < nv; ++i) e[i] = lr[i] - lg[i];
        Rat c = r.leading_coeff() / cg;
        q.add_term(e, c);
        r -= MPoly::monomial(f.context(), e, c) * g;
    }
    return q;
}

MPoly divide_exact(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw ZeroDenominatorError("divide_exact: division by zero polynomial");
    if (auto q = try_divide(f, g)) return std::move(*q);
    throw NotDivisibleError("divide_exact: divisor does not divide");
}

// ---------------------------------------------------------------------------
// GCD: monomial content + content/primitive-part recursion + subresultant PRS
// ---------------------------------------------------------------------------

namespace {

MPoly make_monic(MPoly p) {
    if (p.is_zero()) return p;
    Rat lc = p.leading_coeff();
    if (!lc.is_one()) p.mul_scalar(Rat(1) / lc);
    return p;
}

Exponents min_exponents(const MPoly& p) {
    Exponents m(p.context().size(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

MPoly shift_down(const MPoly& p, const Exponents& m) {
    MPoly r(p.context());
    Exponents e;
    for (const auto& [exps, c] : p.terms()) {
        e = exps;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= m[i];
        r.add_term(e, c);
    }
    return r;
}

/// lb^(deg_x a - deg_x b + 1) * a mod b, eliminating in variable x.
MPoly pseudo_rem(const MPoly& a, const MPoly& b, std::size_t x) {
    const std::uint32_t db = b.degree_in(x);
    const MPoly lb = b.coeff_of_var(x, db);
    MPoly r = a;
    long e = static_cast<long>(a.degree_in(x)) - static_cast<long>(db) + 1;
    const MPoly xvar = MPoly::variable(a.context(), x);
    while (!r.is_zero()) {
        const std::uint32_t dr = r.degree_in(x);
        if (dr < db) break;
        MPoly lr = r.coeff_of_var(x, dr);
        r = lb * r - lr * xvar.pow(dr - db) * b;
        --e;
    }
    for (; e > 0; --e) r = lb * r;
    return r;
}

MPoly gcd_impl(const MPoly& f, const MPoly& g);

/// GCD of the polynomial coefficients of f viewed in the variable x.
MPoly content_in_var(const MPoly& f, std::size_t x) {
    MPoly c(f.context());
    const std::uint32_t d = f.degree_in(x);
    for (std::uint32_t k = 0; k <= d; ++k) {
        MPoly ck = f.coeff_of_var(x, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? std::move(ck) : gcd_impl(c, ck);
        if (c.is_constant()) return MPoly::constant(f.context(), Rat(1));
    }
    return c;
}

/// Subresultant polynomial remainder sequence on primitive inputs,
/// both of positive degree in x. Returns the primitive gcd part in x.
MPoly gcd_prs(MPoly a, MPoly b, std::size_t x) {
    if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
    MPoly gg = MPoly::constant(a.context(), Rat(1));
    MPoly hh = gg;
    while (true) {
        const std::uint32_t da = a.degree_in(x);
        const std::uint32_t db = b.degree_in(x);
        const std::uint32_t delta = da - db;
        MPoly r = pseudo_rem(a, b, x);
        if (r.is_zero()) {
            MPoly cont = content_in_var(b, x);
            return divide_exact(b, cont);
        }
        if (r.degree_in(x) == 0) return MPoly::constant(a.context(), Rat(1));
        a = b;
        b = divide_exact(r, gg * hh.pow(delta));
        gg = a.coeff_of_var(x, a.degree_in(x));
        if (delta == 1) {
            hh = gg;
        } else if (delta > 1) {
            hh = divide_exact(gg.pow(delta), hh.pow(delta - 1));
        }
    }
}

MPoly gcd_impl(const MPoly& f, const MPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const VarContext& ctx = f.context();
    if (f.is_constant() || g.is_constant()) return MPoly::constant(ctx, Rat(1));

    // Split off the monomial content of each operand.
    const Exponents mf = min_exponents(f);
    const Exponents mg = min_exponents(g);
    Exponents common(mf.size());
    bool have_common = false;
    for (std::size_t i = 0; i < mf.size(); ++i) {
        common[i] = std::min(mf[i], mg[i]);
        have_common = have_common || common[i] > 0;
    }
    MPoly f1 = shift_down(f, mf);
    MPoly g1 = shift_down(g, mg);
    auto attach_common = [&](MPoly core) {
        if (!have_common) return core;
        return core * MPoly::monomial(ctx, common, Rat(1));
    };
    if (f1.is_constant() || g1.is_constant())
        return attach_common(MPoly::constant(ctx, Rat(1)));

    // Cheap certificates before running the PRS.
    if (try_divide(f1, g1)) return attach_common(std::move(g1));
    if (try_divide(g1, f1)) return attach_common(std::move(f1));

    // Main variable: first variable appearing in both.
    std::size_t x = ctx.size();
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (f1.uses_var(i) && g1.uses_var(i)) {
            x = i;
            break;
        }
    }
    if (x == ctx.size()) return attach_common(MPoly::constant(ctx, Rat(1)));

    MPoly cf = content_in_var(f1, x);
    MPoly cg = content_in_var(g1, x);
    MPoly fp = cf.is_constant() ? std::move(f1) : divide_exact(f1, cf);
    MPoly gp = cg.is_constant() ? std::move(g1) : divide_exact(g1, cg);
    MPoly cc = gcd_impl(cf, cg);
    MPoly d = gcd_prs(std::move(fp), std::move(gp), x);
    return attach_common(cc * d);
}

} // namespace

MPoly gcd(const MPoly& f, const MPoly& g) {
    check_same_context(f.context(), g.context(), "gcd");
    return make_monic(gcd_impl(f, g));
}

} // namespace ybx
