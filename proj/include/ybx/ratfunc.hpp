#pragma once

#include <map>

#include "ybx/mpoly.hpp"

namespace ybx {

/// Canonical reduced fraction of multivariate polynomials: den != 0,
/// gcd(num, den) = 1, den monic under grlex, zero is 0/1. Because the form
/// is canonical, equality of values is equality of representations.
class RatFunc {
  public:
    /// Canonicalizing constructor; throws ZeroDenominatorError when den = 0.
    RatFunc(MPoly num, MPoly den);
    explicit RatFunc(MPoly num);

    static RatFunc zero(const VarContext& ctx) { return RatFunc(MPoly::zero(ctx)); }
    static RatFunc one(const VarContext& ctx) { return constant(ctx, Rat(1)); }
    static RatFunc constant(const VarContext& ctx, const Rat& c) {
        return RatFunc(MPoly::constant(ctx, c));
    }
    static RatFunc variable(const VarContext& ctx, std::size_t index) {
        return RatFunc(MPoly::variable(ctx, index));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarContext& context() const { return num_.context(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inverse() const;
    /// Integer power; negative exponents invert first.
    RatFunc pow(int k) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Simultaneous substitution of variables by rational functions over the
    /// same context; unmentioned variables stay put. Throws
    /// ZeroDenominatorError when the substituted denominator vanishes
    /// identically.
    RatFunc substitute(const std::map<std::size_t, RatFunc>& assignment) const;

    /// Plain specialization var = value (not a limit).
    RatFunc eval_var(std::size_t var, const Rat& value) const;

    /// Substitute var -> var + offset. A field automorphism, so reduction is
    /// preserved and no gcd is needed.
    RatFunc shift_var(std::size_t var, const Rat& offset) const;

    /// Specialize var = value on the canonical form; equals the limit
    /// var -> value when the reduced denominator survives, and throws
    /// PolePersistsError when it does not.
    RatFunc limit_at(std::size_t var, const Rat& value) const;

    /// Re-home into another context by variable name.
    RatFunc transport_by_name(const VarContext& target) const;

  private:
    struct AlreadyCanonical {};
    RatFunc(MPoly num, MPoly den, AlreadyCanonical) : num_(std::move(num)), den_(std::move(den)) {}
    /// Divide out lc(den) so the denominator is monic. Assumes gcd already 1.
    void normalize_leading();

    MPoly num_, den_;
};

/// Substitute a polynomial's variables by rational functions (same context).
RatFunc substitute(const MPoly& p, const std::map<std::size_t, RatFunc>& assignment);

} // namespace ybx
