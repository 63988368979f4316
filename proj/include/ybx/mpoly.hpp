#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybx/rat.hpp"

namespace ybx {

/// Ordered list of variable names. Every polynomial carries the context it
/// was built over; operations on operands from different contexts throw
/// ContextMismatchError instead of silently merging variable sets, which
/// catches leg/parameter confusion early. Contexts compare by value.
class VarContext {
  public:
    VarContext();
    explicit VarContext(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Index of a variable that must exist; throws ContextMismatchError.
    std::size_t require(std::string_view name) const;

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const VarContext& a, const VarContext& b) { return !(a == b); }

  private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: higher total degree wins; degree ties break
/// lexicographically with earlier context variables more significant.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Rat. Terms are kept in grlex order
/// and zero coefficients are never stored, so equal values have equal
/// representations.
class MPoly {
  public:
    using TermMap = std::map<Exponents, Rat, GrlexLess>;

    explicit MPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

    static MPoly zero(const VarContext& ctx) { return MPoly(ctx); }
    static MPoly constant(const VarContext& ctx, const Rat& c);
    static MPoly variable(const VarContext& ctx, std::size_t index);
    static MPoly monomial(const VarContext& ctx, Exponents e, const Rat& c);

    const VarContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rat constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool uses_var(std::size_t var) const { return degree_in(var) > 0; }

    /// Leading term under grlex; both require a nonzero polynomial.
    const Exponents& leading_exponents() const;
    const Rat& leading_coeff() const;

    Rat coeff(const Exponents& e) const;

    /// Merge a term in, dropping the entry if the sum cancels.
    void add_term(const Exponents& e, const Rat& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) {
        *this = *this * o;
        return *this;
    }
    MPoly operator-() const;

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly& mul_scalar(const Rat& c);
    friend MPoly operator*(const Rat& c, MPoly p) { return p.mul_scalar(c); }

    MPoly pow(std::uint32_t k) const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Specialize one variable to a rational constant.
    MPoly eval_var(std::size_t var, const Rat& value) const;
    /// Substitute var -> var + offset (exact binomial expansion).
    MPoly shift_var(std::size_t var, const Rat& offset) const;
    /// Coefficient of var^k, as a polynomial in the same context with the
    /// chosen variable zeroed out.
    MPoly coeff_of_var(std::size_t var, std::uint32_t k) const;

    /// Re-home into another context; index_map[i] is the target index of
    /// source variable i. The map must be injective.
    MPoly transport(const VarContext& target, const std::vector<std::size_t>& index_map) const;
    /// Convenience: match variables by name (every used variable must exist
    /// in the target context).
    MPoly transport_by_name(const VarContext& target) const;

  private:
    VarContext ctx_;
    TermMap terms_;
};

/// Quotient f/g when g divides f exactly; throws NotDivisibleError otherwise.
MPoly divide_exact(const MPoly& f, const MPoly& g);
/// Same division but reporting failure as nullopt.
std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g);

/// Monic greatest common divisor (grlex-leading coefficient 1); gcd(0,0) = 0.
MPoly gcd(const MPoly& f, const MPoly& g);

void check_same_context(const VarContext& a, const VarContext& b, const char* where);

} // namespace ybx
