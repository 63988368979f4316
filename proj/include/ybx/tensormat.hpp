#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "ybx/ratfunc.hpp"

namespace ybx {

/// Public leg indices: 1-based, one entry per leg.
using MultiIndex = std::vector<int>;

/// Exact sparse matrix on V_n^(x)legs with entries in a declared parameter
/// ring. Rows and columns are leg multi-indices, flattened with leg 1 most
/// significant; no zero entry is ever stored, so value equality is map
/// equality.
class TensorMat {
  public:
    using EntryMap = std::map<std::pair<int, int>, RatFunc>;

    TensorMat(int n, int legs, VarContext ring);
    static TensorMat identity(int n, int legs, const VarContext& ring);
    /// 2-leg swap operator P(x (x) y) = y (x) x.
    static TensorMat swap_op(int n, const VarContext& ring);
    /// Operator of a permutation of three legs: column (c1,c2,c3) maps to the
    /// row r with r[m] = c[sigma(m)]; sigma given as the images (sigma(1),
    /// sigma(2), sigma(3)).
    static TensorMat perm_op(int n, const std::array<int, 3>& sigma, const VarContext& ring);

    int n() const { return n_; }
    int legs() const { return legs_; }
    int dim() const { return dim_; }
    const VarContext& ring() const { return ring_; }
    const EntryMap& entries() const { return entries_; }

    int flatten(const MultiIndex& idx) const;
    MultiIndex unflatten(int flat) const;

    void set(const MultiIndex& row, const MultiIndex& col, RatFunc v);
    void add_to(const MultiIndex& row, const MultiIndex& col, const RatFunc& v);
    void set_flat(int row, int col, RatFunc v);
    void add_to_flat(int row, int col, const RatFunc& v);
    /// Zero when absent.
    RatFunc get(const MultiIndex& row, const MultiIndex& col) const;
    RatFunc get_flat(int row, int col) const;

    bool is_zero() const { return entries_.empty(); }

    TensorMat& operator+=(const TensorMat& o);
    TensorMat& operator-=(const TensorMat& o);
    friend TensorMat operator+(TensorMat a, const TensorMat& b) { return a += b; }
    friend TensorMat operator-(TensorMat a, const TensorMat& b) { return a -= b; }
    friend TensorMat operator*(const TensorMat& a, const TensorMat& b);
    TensorMat operator-() const;
    TensorMat& scale(const RatFunc& c);

    friend bool operator==(const TensorMat& a, const TensorMat& b);
    friend bool operator!=(const TensorMat& a, const TensorMat& b) { return !(a == b); }

    /// Conjugate a 2-leg matrix by the leg swap: P M P.
    TensorMat flip() const;

    /// Kronecker placement of a 2-leg matrix onto legs (l1, l2) of three,
    /// identity on the remaining leg.
    TensorMat place(int l1, int l2) const;

    /// Re-home entries into another parameter ring by variable name.
    TensorMat transport_ring(const VarContext& target) const;

    /// Rebuild every entry (dropping any that map to zero).
    TensorMat map_entries(const std::function<RatFunc(const RatFunc&)>& fn) const;

  private:
    int n_, legs_, dim_;
    VarContext ring_;
    EntryMap entries_;
};

/// Where a residual fails first, in (row, col) order of the flattening.
struct Witness {
    MultiIndex row, col;
    RatFunc value;
};

/// Outcome of an exact identity check. For matrix identities the residual
/// matrix itself is retained; operator-level checks only carry the witness
/// (row = monomial exponents).
struct Residual {
    bool is_zero = true;
    std::optional<Witness> witness;
    std::optional<TensorMat> matrix;
};

Residual residual_of(TensorMat m);
std::optional<Witness> first_nonzero(const TensorMat& m);

} // namespace ybx
