#include "ybx/tensormat.hpp"

#include <cassert>

namespace ybx {

namespace {
int int_pow(int base, int exp) {
    int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}
} // namespace

TensorMat::TensorMat(int n, int legs, VarContext ring)
    : n_(n), legs_(legs), dim_(int_pow(n, legs)), ring_(std::move(ring)) {
    if (n < 1 || legs < 1) throw DimensionError("TensorMat: n and legs must be positive");
}

TensorMat TensorMat::identity(int n, int legs, const VarContext& ring) {
    TensorMat m(n, legs, ring);
    for (int i = 0; i < m.dim_; ++i) m.entries_.emplace(std::make_pair(i, i), RatFunc::one(ring));
    return m;
}

TensorMat TensorMat::swap_op(int n, const VarContext& ring) {
    TensorMat m(n, 2, ring);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m.entries_.emplace(std::make_pair(b * n + a, a * n + b), RatFunc::one(ring));
    return m;
}

TensorMat TensorMat::perm_op(int n, const std::array<int, 3>& sigma, const VarContext& ring) {
    TensorMat m(n, 3, ring);
    MultiIndex col(3), row(3);
    for (int c1 = 1; c1 <= n; ++c1)
        for (int c2 = 1; c2 <= n; ++c2)
            for (int c3 = 1; c3 <= n; ++c3) {
                col = {c1, c2, c3};
                for (int leg = 0; leg < 3; ++leg) row[leg] = col[sigma[leg] - 1];
                m.set(row, col, RatFunc::one(ring));
            }
    return m;
}

int TensorMat::flatten(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != legs_)
        throw DimensionError("TensorMat: multi-index has wrong leg count");
    int flat = 0;
    for (int leg = 0; leg < legs_; ++leg) {
        if (idx[leg] < 1 || idx[leg] > n_)
            throw DimensionError("TensorMat: leg index out of range");
        flat = flat * n_ + (idx[leg] - 1);
    }
    return flat;
}

MultiIndex TensorMat::unflatten(int flat) const {
    MultiIndex idx(legs_);
    for (int leg = legs_ - 1; leg >= 0; --leg) {
        idx[leg] = flat % n_ + 1;
        flat /= n_;
    }
    return idx;
}

void TensorMat::set(const MultiIndex& row, const MultiIndex& col, RatFunc v) {
    set_flat(flatten(row), flatten(col), std::move(v));
}

void TensorMat::set_flat(int row, int col, RatFunc v) {
    check_same_context(ring_, v.context(), "TensorMat::set");
    if (v.is_zero()) {
        entries_.erase({row, col});
        return;
    }
    entries_.insert_or_assign(std::make_pair(row, col), std::move(v));
}

void TensorMat::add_to(const MultiIndex& row, const MultiIndex& col, const RatFunc& v) {
    add_to_flat(flatten(row), flatten(col), v);
}

void TensorMat::add_to_flat(int row, int col, const RatFunc& v) {
    check_same_context(ring_, v.context(), "TensorMat::add_to");
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(std::make_pair(row, col), v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

RatFunc TensorMat::get(const MultiIndex& row, const MultiIndex& col) const {
    return get_flat(flatten(row), flatten(col));
}

RatFunc TensorMat::get_flat(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? RatFunc::zero(ring_) : it->second;
}

namespace {
void check_shapes(const TensorMat& a, const TensorMat& b, const char* where) {
    if (a.n() != b.n() || a.legs() != b.legs())
        throw DimensionError(std::string(where) + ": shape mismatch");
    check_same_context(a.ring(), b.ring(), where);
}
} // namespace

TensorMat& TensorMat::operator+=(const TensorMat& o) {
    check_shapes(*this, o, "TensorMat::operator+=");
    for (const auto& [key, v] : o.entries_) add_to_flat(key.first, key.second, v);
    return *this;
}

TensorMat& TensorMat::operator-=(const TensorMat& o) {
    check_shapes(*this, o, "TensorMat::operator-=");
    for (const auto& [key, v] : o.entries_) add_to_flat(key.first, key.second, -v);
    return *this;
}

TensorMat TensorMat::operator-() const {
    TensorMat r(n_, legs_, ring_);
    for (const auto& [key, v] : entries_) r.entries_.emplace(key, -v);
    return r;
}

TensorMat& TensorMat::scale(const RatFunc& c) {
    check_same_context(ring_, c.context(), "TensorMat::scale");
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [key, v] : entries_) v *= c;
    return *this;
}

TensorMat operator*(const TensorMat& a, const TensorMat& b) {
    check_shapes(a, b, "TensorMat::operator*");
    // column view of a: col -> list of (row, value)
    std::vector<std::vector<std::pair<int, const RatFunc*>>> acols(a.dim_);
    for (const auto& [key, v] : a.entries_) acols[key.second].emplace_back(key.first, &v);
    TensorMat c(a.n_, a.legs_, a.ring_);
    for (const auto& [key, bv] : b.entries_) {
        const auto& [k, j] = key;
        for (const auto& [i, av] : acols[k]) c.add_to_flat(i, j, *av * bv);
    }
    return c;
}

bool operator==(const TensorMat& a, const TensorMat& b) {
    return a.n_ == b.n_ && a.legs_ == b.legs_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

TensorMat TensorMat::flip() const {
    if (legs_ != 2) throw DimensionError("TensorMat::flip: needs 2 legs");
    TensorMat r(n_, 2, ring_);
    for (const auto& [key, v] : entries_) {
        MultiIndex row = unflatten(key.first), col = unflatten(key.second);
        std::swap(row[0], row[1]);
        std::swap(col[0], col[1]);
        r.set(row, col, v);
    }
    return r;
}

TensorMat TensorMat::place(int l1, int l2) const {
    if (legs_ != 2) throw DimensionError("TensorMat::place: needs a 2-leg matrix");
    const bool ok = (l1 == 1 && (l2 == 2 || l2 == 3)) || (l1 == 2 && l2 == 3);
    if (!ok) throw DimensionError("TensorMat::place: legs must be 12, 13 or 23");
    const int other = 6 - l1 - l2;
    TensorMat r(n_, 3, ring_);
    MultiIndex row3(3), col3(3);
    for (const auto& [key, v] : entries_) {
        MultiIndex row = unflatten(key.first), col = unflatten(key.second);
        for (int k = 1; k <= n_; ++k) {
            row3[l1 - 1] = row[0];
            row3[l2 - 1] = row[1];
            row3[other - 1] = k;
            col3[l1 - 1] = col[0];
            col3[l2 - 1] = col[1];
            col3[other - 1] = k;
            r.set(row3, col3, v);
        }
    }
    return r;
}

TensorMat TensorMat::transport_ring(const VarContext& target) const {
    TensorMat r(n_, legs_, target);
    for (const auto& [key, v] : entries_) r.entries_.emplace(key, v.transport_by_name(target));
    return r;
}

TensorMat TensorMat::map_entries(const std::function<RatFunc(const RatFunc&)>& fn) const {
    TensorMat r(n_, legs_, ring_);
    for (const auto& [key, v] : entries_) {
        RatFunc w = fn(v);
        if (!w.is_zero()) r.set_flat(key.first, key.second, std::move(w));
    }
    return r;
}

std::optional<Witness> first_nonzero(const TensorMat& m) {
    if (m.is_zero()) return std::nullopt;
    const auto& [key, v] = *m.entries().begin();
    return Witness{m.unflatten(key.first), m.unflatten(key.second), v};
}

Residual residual_of(TensorMat m) {
    Residual r;
    r.is_zero = m.is_zero();
    r.witness = first_nonzero(m);
    r.matrix = std::move(m);
    return r;
}

} // namespace ybx
