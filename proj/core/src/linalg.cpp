#include "cartansuper/linalg.hpp"

#include <algorithm>

namespace cartansuper {

SparseVec sparse_axpy(const SparseVec& y, std::uint32_t c, const SparseVec& x, std::uint32_t p) {
    c %= p;
    if (c == 0) return y;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, fp_mul(c, x[j].second, p));
            ++j;
        } else {
            std::uint32_t v = fp_add(y[i].second, fp_mul(c, x[j].second, p), p);
            if (v) out.emplace_back(y[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(const SparseVec& x, std::uint32_t c, std::uint32_t p) {
    c %= p;
    SparseVec out;
    if (c == 0) return out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.emplace_back(i, fp_mul(v, c, p));
    return out;
}

std::uint32_t sparse_get(const SparseVec& v, std::int64_t idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& e, std::int64_t k) { return e.first < k; });
    return (it != v.end() && it->first == idx) ? it->second : 0;
}

DenseReducer::DenseReducer(int ncols, std::uint32_t p)
    : p_(p), ncols_(ncols), row_of_col_(ncols, -1) {}

void DenseReducer::reduce(std::vector<std::uint32_t>& v) const {
    for (int c = 0; c < ncols_; ++c) {
        std::uint32_t x = v[c];
        if (x == 0 || row_of_col_[c] < 0) continue;
        const auto& row = rows_[row_of_col_[c]];
        std::uint32_t f = p_ - x;  // v -= x * row, row[c] == 1
        for (int k = c; k < ncols_; ++k)
            v[k] = static_cast<std::uint32_t>(
                (v[k] + static_cast<std::uint64_t>(f) * row[k]) % p_);
    }
}

bool DenseReducer::insert(std::vector<std::uint32_t>& row) {
    reduce(row);
    int piv = -1;
    for (int c = 0; c < ncols_; ++c)
        if (row[c]) {
            piv = c;
            break;
        }
    if (piv < 0) return false;
    std::uint32_t f = fp_inv(row[piv], p_);
    if (f != 1)
        for (int k = piv; k < ncols_; ++k) row[k] = fp_mul(row[k], f, p_);
    // keep RREF: clear the new pivot column in existing rows
    for (auto& r : rows_) {
        std::uint32_t x = r[piv];
        if (!x) continue;
        std::uint32_t g = p_ - x;
        for (int k = piv; k < ncols_; ++k)
            r[k] = static_cast<std::uint32_t>(
                (r[k] + static_cast<std::uint64_t>(g) * row[k]) % p_);
    }
    // insert keeping pivot order
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
    for (int c = 0; c < ncols_; ++c)
        if (row_of_col_[c] >= static_cast<int>(at)) ++row_of_col_[c];
    row_of_col_[piv] = static_cast<int>(at);
    return true;
}

bool DenseReducer::insert_sparse(const SparseVec& row) {
    std::vector<std::uint32_t> dense(ncols_, 0);
    for (const auto& [i, v] : row) dense[static_cast<std::size_t>(i)] = v % p_;
    return insert(dense);
}

std::vector<std::vector<std::uint32_t>> DenseReducer::nullspace() const {
    std::vector<std::vector<std::uint32_t>> out;
    for (int f = 0; f < ncols_; ++f) {
        if (row_of_col_[f] >= 0) continue;
        std::vector<std::uint32_t> v(ncols_, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            v[pivots_[r]] = fp_neg(rows_[r][f], p_);
        out.push_back(std::move(v));
    }
    return out;
}

void LinearSubspace::rrefify(SparseVec& v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) return;
        v = sparse_axpy(v, p_ - v.front().second, it->second, p_);
    }
}

bool LinearSubspace::insert(SparseVec v) {
    rrefify(v);
    if (v.empty()) return false;
    std::int64_t piv = v.front().first;
    std::uint32_t f = fp_inv(v.front().second, p_);
    if (f != 1) v = sparse_scale(v, f, p_);
    // clear the new pivot in existing rows
    for (auto& [pc, row] : rows_) {
        std::uint32_t x = sparse_get(row, piv);
        if (x) row = sparse_axpy(row, p_ - x, v, p_);
    }
    rows_.emplace(piv, std::move(v));
    return true;
}

SparseVec LinearSubspace::reduce(SparseVec v) const {
    rrefify(v);
    return v;
}

bool LinearSubspace::equals(const LinearSubspace& o) const {
    if (dim() != o.dim() || ambient_ != o.ambient_) return false;
    for (const auto& [pc, row] : rows_)
        if (!o.contains(row)) return false;
    for (const auto& [pc, row] : o.rows_)
        if (!contains(row)) return false;
    return true;
}

std::vector<SparseVec> LinearSubspace::basis_rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [pc, row] : rows_) out.push_back(row);
    return out;
}

std::vector<std::int64_t> LinearSubspace::pivot_columns() const {
    std::vector<std::int64_t> out;
    out.reserve(rows_.size());
    for (const auto& [pc, row] : rows_) out.push_back(pc);
    return out;
}

}  // namespace cartansuper
