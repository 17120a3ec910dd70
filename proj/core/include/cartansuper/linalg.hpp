#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cartansuper/fp.hpp"

namespace cartansuper {

/// Sorted (index, nonzero coefficient) pairs.
using SparseVec = std::vector<std::pair<std::int64_t, std::uint32_t>>;

/// y + c*x over F_p.
SparseVec sparse_axpy(const SparseVec& y, std::uint32_t c, const SparseVec& x, std::uint32_t p);
SparseVec sparse_scale(const SparseVec& x, std::uint32_t c, std::uint32_t p);
std::uint32_t sparse_get(const SparseVec& v, std::int64_t idx);

/// Incremental RREF over F_p with dense rows.  Intended for systems whose
/// column count is modest (elimination blocks, coordinate solvers).
class DenseReducer {
  public:
    DenseReducer(int ncols, std::uint32_t p);

    /// Reduces the row against the current basis and absorbs what is left.
    /// Returns true when the rank grew.  The row is clobbered.
    bool insert(std::vector<std::uint32_t>& row);
    bool insert_sparse(const SparseVec& row);

    /// Reduces v in place against the RREF basis.
    void reduce(std::vector<std::uint32_t>& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    bool saturated() const { return rank() == ncols_; }

    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// RREF nullspace basis, one vector per free column, in column order.
    std::vector<std::vector<std::uint32_t>> nullspace() const;

  private:
    std::uint32_t p_;
    int ncols_;
    std::vector<std::vector<std::uint32_t>> rows_;  // sorted by pivot
    std::vector<int> pivots_;
    std::vector<int> row_of_col_;  // -1 when the column is free
};

/// A subspace of F_p^N kept as a sparse reduced-row-echelon basis.
class LinearSubspace {
  public:
    LinearSubspace(std::int64_t ambient_dim, std::uint32_t p)
        : ambient_(ambient_dim), p_(p) {}

    std::int64_t ambient_dim() const { return ambient_; }
    std::uint32_t modulus() const { return p_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    /// Returns true when the vector enlarged the span.
    bool insert(SparseVec v);

    /// Residual of v modulo the subspace.
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool equals(const LinearSubspace& o) const;

    std::vector<SparseVec> basis_rows() const;  // sorted by pivot column
    std::vector<std::int64_t> pivot_columns() const;

  private:
    void rrefify(SparseVec& v) const;

    std::int64_t ambient_;
    std::uint32_t p_;
    std::map<std::int64_t, SparseVec> rows_;  // pivot column -> row, RREF
};

}  // namespace cartansuper
