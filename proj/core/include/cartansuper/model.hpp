#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartansuper/linalg.hpp"
#include "cartansuper/witt.hpp"

namespace cartansuper {

enum class ModelKind { witt, special, custom };

/// Provenance of a basis element: x^{(alpha)}x^u D_dir for Witt models,
/// D_{i j}(x^{(alpha)}x^u) for special models.
struct BasisDatum {
    MonoIdx mono = 0;
    int dir = 0;  // Witt models
    int i = 0, j = 0;  // special models

    bool operator==(const BasisDatum&) const = default;
};

struct StructureReport {
    bool ok = true;
    std::int64_t pairs_checked = 0;
    std::int64_t triples_checked = 0;
    std::string message = "ok";
};

/// A finite-dimensional superalgebra presented by structure constants.
/// Structure rows are stored for canonical pairs only: a < b, or a == b with
/// parity(a) == 1; the other half follows from super skew-symmetry.
class AlgebraModel {
  public:
    ModelKind kind = ModelKind::custom;
    ShapePtr shape;  // null for custom models
    std::uint32_t p = 0;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<int> parity;
    std::vector<std::int64_t> zdegree;
    std::map<std::pair<int, int>, SparseVec> structure;
    std::vector<BasisDatum> basis_data;           // witt / special only
    std::vector<SparseVec> torus;                 // coordinates in model basis
    std::vector<std::vector<std::uint32_t>> weights;  // dim x (m*n)

    /// Stores [e_a, e_b] under the canonical key, dropping zero rows.
    void set_bracket(int a, int b, SparseVec row);

    /// [e_a, e_b] with the skew image reconstructed for non-canonical pairs.
    SparseVec bracket(int a, int b) const;

    /// Bilinear extension of bracket to coordinate vectors.
    SparseVec bracket_vec(const SparseVec& x, const SparseVec& y) const;
};

/// Both constructors throw ResourceLimitError when the dimension would
/// exceed max_dim.
AlgebraModel build_witt_model(const ShapePtr& shape, std::int64_t max_dim = 2000);
AlgebraModel build_special_model(const ShapePtr& shape, std::int64_t max_dim = 2000);

/// Assembles a custom model from explicit data; canonicalizes and
/// skew-validates the given structure rows (quadruples a,b,k,c).
AlgebraModel make_custom_model(std::uint32_t p, std::vector<int> parity,
                               std::vector<std::int64_t> zdegree,
                               std::vector<std::string> labels,
                               const std::vector<std::array<std::int64_t, 4>>& quads);

/// Coordinates of elements of the special model inside W, and the inverse
/// re-expression map.  Built once per special model.
class SpecialCoords {
  public:
    explicit SpecialCoords(const AlgebraModel& special_model);

    /// Coordinates of a Witt vector in the S-basis.  Throws InternalError
    /// when the vector is not in S.
    std::vector<std::uint32_t> coords(const WittVector& w) const;
    SparseVec coords_sparse(const WittVector& w) const;

    const std::vector<WittVector>& basis_vectors() const { return basis_; }

  private:
    ShapePtr shape_;
    std::vector<WittVector> basis_;
    DenseReducer reducer_;  // [B | I] augmented rows in RREF
    std::int64_t witt_dim_ = 0;
};

/// Exhaustive super skew-symmetry (all pairs) and graded Jacobi (all triples).
StructureReport verify_structure(const AlgebraModel& model);

LinearSubspace derived_subalgebra(const AlgebraModel& model);
LinearSubspace center(const AlgebraModel& model);
LinearSubspace centralizer(const AlgebraModel& model, const LinearSubspace& subspace);

/// m*n torus generator coordinates D_{k0 k1}(x_{k0} x_{k1}) in the S-basis,
/// row-major over (k0 - 1)*n + (k1 - m - 1).
std::vector<SparseVec> torus_basis(const AlgebraModel& model);

std::int64_t dimension_guard_from_env(std::int64_t fallback = 2000);

/// Short identifier such as "S(2,2;(1,1))/F_3" or "custom(dim 3)/F_5".
std::string model_id(const AlgebraModel& model);

}  // namespace cartansuper
