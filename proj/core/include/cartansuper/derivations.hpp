#pragma once

#include <cstdint>
#include <vector>

#include "cartansuper/model.hpp"

namespace cartansuper {

/// Grading key attached to a basis element for exact block decomposition of
/// the solver systems: the torus weight row (entries mod p) followed by the
/// Z-degree.  Differences of keys label homogeneous shifts.
using GradingKey = std::vector<std::int64_t>;

/// Grading keys whose additivity over the stored structure constants has
/// been certified.  The leading `mod_cols` entries of every key are torus
/// weight components compared mod p; the remaining entries (at most one, the
/// Z-degree) are compared over the integers.  Non-additive components are
/// dropped so that block decomposition is always exact; with no certified
/// component every key is empty and all unknowns share a single block.
struct GradingKeys {
    std::vector<GradingKey> key;
    std::size_t mod_cols = 0;
    std::uint32_t p = 3;

    GradingKey diff(const GradingKey& x, const GradingKey& y) const {
        GradingKey out(x.size());
        for (std::size_t q = 0; q < x.size(); ++q) {
            std::int64_t v = x[q] - y[q];
            if (q < mod_cols) v = ((v % p) + p) % p;
            out[q] = v;
        }
        return out;
    }
    GradingKey sum(const GradingKey& x, const GradingKey& y) const {
        GradingKey out(x.size());
        for (std::size_t q = 0; q < x.size(); ++q) {
            std::int64_t v = x[q] + y[q];
            if (q < mod_cols) v %= p;
            out[q] = v;
        }
        return out;
    }
    GradingKey sub(int r, int a) const { return diff(key[r], key[a]); }
    GradingKey add(int a, int b) const { return sum(key[a], key[b]); }
    GradingKey sub_key(int r, const GradingKey& k) const { return diff(key[r], k); }
};

GradingKeys build_grading_keys(const AlgebraModel& model);

/// Greedy bracket-generating subset of the basis, ascending indices: a basis
/// element is kept iff it lies outside the subalgebra generated by the
/// elements kept so far.
std::vector<int> generating_set(const AlgebraModel& model);

/// The space of parity-homogeneous superderivations of a model, i.e. maps D
/// with D([x,y]) = [D(x),y] + (-1)^{d(D)d(x)}[x,D(y)].
struct DerivationSpace {
    int parity = 0;
    int dim_model = 0;

    /// RREF basis of d x d coefficient matrices flattened to vectors, index
    /// r*dim + a holding the coefficient of e_r in D(e_a).
    LinearSubspace space{0, 3};

    struct Element {
        std::vector<SparseVec> columns;  ///< columns[a] = D(e_a) over r
        GradingKey shift;  ///< key(D(e_a)) - key(e_a); empty when inhomogeneous
    };
    /// One element per RREF basis row of `space`, same order.
    std::vector<Element> elements;

    int dim() const { return static_cast<int>(elements.size()); }
};

/// Exact blocked solve: unknowns X_{r,a} are grouped by the grading-key
/// shift key(r) - key(a), and derivation rows are assembled only for pairs
/// (g, b) with g in a bracket-generating set -- the law propagates to
/// bracket products through the graded Jacobi identity.
DerivationSpace solve_superderivations(const AlgebraModel& model, int parity);

/// Second, naive code path: a single dense system with rows for all basis
/// pairs, no blocking and no generating-set reduction.  For small models and
/// oracle cross-checks.
DerivationSpace solve_superderivations_naive(const AlgebraModel& model, int parity);

/// ad(e_a) flattened like DerivationSpace::space rows (index r*dim + b for
/// the coefficient of e_r in [e_a, e_b]).
SparseVec ad_matrix(const AlgebraModel& model, int a);

}  // namespace cartansuper
