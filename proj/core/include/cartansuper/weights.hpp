#pragma once

#include <map>
#include <string>
#include <vector>

#include "cartansuper/model.hpp"

namespace cartansuper {

/// Values of a weight functional on the m*n torus generators, row-major over
/// (k0 - 1)*n + (k1 - m - 1).
using WeightVector = std::vector<std::uint32_t>;

/// The eigenvalue formula alpha_{k0} + delta_{(k1 in u)} - delta_{i k0}
/// - delta_{j k0} - delta_{i k1} - delta_{j k1}, reduced mod p, for every
/// torus generator (k0, k1).
WeightVector weight_of(const ShapeParams& sh, const BasisDatum& datum);

/// Simultaneous eigenspace decomposition under ad of the attached torus.
/// Groups basis vectors by their weight rows and asserts, from the structure
/// constants, that each basis vector really is a simultaneous eigenvector;
/// a failure is an InternalError.
std::map<WeightVector, LinearSubspace> weight_decomposition(const AlgebraModel& model);

struct Lemma43Report {
    bool ok = true;
    std::int64_t tuples_checked = 0;
    std::int64_t elements_checked = 0;
    std::string message = "ok";
};

/// Checks both inclusions of the four displayed weight-space identities for
/// every admissible index tuple.  Congruence-constrained exponents range over
/// all representatives inside A(m,t).
Lemma43Report verify_weight_spaces_lemma43(const AlgebraModel& model);

}  // namespace cartansuper
