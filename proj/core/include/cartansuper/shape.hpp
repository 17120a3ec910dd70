#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cartansuper/errors.hpp"

namespace cartansuper {

/// Parameters (m, n, t, p) of the truncated superalgebra, plus derived data.
/// Even variables x_1..x_m carry divided-power exponents 0 <= alpha_i <= pi_i
/// with pi_i = p^{t_i} - 1; odd variables are x_{m+1}..x_{m+n}.
struct ShapeParams {
    int m = 0;
    int n = 0;
    std::vector<int> t;
    std::uint32_t p = 0;

    std::vector<std::int64_t> pi;       // p^{t_i} - 1
    std::int64_t xi = 0;                // |pi| + n
    int s = 0;                          // m + n
    std::vector<std::int64_t> stride;   // mixed-radix strides for alpha packing
    std::int64_t alpha_count = 0;       // prod (pi_i + 1)
    std::int64_t mono_count = 0;        // alpha_count * 2^n

    bool operator==(const ShapeParams&) const = default;

    bool is_even_var(int i) const { return i >= 1 && i <= m; }
    bool is_odd_var(int i) const { return i > m && i <= s; }
    int tau(int i) const { return i <= m ? 0 : 1; }
};

using ShapePtr = std::shared_ptr<const ShapeParams>;

/// Validates m,n >= 2, t_i >= 1, p an odd prime, and fills derived fields.
ShapePtr make_shape(int m, int n, std::vector<int> t, std::uint32_t p);

}  // namespace cartansuper
