#pragma once

// Small hand-written models shared by the unit and acceptance suites.  All
// of them fit comfortably under the brute-force oracle cap (dim <= 8).

#include "cartansuper/model.hpp"

namespace corpus {

using cartansuper::AlgebraModel;
using cartansuper::make_custom_model;

/// Two even commuting generators; every bilinear map is a biderivation.
inline AlgebraModel abelian2_p3() {
    return make_custom_model(3, {0, 0}, {0, 0}, {"x", "y"}, {});
}

/// Heisenberg algebra: [x, y] = z, z central.
inline AlgebraModel heis3_p3() {
    return make_custom_model(3, {0, 0, 0}, {1, 1, 2}, {"x", "y", "z"},
                             {{0, 1, 2, 1}});
}

/// sl_2 over F_5: [e,h] = -2e, [e,f] = h, [h,f] = -2f.
inline AlgebraModel sl2_p5() {
    return make_custom_model(5, {0, 0, 0}, {1, 0, -1}, {"e", "h", "f"},
                             {{0, 1, 0, 3}, {0, 2, 1, 1}, {1, 2, 2, 3}});
}

/// Super Heisenberg: odd a, b with [a,a] = c, [b,b] = c, c central even.
inline AlgebraModel heisenberg_super_p5() {
    return make_custom_model(5, {1, 1, 0}, {1, 1, 2}, {"a", "b", "c"},
                             {{0, 0, 2, 1}, {1, 1, 2, 1}});
}

/// sl_2 (+) super Heisenberg over F_5; dimension 6, still oracle-sized.
inline AlgebraModel sl2_plus_heis_p5() {
    return make_custom_model(5, {0, 0, 0, 1, 1, 0}, {1, 0, -1, 1, 1, 2},
                             {"e", "h", "f", "a", "b", "c"},
                             {{0, 1, 0, 3},
                              {0, 2, 1, 1},
                              {1, 2, 2, 3},
                              {3, 3, 5, 1},
                              {4, 4, 5, 1}});
}

inline std::vector<AlgebraModel> all_models() {
    return {abelian2_p3(), heis3_p3(), sl2_p5(), heisenberg_super_p5(),
            sl2_plus_heis_p5()};
}

}  // namespace corpus
