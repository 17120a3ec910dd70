#include "cartansuper/shape.hpp"

#include "cartansuper/fp.hpp"

namespace cartansuper {

ShapePtr make_shape(int m, int n, std::vector<int> t, std::uint32_t p) {
    if (m < 2 || n < 2) throw UsageError("m,n >= 2 required");
    if (!is_odd_prime(p)) throw UsageError("p>2 required (odd prime)");
    if (static_cast<int>(t.size()) != m) throw UsageError("t must have m entries");
    auto sh = std::make_shared<ShapeParams>();
    sh->m = m;
    sh->n = n;
    sh->t = std::move(t);
    sh->p = p;
    sh->s = m + n;
    sh->pi.resize(m);
    sh->stride.resize(m);
    std::int64_t acc = 1;
    for (int i = 0; i < m; ++i) {
        if (sh->t[i] < 1) throw UsageError("t_i >= 1 required");
        std::int64_t q = 1;
        for (int k = 0; k < sh->t[i]; ++k) {
            q *= p;
            if (q > (std::int64_t{1} << 40)) throw UsageError("p^{t_i} too large");
        }
        sh->pi[i] = q - 1;
        sh->stride[i] = acc;
        acc *= q;
    }
    sh->alpha_count = acc;
    if (n >= 30) throw UsageError("n too large");
    sh->mono_count = acc << n;
    sh->xi = n;
    for (auto v : sh->pi) sh->xi += v;
    return sh;
}

}  // namespace cartansuper
