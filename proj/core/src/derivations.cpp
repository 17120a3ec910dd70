#include "cartansuper/derivations.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cartansuper/errors.hpp"
#include "cartansuper/fp.hpp"

namespace cartansuper {

namespace {

using BracketTable = std::vector<std::vector<SparseVec>>;

BracketTable bracket_table(const AlgebraModel& model) {
    const int d = model.dim;
    BracketTable tab(d, std::vector<SparseVec>(d));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) tab[a][b] = model.bracket(a, b);
    }
    return tab;
}

GradingKeys build_keys(const AlgebraModel& model, bool enabled) {
    GradingKeys ks;
    ks.p = model.p;
    const int d = model.dim;
    ks.key.assign(d, {});
    if (!enabled) return ks;

    const std::size_t nw = model.weights.empty() ? 0 : model.weights.front().size();
    const std::size_t cand_cols = nw + 1;
    std::vector<std::vector<std::int64_t>> cand(d, std::vector<std::int64_t>(cand_cols));
    for (int a = 0; a < d; ++a) {
        for (std::size_t q = 0; q < nw; ++q) cand[a][q] = model.weights[a][q];
        cand[a][nw] = model.zdegree[a];
    }
    std::vector<bool> additive(cand_cols, true);
    for (const auto& [pr, vec] : model.structure) {
        const auto& ka = cand[pr.first];
        const auto& kb = cand[pr.second];
        for (const auto& [k, c] : vec) {
            (void)c;
            for (std::size_t q = 0; q < cand_cols; ++q) {
                if (!additive[q]) continue;
                const std::int64_t sum = ka[q] + kb[q];
                if (q < nw) {
                    if (sum % model.p != cand[k][q] % model.p) additive[q] = false;
                } else if (sum != cand[k][q]) {
                    additive[q] = false;
                }
            }
        }
    }
    for (std::size_t q = 0; q < nw; ++q) {
        if (additive[q]) ++ks.mod_cols;
    }
    for (int a = 0; a < d; ++a) {
        auto& out = ks.key[a];
        for (std::size_t q = 0; q < nw; ++q) {
            if (additive[q]) out.push_back(cand[a][q]);
        }
        if (additive[nw]) out.push_back(cand[a][nw]);
    }
    return ks;
}

DerivationSpace solve_impl(const AlgebraModel& model, int parity, bool blocked,
                           bool use_genset) {
    if (parity != 0 && parity != 1)
        throw UsageError("derivation parity must be 0 or 1");
    const int d = model.dim;
    const std::uint32_t p = model.p;
    const BracketTable tab = bracket_table(model);
    const GradingKeys ks = build_keys(model, blocked);

    // Unknowns X_{r,a}, parity(r) = parity(a) + parity, grouped by key shift.
    std::map<GradingKey, std::vector<std::pair<int, int>>> blocks;
    for (int a = 0; a < d; ++a) {
        for (int r = 0; r < d; ++r) {
            if ((model.parity[r] ^ model.parity[a]) != parity) continue;
            blocks[ks.sub(r, a)].push_back({r, a});
        }
    }
    std::map<GradingKey, std::map<std::pair<int, int>, int>> colidx;
    std::map<GradingKey, DenseReducer> red;
    for (const auto& [mu, us] : blocks) {
        auto& cols = colidx[mu];
        for (std::size_t q = 0; q < us.size(); ++q) cols[us[q]] = static_cast<int>(q);
        red.emplace(mu, DenseReducer(static_cast<int>(us.size()), p));
    }

    std::vector<int> gens;
    if (use_genset) {
        gens = generating_set(model);
    } else {
        gens.resize(d);
        for (int g = 0; g < d; ++g) gens[g] = g;
    }

    // Row for (g, b, r):  sum_k c_{gb}^k X_{r,k}
    //                   - sum_k c_{kb}^r X_{k,g}
    //                   - (-1)^{parity * d(g)} sum_k c_{gk}^r X_{k,b} = 0.
    for (int g : gens) {
        for (int b = 0; b < d; ++b) {
            std::map<int, std::map<std::pair<int, int>, std::uint32_t>> rowmap;
            for (const auto& [k, c] : tab[g][b]) {
                const int kk = static_cast<int>(k);
                for (int r = 0; r < d; ++r) {
                    if ((model.parity[r] ^ model.parity[kk]) != parity) continue;
                    auto& cell = rowmap[r][{r, kk}];
                    cell = fp_add(cell, c, p);
                }
            }
            const std::uint32_t sg =
                (parity != 0 && model.parity[g] != 0) ? 1u : p - 1;
            for (int k = 0; k < d; ++k) {
                if ((model.parity[k] ^ model.parity[g]) == parity) {
                    for (const auto& [r, c] : tab[k][b]) {
                        auto& cell = rowmap[static_cast<int>(r)][{k, g}];
                        cell = fp_sub(cell, c, p);
                    }
                }
                if ((model.parity[k] ^ model.parity[b]) == parity) {
                    for (const auto& [r, c] : tab[g][k]) {
                        auto& cell = rowmap[static_cast<int>(r)][{k, b}];
                        cell = fp_add(cell, fp_mul(sg, c, p), p);
                    }
                }
            }
            const GradingKey kgb = ks.add(g, b);
            for (const auto& [r, entries] : rowmap) {
                SparseVec row;
                GradingKey mu = ks.sub_key(r, kgb);
                const auto bit = blocks.find(mu);
                const auto& cols = colidx[mu];
                for (const auto& [ra, c] : entries) {
                    if (c == 0) continue;
                    if (bit == blocks.end())
                        throw InternalError("derivation row escapes its grading block");
                    row.push_back({cols.at(ra), c});
                }
                if (row.empty()) continue;
                DenseReducer& reducer = red.at(mu);
                if (reducer.saturated()) continue;
                reducer.insert_sparse(row);
            }
        }
    }

    DerivationSpace out;
    out.parity = parity;
    out.dim_model = d;
    out.space = LinearSubspace(static_cast<std::int64_t>(d) * d, p);
    for (const auto& [mu, us] : blocks) {
        const auto ns = red.at(mu).nullspace();
        for (const auto& v : ns) {
            SparseVec flat;
            for (std::size_t q = 0; q < us.size(); ++q) {
                if (v[q] == 0) continue;
                flat.push_back(
                    {static_cast<std::int64_t>(us[q].first) * d + us[q].second, v[q]});
            }
            std::sort(flat.begin(), flat.end());
            out.space.insert(flat);
        }
    }

    for (const auto& row : out.space.basis_rows()) {
        DerivationSpace::Element el;
        el.columns.assign(d, {});
        GradingKey shift;
        bool homogeneous = true;
        bool first = true;
        for (const auto& [idx, c] : row) {
            const int r = static_cast<int>(idx / d);
            const int a = static_cast<int>(idx % d);
            el.columns[a].push_back({r, c});
            GradingKey mu = ks.sub(r, a);
            if (first) {
                shift = std::move(mu);
                first = false;
            } else if (mu != shift) {
                homogeneous = false;
            }
        }
        if (homogeneous && !first) el.shift = shift;
        out.elements.push_back(std::move(el));
    }
    return out;
}

}  // namespace

GradingKeys build_grading_keys(const AlgebraModel& model) {
    return build_keys(model, /*enabled=*/true);
}

std::vector<int> generating_set(const AlgebraModel& model) {
    const int d = model.dim;
    const std::uint32_t p = model.p;
    const BracketTable tab = bracket_table(model);
    LinearSubspace span(d, p);
    std::vector<SparseVec> pool;
    std::vector<int> gens;

    const auto bracket_vecs = [&](const SparseVec& u, const SparseVec& v) {
        std::map<std::int64_t, std::uint32_t> acc;
        for (const auto& [ia, ca] : u) {
            for (const auto& [ib, cb] : v) {
                const std::uint32_t s = fp_mul(ca, cb, p);
                for (const auto& [k, c] : tab[ia][ib])
                    acc[k] = fp_add(acc[k], fp_mul(s, c, p), p);
            }
        }
        SparseVec out;
        for (const auto& [k, c] : acc) {
            if (c != 0) out.push_back({k, c});
        }
        return out;
    };

    for (int e = 0; e < d && span.dim() < d; ++e) {
        SparseVec v{{e, 1u}};
        if (!span.insert(v)) continue;
        gens.push_back(e);
        const std::size_t start = pool.size();
        pool.push_back(std::move(v));
        for (std::size_t i = start; i < pool.size() && span.dim() < d; ++i) {
            for (std::size_t j = 0; j <= i && span.dim() < d; ++j) {
                SparseVec w = bracket_vecs(pool[i], pool[j]);
                if (!w.empty() && span.insert(w)) pool.push_back(std::move(w));
            }
        }
    }
    return gens;
}

DerivationSpace solve_superderivations(const AlgebraModel& model, int parity) {
    return solve_impl(model, parity, /*blocked=*/true, /*use_genset=*/true);
}

DerivationSpace solve_superderivations_naive(const AlgebraModel& model, int parity) {
    return solve_impl(model, parity, /*blocked=*/false, /*use_genset=*/false);
}

SparseVec ad_matrix(const AlgebraModel& model, int a) {
    const int d = model.dim;
    SparseVec flat;
    for (int b = 0; b < d; ++b) {
        for (const auto& [r, c] : model.bracket(a, b))
            flat.push_back({r * static_cast<std::int64_t>(d) + b, c});
    }
    std::sort(flat.begin(), flat.end());
    return flat;
}

}  // namespace cartansuper
