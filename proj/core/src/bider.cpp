#include "cartansuper/bider.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "cartansuper/errors.hpp"
#include "cartansuper/fp.hpp"

namespace cartansuper {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::vector<SparseVec>> bracket_table(const AlgebraModel& model) {
    const int d = model.dim;
    std::vector<std::vector<SparseVec>> tab(d, std::vector<SparseVec>(d));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) tab[a][b] = model.bracket(a, b);
    }
    return tab;
}

/// Dense accumulator with a touched-index list, for exhaustive identity
/// sweeps over large bases.
class Accumulator {
  public:
    Accumulator(int dim, std::uint32_t p) : p_(p), val_(dim, 0) {}

    void add(std::int64_t idx, std::uint32_t c) {
        if (c == 0) return;
        if (val_[idx] == 0) touched_.push_back(idx);
        val_[idx] = fp_add(val_[idx], c, p_);
    }
    void add_scaled(const SparseVec& v, std::uint32_t c) {
        if (c == 0) return;
        for (const auto& [idx, x] : v) add(idx, fp_mul(c, x, p_));
    }
    bool is_zero() const {
        for (std::int64_t idx : touched_) {
            if (val_[idx] != 0) return false;
        }
        return true;
    }
    void clear() {
        for (std::int64_t idx : touched_) val_[idx] = 0;
        touched_.clear();
    }

  private:
    std::uint32_t p_;
    std::vector<std::uint32_t> val_;
    std::vector<std::int64_t> touched_;
};

std::uint32_t sign_unit(bool negative, std::uint32_t p) { return negative ? p - 1 : 1; }

BiderResult finish_result(const AlgebraModel& model, int parity,
                          LinearSubspace space, SolverReport report) {
    BiderResult out{std::move(space), {}, std::move(report)};
    for (const auto& row : out.space.basis_rows())
        out.basis.push_back(bilinear_from_flat(model, parity, row));
    out.report.nullspace_dim = out.space.dim();
    for (const auto& phi : out.basis) {
        if (!satisfies_eq32(phi, model))
            throw InternalError(
                "solved super-biderivation violates the first-slot law (3.2)");
    }
    return out;
}

}  // namespace

SparseVec BilinearMap::apply(int a, int b) const {
    const auto it = coeffs.find({a, b});
    return it == coeffs.end() ? SparseVec{} : it->second;
}

SparseVec BilinearMap::flatten() const {
    SparseVec flat;
    for (const auto& [ab, vec] : coeffs) {
        const std::int64_t base =
            (static_cast<std::int64_t>(ab.first) * dim + ab.second) * dim;
        for (const auto& [k, c] : vec) flat.push_back({base + k, c});
    }
    return flat;
}

BilinearMap bilinear_from_flat(const AlgebraModel& model, int parity,
                               const SparseVec& flat) {
    BilinearMap phi;
    phi.parity = parity;
    phi.dim = model.dim;
    phi.p = model.p;
    const int d = model.dim;
    for (const auto& [idx, c] : flat) {
        const int k = static_cast<int>(idx % d);
        const int b = static_cast<int>((idx / d) % d);
        const int a = static_cast<int>(idx / d / d);
        if ((model.parity[a] ^ model.parity[b] ^ parity) != model.parity[k])
            throw InternalError("bilinear tensor entry violates parity homogeneity");
        phi.coeffs[{a, b}].push_back({k, c});
    }
    return phi;
}

BilinearMap inner_bider(const AlgebraModel& model, FpScalar lambda) {
    if (lambda.modulus() != model.p) throw UsageError("F_p modulus mismatch");
    BilinearMap phi;
    phi.parity = 0;
    phi.dim = model.dim;
    phi.p = model.p;
    if (lambda.is_zero()) return phi;
    for (int a = 0; a < model.dim; ++a) {
        for (int b = 0; b < model.dim; ++b) {
            SparseVec vec = sparse_scale(model.bracket(a, b), lambda.value(), model.p);
            if (!vec.empty()) phi.coeffs[{a, b}] = std::move(vec);
        }
    }
    return phi;
}

BiderResult solve_super_biderivations(const AlgebraModel& model, int parity) {
    if (parity != 0 && parity != 1)
        throw UsageError("biderivation parity must be 0 or 1");
    const auto t0 = Clock::now();
    const int d = model.dim;
    const std::uint32_t p = model.p;

    const DerivationSpace der[2] = {solve_superderivations(model, 0),
                                    solve_superderivations(model, 1)};
    GradingKeys ks = build_grading_keys(model);
    bool use_blocks = !ks.key.empty() && !ks.key.front().empty();
    for (int g = 0; g < 2 && use_blocks; ++g) {
        for (const auto& el : der[g].elements) {
            if (el.shift.empty()) use_blocks = false;
        }
    }
    const GradingKey empty_key;
    const auto key_of = [&](int a) -> const GradingKey& {
        return use_blocks ? ks.key[a] : empty_key;
    };
    const auto sigma_of = [&](const DerivationSpace::Element& el) -> const GradingKey& {
        return use_blocks ? el.shift : empty_key;
    };

    // Unknowns x_{a,l}: phi(e_a, .) = sum_l x_{a,l} D_l over the derivation
    // basis of parity d(phi)+d(a).
    struct Unk {
        int a, gp, l;
    };
    std::vector<Unk> unks;
    std::vector<std::vector<int>> qidx(d);
    std::vector<GradingKey> unk_shift;
    for (int a = 0; a < d; ++a) {
        const int gp = (parity + model.parity[a]) & 1;
        qidx[a].resize(der[gp].dim());
        for (int l = 0; l < der[gp].dim(); ++l) {
            qidx[a][l] = static_cast<int>(unks.size());
            unks.push_back({a, gp, l});
            unk_shift.push_back(ks.diff(sigma_of(der[gp].elements[l]), key_of(a)));
        }
    }

    std::map<GradingKey, std::vector<int>> blocks;
    for (int q = 0; q < static_cast<int>(unks.size()); ++q)
        blocks[unk_shift[q]].push_back(q);
    std::map<GradingKey, std::map<int, int>> colidx;
    std::map<GradingKey, DenseReducer> red;
    for (const auto& [mu, qs] : blocks) {
        auto& cols = colidx[mu];
        for (std::size_t i = 0; i < qs.size(); ++i) cols[qs[i]] = static_cast<int>(i);
        red.emplace(mu, DenseReducer(static_cast<int>(qs.size()), p));
    }

    // Skew rows phi(e_a,e_b)_r + eps phi(e_b,e_a)_r = 0,
    // eps = (-1)^{d(phi)d(a)+d(phi)d(b)+d(a)d(b)}.
    std::int64_t rows_assembled = 0;
    for (int a = 0; a < d; ++a) {
        for (int b = a; b < d; ++b) {
            const bool eps_bit =
                ((parity * (model.parity[a] + model.parity[b]) +
                  model.parity[a] * model.parity[b]) &
                 1) != 0;
            const std::uint32_t eps = sign_unit(eps_bit, p);
            std::map<int, std::map<int, std::uint32_t>> rowmap;
            const int gpa = (parity + model.parity[a]) & 1;
            for (int l = 0; l < der[gpa].dim(); ++l) {
                for (const auto& [r, c] : der[gpa].elements[l].columns[b]) {
                    auto& cell = rowmap[static_cast<int>(r)][qidx[a][l]];
                    cell = fp_add(cell, c, p);
                }
            }
            const int gpb = (parity + model.parity[b]) & 1;
            for (int l = 0; l < der[gpb].dim(); ++l) {
                for (const auto& [r, c] : der[gpb].elements[l].columns[a]) {
                    auto& cell = rowmap[static_cast<int>(r)][qidx[b][l]];
                    cell = fp_add(cell, fp_mul(eps, c, p), p);
                }
            }
            const GradingKey kab = ks.sum(key_of(a), key_of(b));
            for (const auto& [r, entries] : rowmap) {
                const GradingKey mu = ks.diff(key_of(r), kab);
                const auto bit = blocks.find(mu);
                SparseVec row;
                for (const auto& [q, c] : entries) {
                    if (c == 0) continue;
                    if (bit == blocks.end())
                        throw InternalError("skew row escapes its grading block");
                    row.push_back({colidx.at(mu).at(q), c});
                }
                if (row.empty()) continue;
                ++rows_assembled;
                DenseReducer& reducer = red.at(mu);
                if (reducer.saturated()) continue;
                reducer.insert_sparse(row);
            }
        }
    }

    LinearSubspace space(static_cast<std::int64_t>(d) * d * d, p);
    for (const auto& [mu, qs] : blocks) {
        for (const auto& v : red.at(mu).nullspace()) {
            std::map<std::int64_t, std::uint32_t> acc;
            for (std::size_t i = 0; i < qs.size(); ++i) {
                if (v[i] == 0) continue;
                const Unk& u = unks[qs[i]];
                const auto& el = der[u.gp].elements[u.l];
                for (int b = 0; b < d; ++b) {
                    const std::int64_t base =
                        (static_cast<std::int64_t>(u.a) * d + b) * d;
                    for (const auto& [r, c] : el.columns[b]) {
                        auto& cell = acc[base + r];
                        cell = fp_add(cell, fp_mul(v[i], c, p), p);
                    }
                }
            }
            SparseVec flat;
            for (const auto& [idx, c] : acc) {
                if (c != 0) flat.push_back({idx, c});
            }
            space.insert(std::move(flat));
        }
    }

    SolverReport rep;
    rep.model_id = model_id(model);
    rep.parity = parity;
    rep.unknown_count = static_cast<std::int64_t>(unks.size());
    rep.constraint_rows = rows_assembled;
    BiderResult out = finish_result(model, parity, std::move(space), std::move(rep));
    out.report.wall_ms = ms_since(t0);
    return out;
}

BiderResult solve_super_biderivations_bruteforce(const AlgebraModel& model,
                                                 int parity) {
    if (parity != 0 && parity != 1)
        throw UsageError("biderivation parity must be 0 or 1");
    const auto t0 = Clock::now();
    const int d = model.dim;
    const std::uint32_t p = model.p;
    const auto tab = bracket_table(model);

    // Parity-admissible tensor unknowns t_{ab}^k.
    std::map<std::tuple<int, int, int>, int> col;
    std::vector<std::tuple<int, int, int>> unks;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            for (int k = 0; k < d; ++k) {
                if ((model.parity[a] ^ model.parity[b] ^ parity) != model.parity[k])
                    continue;
                col[{a, b, k}] = static_cast<int>(unks.size());
                unks.push_back({a, b, k});
            }
        }
    }
    DenseReducer red(static_cast<int>(unks.size()), p);
    std::int64_t rows_assembled = 0;
    const auto push_row = [&](std::map<int, std::uint32_t>& entries) {
        SparseVec row;
        for (const auto& [q, c] : entries) {
            if (c != 0) row.push_back({q, c});
        }
        if (row.empty()) return;
        ++rows_assembled;
        if (!red.saturated()) red.insert_sparse(row);
    };

    // Eq. (3.1): phi(a,[b,c]) - [phi(a,b),c] - (-1)^{(g+d(a))d(b)}[b,phi(a,c)] = 0.
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const std::uint32_t s = sign_unit(
                (((parity + model.parity[a]) * model.parity[b]) & 1) != 0, p);
            for (int c = 0; c < d; ++c) {
                std::map<int, std::map<int, std::uint32_t>> rowmap;  // r -> col -> coeff
                for (const auto& [k, ck] : tab[b][c]) {
                    const int kk = static_cast<int>(k);
                    for (int r = 0; r < d; ++r) {
                        const auto it = col.find({a, kk, r});
                        if (it == col.end()) continue;
                        auto& cell = rowmap[r][it->second];
                        cell = fp_add(cell, ck, p);
                    }
                }
                for (int k = 0; k < d; ++k) {
                    if (const auto it = col.find({a, b, k}); it != col.end()) {
                        for (const auto& [r, cr] : tab[k][c]) {
                            auto& cell = rowmap[static_cast<int>(r)][it->second];
                            cell = fp_sub(cell, cr, p);
                        }
                    }
                    if (const auto it = col.find({a, c, k}); it != col.end()) {
                        for (const auto& [r, cr] : tab[b][k]) {
                            auto& cell = rowmap[static_cast<int>(r)][it->second];
                            cell = fp_sub(cell, fp_mul(s, cr, p), p);
                        }
                    }
                }
                for (auto& [r, entries] : rowmap) push_row(entries);
            }
        }
    }
    // Skew rows.
    for (int a = 0; a < d; ++a) {
        for (int b = a; b < d; ++b) {
            const std::uint32_t eps = sign_unit(
                ((parity * (model.parity[a] + model.parity[b]) +
                  model.parity[a] * model.parity[b]) &
                 1) != 0,
                p);
            for (int k = 0; k < d; ++k) {
                std::map<int, std::uint32_t> entries;
                if (const auto it = col.find({a, b, k}); it != col.end())
                    entries[it->second] = fp_add(entries[it->second], 1, p);
                if (const auto it = col.find({b, a, k}); it != col.end())
                    entries[it->second] = fp_add(entries[it->second], eps, p);
                push_row(entries);
            }
        }
    }

    LinearSubspace space(static_cast<std::int64_t>(d) * d * d, p);
    for (const auto& v : red.nullspace()) {
        SparseVec flat;
        for (std::size_t q = 0; q < unks.size(); ++q) {
            if (v[q] == 0) continue;
            const auto& [a, b, k] = unks[q];
            flat.push_back({(static_cast<std::int64_t>(a) * d + b) * d + k, v[q]});
        }
        std::sort(flat.begin(), flat.end());
        space.insert(std::move(flat));
    }
    SolverReport rep;
    rep.model_id = model_id(model);
    rep.parity = parity;
    rep.unknown_count = static_cast<std::int64_t>(unks.size());
    rep.constraint_rows = rows_assembled;
    BiderResult out = finish_result(model, parity, std::move(space), std::move(rep));
    out.report.wall_ms = ms_since(t0);
    return out;
}

InnerComparison compare_with_inner(const BiderResult& bder, const AlgebraModel& model) {
    InnerComparison cmp;
    const BilinearMap ib = inner_bider(model, FpScalar(1, model.p));
    const SparseVec c = ib.flatten();
    const int inner_dim = c.empty() ? 0 : 1;
    const bool contains_inner = c.empty() || bder.space.contains(c);
    if (contains_inner && bder.space.dim() == inner_dim) {
        cmp.verdict = InnerVerdict::equal;
        if (inner_dim == 1) {
            // The RREF basis row equals lambda * c: its pivot coefficient is
            // 1, so lambda is the inverse of c at that pivot.
            const auto rows = bder.space.basis_rows();
            const std::int64_t pivot = rows.front().front().first;
            cmp.lambda = fp_inv(sparse_get(c, pivot), model.p);
            cmp.message = "solved space = span{lambda [.,.]}";
        } else {
            cmp.message = "solved space and inner family are both zero";
        }
    } else if (contains_inner) {
        cmp.verdict = InnerVerdict::proper_superset;
        cmp.message = "inner family (dim " + std::to_string(inner_dim) +
                      ") strictly inside solved space (dim " +
                      std::to_string(bder.space.dim()) + ")";
    } else {
        cmp.verdict = InnerVerdict::disjoint;
        cmp.message = "bracket tensor not contained in the solved space";
    }
    return cmp;
}

bool satisfies_eq31(const BilinearMap& phi, const AlgebraModel& model) {
    const int d = model.dim;
    const std::uint32_t p = model.p;
    const auto tab = bracket_table(model);
    Accumulator acc(d, p);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const std::uint32_t s = sign_unit(
                (((phi.parity + model.parity[a]) * model.parity[b]) & 1) != 0, p);
            for (int c = 0; c < d; ++c) {
                acc.clear();
                for (const auto& [k, ck] : tab[b][c])
                    acc.add_scaled(phi.apply(a, static_cast<int>(k)), ck);
                for (const auto& [k, tk] : phi.apply(a, b))
                    acc.add_scaled(tab[k][c], fp_neg(tk, p));
                for (const auto& [k, tk] : phi.apply(a, c))
                    acc.add_scaled(tab[b][k], fp_neg(fp_mul(s, tk, p), p));
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

bool satisfies_eq32(const BilinearMap& phi, const AlgebraModel& model) {
    const int d = model.dim;
    const std::uint32_t p = model.p;
    const auto tab = bracket_table(model);
    Accumulator acc(d, p);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            for (int c = 0; c < d; ++c) {
                const std::uint32_t s = sign_unit(
                    (((phi.parity + model.parity[c]) * model.parity[b]) & 1) != 0, p);
                acc.clear();
                // phi([a,b],c) - [a,phi(b,c)] - (-1)^{(g+d(c))d(b)}[phi(a,c),b].
                for (const auto& [k, ck] : tab[a][b])
                    acc.add_scaled(phi.apply(static_cast<int>(k), c), ck);
                for (const auto& [k, tk] : phi.apply(b, c))
                    acc.add_scaled(tab[a][k], fp_neg(tk, p));
                for (const auto& [k, tk] : phi.apply(a, c))
                    acc.add_scaled(tab[k][b], fp_neg(fp_mul(s, tk, p), p));
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

bool satisfies_skew(const BilinearMap& phi, const AlgebraModel& model) {
    const int d = model.dim;
    const std::uint32_t p = model.p;
    for (int a = 0; a < d; ++a) {
        for (int b = a; b < d; ++b) {
            const std::uint32_t eps = sign_unit(
                ((phi.parity * (model.parity[a] + model.parity[b]) +
                  model.parity[a] * model.parity[b]) &
                 1) != 0,
                p);
            const SparseVec lhs = phi.apply(a, b);
            const SparseVec rhs = sparse_scale(phi.apply(b, a), eps, p);
            if (!sparse_axpy(lhs, 1, rhs, p).empty()) return false;
        }
    }
    return true;
}

IdentityReport check_identity_L32(const BilinearMap& phi, const AlgebraModel& model,
                                  std::int64_t max_exhaustive, std::int64_t samples,
                                  std::uint64_t seed) {
    IdentityReport rep;
    rep.sign_convention = "d(phi)(d(y)+d(u)) (proof of the lemma)";
    const int d = model.dim;
    const std::uint32_t p = model.p;
    const auto tab = bracket_table(model);
    Accumulator diff_proof(d, p), diff_stmt(d, p);
    bool statement_failed = false;

    const auto run_quad = [&](int x, int y, int u, int v) -> bool {
        ++rep.checks;
        const std::uint32_t s_proof = sign_unit(
            ((phi.parity * (model.parity[y] + model.parity[u])) & 1) != 0, p);
        const std::uint32_t s_stmt = sign_unit(
            ((phi.parity * model.parity[y] + model.parity[u]) & 1) != 0, p);
        diff_proof.clear();
        diff_stmt.clear();
        // [phi(x,y),[u,v]] - (sign) [[x,y],phi(u,v)] under both exponent
        // readings at once.
        for (const auto& [k, tk] : phi.apply(x, y)) {
            for (const auto& [l, cl] : tab[u][v]) {
                const std::uint32_t base = fp_mul(tk, cl, p);
                diff_proof.add_scaled(tab[k][l], base);
                diff_stmt.add_scaled(tab[k][l], base);
            }
        }
        for (const auto& [k, ck] : tab[x][y]) {
            for (const auto& [l, tl] : phi.apply(u, v)) {
                const std::uint32_t base = fp_mul(ck, tl, p);
                diff_proof.add_scaled(tab[k][l], fp_neg(fp_mul(s_proof, base, p), p));
                diff_stmt.add_scaled(tab[k][l], fp_neg(fp_mul(s_stmt, base, p), p));
            }
        }
        if (!diff_stmt.is_zero()) statement_failed = true;
        if (!diff_proof.is_zero()) {
            rep.ok = false;
            rep.message = "counterexample quadruple (" + std::to_string(x) + "," +
                          std::to_string(y) + "," + std::to_string(u) + "," +
                          std::to_string(v) + ")";
            return false;
        }
        return true;
    };

    const double total = static_cast<double>(d) * d * d * d;
    if (total <= static_cast<double>(max_exhaustive)) {
        rep.exhaustive = true;
        for (int x = 0; x < d && rep.ok; ++x)
            for (int y = 0; y < d && rep.ok; ++y)
                for (int u = 0; u < d && rep.ok; ++u)
                    for (int v = 0; v < d && rep.ok; ++v) run_quad(x, y, u, v);
    } else {
        rep.exhaustive = false;
        rep.seed = seed;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, d - 1);
        for (std::int64_t i = 0; i < samples && rep.ok; ++i)
            run_quad(pick(rng), pick(rng), pick(rng), pick(rng));
    }
    if (rep.ok && statement_failed)
        rep.message =
            "ok under the proof's exponent; the statement's exponent "
            "d(phi)d(y)+d(u) fails on at least one quadruple";
    return rep;
}

IdentityReport check_identity_L33(const BilinearMap& phi, const AlgebraModel& model) {
    IdentityReport rep;
    rep.sign_convention = "none";
    for (int a = 0; a < model.dim; ++a) {
        for (int b = 0; b < model.dim; ++b) {
            if (((model.parity[a] + model.parity[b]) & 1) != 0) continue;
            ++rep.checks;
            const SparseVec res =
                model.bracket_vec(phi.apply(a, b), model.bracket(a, b));
            if (!res.empty()) {
                rep.ok = false;
                rep.message = "counterexample pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ")";
                return rep;
            }
        }
    }
    return rep;
}

IdentityReport check_identity_L34(const BilinearMap& phi, const AlgebraModel& model) {
    IdentityReport rep;
    rep.sign_convention = "none";
    const LinearSubspace cz = centralizer(model, derived_subalgebra(model));
    for (int a = 0; a < model.dim; ++a) {
        for (int b = 0; b < model.dim; ++b) {
            if (!model.bracket(a, b).empty()) continue;
            ++rep.checks;
            if (!cz.contains(phi.apply(a, b))) {
                rep.ok = false;
                rep.message = "counterexample pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ")";
                return rep;
            }
        }
    }
    return rep;
}

IdentityReport check_lemma41(const BilinearMap& phi, const AlgebraModel& model) {
    IdentityReport rep;
    rep.sign_convention = "none";
    if (center(model).dim() != 0 || derived_subalgebra(model).dim() != model.dim) {
        rep.exhaustive = false;
        rep.message = "skipped: model is not simple (center or derived subalgebra)";
        return rep;
    }
    for (int a = 0; a < model.dim; ++a) {
        for (int b = 0; b < model.dim; ++b) {
            if (!model.bracket(a, b).empty()) continue;
            ++rep.checks;
            if (!phi.apply(a, b).empty()) {
                rep.ok = false;
                rep.message = "counterexample pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ")";
                return rep;
            }
        }
    }
    return rep;
}

TheoremReport verify_theorem_full(const AlgebraModel& model) {
    const auto t0 = Clock::now();
    TheoremReport out;
    SolverReport& rep = out.summary;
    rep.model_id = model_id(model);
    rep.parity = 0;

    const auto not_applicable = [&](const std::string& reason) {
        rep.verdict = "NOT APPLICABLE";
        rep.message = reason;
        rep.wall_ms = ms_since(t0);
        return out;
    };
    const StructureReport sr = verify_structure(model);
    if (!sr.ok) return not_applicable("structure verification failed: " + sr.message);
    if (center(model).dim() != 0) return not_applicable("center is nonzero");
    if (derived_subalgebra(model).dim() != model.dim)
        return not_applicable("derived subalgebra is proper");

    const BiderResult b0 = solve_super_biderivations(model, 0);
    const BiderResult b1 = solve_super_biderivations(model, 1);
    out.bder0 = b0.report;
    out.bder1 = b1.report;
    rep.unknown_count = b0.report.unknown_count + b1.report.unknown_count;
    rep.constraint_rows = b0.report.constraint_rows + b1.report.constraint_rows;
    rep.nullspace_dim = b0.space.dim();

    const InnerComparison cmp = compare_with_inner(b0, model);
    out.inner = cmp;
    rep.lambda = cmp.lambda;

    bool identities_ok = true;
    std::string identity_note = "identity suites passed";
    std::vector<std::pair<std::string, const BilinearMap*>> witnesses;
    const BilinearMap inner = inner_bider(model, FpScalar(1, model.p));
    witnesses.push_back({"inner", &inner});
    for (std::size_t i = 0; i < b0.basis.size(); ++i)
        witnesses.push_back({"bder0[" + std::to_string(i) + "]", &b0.basis[i]});
    for (std::size_t i = 0; i < b1.basis.size(); ++i)
        witnesses.push_back({"bder1[" + std::to_string(i) + "]", &b1.basis[i]});
    for (const auto& [name, phi] : witnesses) {
        const std::pair<std::string, IdentityReport> runs[] = {
            {"L32", check_identity_L32(*phi, model)},
            {"L33", check_identity_L33(*phi, model)},
            {"L34", check_identity_L34(*phi, model)},
            {"L41", check_lemma41(*phi, model)},
        };
        for (const auto& [lemma, r] : runs) {
            out.identities.push_back({name + "/" + lemma, r});
            if (!r.ok && identities_ok) {
                identities_ok = false;
                identity_note =
                    "identity suite failure: " + name + "/" + lemma + " " + r.message;
            }
        }
    }

    const bool theorem = cmp.verdict == InnerVerdict::equal &&
                         b0.space.dim() == 1 && b1.space.dim() == 0 &&
                         identities_ok;
    rep.verdict = theorem ? "THEOREM VERIFIED" : "THEOREM NOT VERIFIED";
    rep.message = "BDer_0 dim " + std::to_string(b0.space.dim()) + " (" +
                  cmp.message + "); BDer_1 dim " + std::to_string(b1.space.dim()) +
                  "; " + identity_note;
    rep.wall_ms = ms_since(t0);
    return out;
}

SolverReport verify_theorem(const AlgebraModel& model) {
    return verify_theorem_full(model).summary;
}

}  // namespace cartansuper
