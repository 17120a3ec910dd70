#include "cartansuper/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cartansuper {

namespace {

bool canonical_pair(const AlgebraModel& m, int a, int b) {
    return a < b || (a == b && m.parity[a] == 1);
}

std::string special_label(const ShapeParams& sh, const BasisDatum& d) {
    std::ostringstream os;
    os << "D_{" << d.i << "," << d.j << "}(" << mono_label(sh, d.mono) << ")";
    return os.str();
}

void check_index(int v, int dim, const char* what) {
    if (v < 0 || v >= dim) throw UsageError(std::string(what) + " index out of range");
}

}  // namespace

void AlgebraModel::set_bracket(int a, int b, SparseVec row) {
    check_index(a, dim, "basis");
    check_index(b, dim, "basis");
    if (row.empty()) return;
    if (!canonical_pair(*this, a, b)) {
        if (a == b) throw UsageError("[x,x] must vanish for even x");
        // [b,a] = -(-1)^{d(a)d(b)} [a,b]
        std::uint32_t sgn = (parity[a] & parity[b]) ? 1 : p - 1;
        structure[{b, a}] = sparse_scale(row, sgn, p);
        return;
    }
    structure[{a, b}] = std::move(row);
}

SparseVec AlgebraModel::bracket(int a, int b) const {
    check_index(a, dim, "basis");
    check_index(b, dim, "basis");
    if (canonical_pair(*this, a, b)) {
        auto it = structure.find({a, b});
        return it == structure.end() ? SparseVec{} : it->second;
    }
    if (a == b) return {};  // even diagonal, zero in odd characteristic
    auto it = structure.find({b, a});
    if (it == structure.end()) return {};
    std::uint32_t sgn = (parity[a] & parity[b]) ? 1 : p - 1;
    return sparse_scale(it->second, sgn, p);
}

SparseVec AlgebraModel::bracket_vec(const SparseVec& x, const SparseVec& y) const {
    std::map<std::int64_t, std::uint32_t> acc;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            std::uint32_t c = fp_mul(ca, cb, p);
            if (!c) continue;
            for (const auto& [k, ck] : bracket(static_cast<int>(a), static_cast<int>(b))) {
                std::uint32_t& slot = acc[k];
                slot = fp_add(slot, fp_mul(c, ck, p), p);
            }
        }
    SparseVec out;
    for (const auto& [k, c] : acc)
        if (c) out.emplace_back(k, c);
    return out;
}

std::int64_t dimension_guard_from_env(std::int64_t fallback) {
    const char* env = std::getenv("CARTANSUPER_MAX_DIM");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
        throw UsageError("CARTANSUPER_MAX_DIM must be a positive integer");
    return v;
}

AlgebraModel build_witt_model(const ShapePtr& shape, std::int64_t max_dim) {
    const ShapeParams& sh = *shape;
    std::int64_t d64 = sh.mono_count * sh.s;
    if (d64 > max_dim)
        throw ResourceLimitError("model dimension " + std::to_string(d64) +
                                 " exceeds guard " + std::to_string(max_dim));
    AlgebraModel m;
    m.kind = ModelKind::witt;
    m.shape = shape;
    m.p = sh.p;
    m.dim = static_cast<int>(d64);
    m.labels.reserve(m.dim);
    m.parity.reserve(m.dim);
    m.zdegree.reserve(m.dim);
    m.basis_data.reserve(m.dim);
    for (MonoIdx mono = 0; mono < static_cast<MonoIdx>(sh.mono_count); ++mono)
        for (int j = 1; j <= sh.s; ++j) {
            m.labels.push_back(witt_term_label(sh, mono, j));
            m.parity.push_back(witt_term_parity(sh, mono, j));
            m.zdegree.push_back(witt_term_zdegree(sh, mono));
            m.basis_data.push_back({mono, j, 0, 0});
        }
    for (int a = 0; a < m.dim; ++a) {
        WittVector wa = WittVector::basis_term(shape, m.basis_data[a].mono, m.basis_data[a].dir);
        for (int b = a; b < m.dim; ++b) {
            if (a == b && m.parity[a] == 0) continue;
            WittVector wb =
                WittVector::basis_term(shape, m.basis_data[b].mono, m.basis_data[b].dir);
            m.set_bracket(a, b, witt_bracket(wa, wb).coordinates());
        }
    }
    return m;
}

AlgebraModel build_special_model(const ShapePtr& shape, std::int64_t max_dim) {
    const ShapeParams& sh = *shape;
    std::int64_t dW = sh.mono_count * sh.s;
    if (dW > max_dim)
        throw ResourceLimitError("ambient Witt dimension " + std::to_string(dW) +
                                 " exceeds guard " + std::to_string(max_dim));
    AlgebraModel m;
    m.kind = ModelKind::special;
    m.shape = shape;
    m.p = sh.p;

    // Greedy basis from the spanning set {D_{ij}(mono)} in deterministic
    // order: i ascending, j ascending (diagonal included for odd i), then
    // packed monomial index.  D_{ii} vanishes for even i but not for odd i.
    DenseReducer span(static_cast<int>(dW), sh.p);
    std::vector<WittVector> basis_vecs;
    for (int i = 1; i <= sh.s; ++i)
        for (int j = (sh.is_odd_var(i) ? i : i + 1); j <= sh.s; ++j)
            for (MonoIdx mono = 0; mono < static_cast<MonoIdx>(sh.mono_count); ++mono) {
                WittVector w = special_generator(shape, i, j, mono);
                if (w.is_zero()) continue;
                if (!span.insert_sparse(w.coordinates())) continue;
                m.basis_data.push_back({mono, 0, i, j});
                basis_vecs.push_back(std::move(w));
                m.labels.push_back(special_label(sh, m.basis_data.back()));
            }
    m.dim = static_cast<int>(basis_vecs.size());
    m.parity.reserve(m.dim);
    m.zdegree.reserve(m.dim);
    for (const auto& d : m.basis_data) {
        m.parity.push_back((mono_parity(sh, d.mono) + sh.tau(d.i) + sh.tau(d.j)) & 1);
        m.zdegree.push_back(mono_zdegree(sh, d.mono) - 2);
    }

    SpecialCoords coords(m);
    for (int a = 0; a < m.dim; ++a)
        for (int b = a; b < m.dim; ++b) {
            if (a == b && m.parity[a] == 0) continue;
            WittVector br = witt_bracket(coords.basis_vectors()[a], coords.basis_vectors()[b]);
            if (br.is_zero()) continue;
            m.set_bracket(a, b, coords.coords_sparse(br));
        }

    // torus D_{k0 k1}(x_{k0} x_{k1}) and the weight table
    for (int k0 = 1; k0 <= sh.m; ++k0)
        for (int k1 = sh.m + 1; k1 <= sh.s; ++k1) {
            SuperMonomial mono;
            mono.alpha.assign(sh.m, 0);
            mono.alpha[k0 - 1] = 1;
            mono.umask = 1u << (k1 - sh.m - 1);
            WittVector h = special_generator(shape, k0, k1, encode_mono(sh, mono));
            m.torus.push_back(coords.coords_sparse(h));
        }
    m.weights.resize(m.dim);
    for (int a = 0; a < m.dim; ++a) {
        const BasisDatum& d = m.basis_data[a];
        SuperMonomial mo = decode_mono(sh, d.mono);
        for (int k0 = 1; k0 <= sh.m; ++k0)
            for (int k1 = sh.m + 1; k1 <= sh.s; ++k1) {
                std::int64_t val = mo.alpha[k0 - 1] + ((mo.umask >> (k1 - sh.m - 1)) & 1) -
                                   (d.i == k0) - (d.j == k0) - (d.i == k1) - (d.j == k1);
                m.weights[a].push_back(fp_from_int(val, sh.p));
            }
    }
    return m;
}

AlgebraModel make_custom_model(std::uint32_t p, std::vector<int> parity,
                               std::vector<std::int64_t> zdegree,
                               std::vector<std::string> labels,
                               const std::vector<std::array<std::int64_t, 4>>& quads) {
    if (!is_odd_prime(p)) throw UsageError("p>2 required (odd prime)");
    AlgebraModel m;
    m.kind = ModelKind::custom;
    m.p = p;
    m.dim = static_cast<int>(parity.size());
    for (int v : parity)
        if (v != 0 && v != 1) throw UsageError("parity entries must be 0 or 1");
    if (zdegree.empty()) zdegree.assign(m.dim, 0);
    if (static_cast<int>(zdegree.size()) != m.dim) throw UsageError("zdegree length mismatch");
    if (labels.empty())
        for (int i = 0; i < m.dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    if (static_cast<int>(labels.size()) != m.dim) throw UsageError("labels length mismatch");
    m.parity = std::move(parity);
    m.zdegree = std::move(zdegree);
    m.labels = std::move(labels);

    std::map<std::pair<int, int>, std::map<std::int64_t, std::uint32_t>> acc;
    for (const auto& q : quads) {
        int a = static_cast<int>(q[0]), b = static_cast<int>(q[1]), k = static_cast<int>(q[2]);
        check_index(a, m.dim, "quadruple a");
        check_index(b, m.dim, "quadruple b");
        check_index(k, m.dim, "quadruple k");
        std::uint32_t c = fp_from_int(q[3], p);
        if (!c) continue;
        if ((m.parity[a] + m.parity[b]) % 2 != m.parity[k])
            throw UsageError("structure constant violates parity additivity");
        std::uint32_t& slot = acc[{a, b}][k];
        slot = fp_add(slot, c, p);
    }
    for (auto& [ab, row] : acc) {
        SparseVec v;
        for (const auto& [k, c] : row)
            if (c) v.emplace_back(k, c);
        if (v.empty()) continue;
        auto [a, b] = ab;
        if (!canonical_pair(m, a, b) && acc.count({b, a}))
            throw UsageError("structure quadruples given for both pair orders");
        m.set_bracket(a, b, std::move(v));
    }
    return m;
}

SpecialCoords::SpecialCoords(const AlgebraModel& sm)
    : shape_(sm.shape),
      reducer_(0, sm.p ? sm.p : 3),
      witt_dim_(0) {
    if (sm.kind != ModelKind::special || !shape_)
        throw UsageError("coordinate map requires a special model");
    const ShapeParams& sh = *shape_;
    witt_dim_ = sh.mono_count * sh.s;
    reducer_ = DenseReducer(static_cast<int>(witt_dim_ + sm.dim), sh.p);
    basis_.reserve(sm.dim);
    for (int k = 0; k < sm.dim; ++k) {
        const BasisDatum& d = sm.basis_data[k];
        basis_.push_back(special_generator(shape_, d.i, d.j, d.mono));
        std::vector<std::uint32_t> row(witt_dim_ + sm.dim, 0);
        for (const auto& [idx, c] : basis_.back().coordinates()) row[idx] = c;
        row[witt_dim_ + k] = 1;
        if (!reducer_.insert(row)) throw InternalError("declared S-basis is dependent");
    }
}

std::vector<std::uint32_t> SpecialCoords::coords(const WittVector& w) const {
    const ShapeParams& sh = *shape_;
    std::vector<std::uint32_t> v(witt_dim_ + basis_.size(), 0);
    for (const auto& [idx, c] : w.coordinates()) v[idx] = c;
    reducer_.reduce(v);
    for (std::int64_t i = 0; i < witt_dim_; ++i)
        if (v[i]) throw InternalError("vector is not in S");
    std::vector<std::uint32_t> out(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) out[k] = fp_neg(v[witt_dim_ + k], sh.p);
    return out;
}

SparseVec SpecialCoords::coords_sparse(const WittVector& w) const {
    SparseVec out;
    auto full = coords(w);
    for (std::size_t k = 0; k < full.size(); ++k)
        if (full[k]) out.emplace_back(static_cast<std::int64_t>(k), full[k]);
    return out;
}

StructureReport verify_structure(const AlgebraModel& m) {
    StructureReport rep;
    const std::uint32_t p = m.p;
    // pair sweep: parity and Z-degree additivity of every nonzero entry,
    // plus the even-diagonal vanishing the storage format enforces
    for (int a = 0; a < m.dim && rep.ok; ++a)
        for (int b = a; b < m.dim; ++b) {
            ++rep.pairs_checked;
            for (const auto& [k, c] : m.bracket(a, b)) {
                if ((m.parity[a] + m.parity[b]) % 2 != m.parity[k]) {
                    rep.ok = false;
                    rep.message = "parity additivity fails at [" + m.labels[a] + "," +
                                  m.labels[b] + "] -> " + m.labels[k];
                    break;
                }
                if (m.zdegree[a] + m.zdegree[b] != m.zdegree[k]) {
                    rep.ok = false;
                    rep.message = "Z-degree additivity fails at [" + m.labels[a] + "," +
                                  m.labels[b] + "] -> " + m.labels[k];
                    break;
                }
            }
            if (!rep.ok) break;
        }
    if (!rep.ok) return rep;

    // graded Jacobi on all ordered triples:
    // [a,[b,c]] = [[a,b],c] + (-1)^{d(a)d(b)} [b,[a,c]]
    std::vector<std::uint32_t> acc(m.dim, 0);
    std::vector<int> touched;
    for (int a = 0; a < m.dim; ++a)
        for (int b = 0; b < m.dim; ++b) {
            SparseVec ab = m.bracket(a, b);
            bool both_odd = m.parity[a] && m.parity[b];
            for (int c = 0; c < m.dim; ++c) {
                ++rep.triples_checked;
                for (const auto& [k, v] : m.bracket(b, c))
                    for (const auto& [r, w] : m.bracket(a, static_cast<int>(k))) {
                        if (!acc[r]) touched.push_back(static_cast<int>(r));
                        acc[r] = fp_add(acc[r], fp_mul(v, w, p), p);
                    }
                for (const auto& [k, v] : ab)
                    for (const auto& [r, w] : m.bracket(static_cast<int>(k), c)) {
                        if (!acc[r]) touched.push_back(static_cast<int>(r));
                        acc[r] = fp_sub(acc[r], fp_mul(v, w, p), p);
                    }
                for (const auto& [k, v] : m.bracket(a, c))
                    for (const auto& [r, w] : m.bracket(b, static_cast<int>(k))) {
                        if (!acc[r]) touched.push_back(static_cast<int>(r));
                        std::uint32_t coef = fp_mul(v, w, p);
                        acc[r] = both_odd ? fp_add(acc[r], coef, p) : fp_sub(acc[r], coef, p);
                    }
                bool bad = false;
                for (int r : touched) {
                    if (acc[r]) bad = true;
                    acc[r] = 0;
                }
                touched.clear();
                if (bad) {
                    rep.ok = false;
                    rep.message = "graded Jacobi fails at (" + m.labels[a] + "," + m.labels[b] +
                                  "," + m.labels[c] + ")";
                    return rep;
                }
            }
        }
    return rep;
}

LinearSubspace derived_subalgebra(const AlgebraModel& m) {
    LinearSubspace sub(m.dim, m.p);
    for (const auto& [ab, row] : m.structure) sub.insert(row);
    return sub;
}

LinearSubspace center(const AlgebraModel& m) {
    return centralizer(m, [&] {
        LinearSubspace full(m.dim, m.p);
        for (int a = 0; a < m.dim; ++a) full.insert({{a, 1}});
        return full;
    }());
}

LinearSubspace centralizer(const AlgebraModel& m, const LinearSubspace& subspace) {
    if (subspace.ambient_dim() != m.dim) throw UsageError("subspace ambient mismatch");
    DenseReducer rows(m.dim, m.p);
    for (const auto& v : subspace.basis_rows()) {
        // constraint per output coordinate k: sum_a x_a [e_a, v]_k = 0
        std::map<std::int64_t, std::vector<std::uint32_t>> by_k;
        for (int a = 0; a < m.dim; ++a) {
            SparseVec ea{{a, 1}};
            for (const auto& [k, c] : m.bracket_vec(ea, v)) {
                auto it = by_k.find(k);
                if (it == by_k.end())
                    it = by_k.emplace(k, std::vector<std::uint32_t>(m.dim, 0)).first;
                it->second[a] = c;
            }
        }
        for (auto& [k, row] : by_k) {
            rows.insert(row);
            if (rows.saturated()) break;
        }
        if (rows.saturated()) break;
    }
    LinearSubspace out(m.dim, m.p);
    for (auto& v : rows.nullspace()) {
        SparseVec sv;
        for (int i = 0; i < m.dim; ++i)
            if (v[i]) sv.emplace_back(i, v[i]);
        out.insert(std::move(sv));
    }
    return out;
}

std::vector<SparseVec> torus_basis(const AlgebraModel& m) {
    if (m.torus.empty()) throw UsageError("torus not attached to model");
    return m.torus;
}

std::string model_id(const AlgebraModel& m) {
    std::string out;
    if (m.kind == ModelKind::custom || !m.shape) {
        out = "custom(dim " + std::to_string(m.dim) + ")";
    } else {
        out = (m.kind == ModelKind::witt) ? "W(" : "S(";
        out += std::to_string(m.shape->m) + "," + std::to_string(m.shape->n) + ";(";
        for (std::size_t i = 0; i < m.shape->t.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(m.shape->t[i]);
        }
        out += "))";
    }
    out += "/F_" + std::to_string(m.p);
    return out;
}

}  // namespace cartansuper
