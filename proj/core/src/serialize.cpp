#include "cartansuper/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cartansuper/errors.hpp"
#include "json.hpp"

namespace cartansuper {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

std::string kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::witt: return "witt";
        case ModelKind::special: return "special";
        case ModelKind::custom: return "custom";
    }
    throw InternalError("unknown model kind");
}

ModelKind kind_from_name(const std::string& name) {
    if (name == "witt") return ModelKind::witt;
    if (name == "special") return ModelKind::special;
    if (name == "custom") return ModelKind::custom;
    throw UsageError("unknown model kind '" + name + "'");
}

json sparse_to_json(const SparseVec& v) {
    json out = json::array();
    for (const auto& [idx, c] : v) out.push_back(json::array({idx, c}));
    return out;
}

SparseVec sparse_from_json(const json& j, std::int64_t ambient, std::uint32_t p) {
    SparseVec v;
    std::int64_t last = -1;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw UsageError("sparse vector entries must be [index, coeff] pairs");
        const std::int64_t idx = e[0].get<std::int64_t>();
        const std::int64_t c = e[1].get<std::int64_t>();
        if (idx < 0 || idx >= ambient) throw UsageError("sparse index out of range");
        if (idx <= last) throw UsageError("sparse indices must be strictly increasing");
        if (c <= 0 || c >= static_cast<std::int64_t>(p))
            throw UsageError("sparse coefficient out of range [1, p)");
        last = idx;
        v.push_back({idx, static_cast<std::uint32_t>(c)});
    }
    return v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_model(const AlgebraModel& model) {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = kind_name(model.kind);
    j["p"] = model.p;
    if (model.shape) {
        j["m"] = model.shape->m;
        j["n"] = model.shape->n;
        j["t"] = model.shape->t;
    }
    j["dim"] = model.dim;
    j["labels"] = model.labels;
    j["parity"] = model.parity;
    j["zdegree"] = model.zdegree;
    json structure = json::array();
    for (const auto& [ab, vec] : model.structure) {
        for (const auto& [k, c] : vec)
            structure.push_back(json::array({ab.first, ab.second, k, c}));
    }
    j["structure"] = structure;
    if (!model.torus.empty()) {
        json torus = json::array();
        for (const auto& row : model.torus) torus.push_back(sparse_to_json(row));
        j["torus"] = torus;
    }
    if (!model.weights.empty()) j["weights"] = model.weights;
    return dump(j);
}

AlgebraModel parse_model(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) throw UsageError("model file must be a JSON object");
        if (!j.contains("format_version") ||
            j["format_version"].get<int>() != kFormatVersion)
            throw UsageError("unsupported or missing format_version");

        AlgebraModel m;
        m.kind = kind_from_name(j.at("kind").get<std::string>());
        const std::int64_t p64 = j.at("p").get<std::int64_t>();
        if (p64 < 3 || p64 > 0x7fffffff || !is_odd_prime(static_cast<std::uint32_t>(p64)))
            throw UsageError("p must be an odd prime > 2");
        m.p = static_cast<std::uint32_t>(p64);
        if (m.kind != ModelKind::custom) {
            if (!j.contains("m") || !j.contains("n") || !j.contains("t"))
                throw UsageError("witt/special model files require m, n, t");
            m.shape = make_shape(j["m"].get<int>(), j["n"].get<int>(),
                                 j["t"].get<std::vector<int>>(), m.p);
        }
        m.dim = j.at("dim").get<int>();
        if (m.dim < 0) throw UsageError("dim must be nonnegative");
        m.labels = j.at("labels").get<std::vector<std::string>>();
        m.parity = j.at("parity").get<std::vector<int>>();
        m.zdegree = j.at("zdegree").get<std::vector<std::int64_t>>();
        if (static_cast<int>(m.labels.size()) != m.dim ||
            static_cast<int>(m.parity.size()) != m.dim ||
            static_cast<int>(m.zdegree.size()) != m.dim)
            throw UsageError("labels/parity/zdegree length must equal dim");
        for (int bit : m.parity) {
            if (bit != 0 && bit != 1) throw UsageError("parity entries must be 0 or 1");
        }
        for (const auto& quad : j.at("structure")) {
            if (!quad.is_array() || quad.size() != 4)
                throw UsageError("structure entries must be [a, b, k, c] quadruples");
            const std::int64_t a = quad[0].get<std::int64_t>();
            const std::int64_t b = quad[1].get<std::int64_t>();
            const std::int64_t k = quad[2].get<std::int64_t>();
            const std::int64_t c = quad[3].get<std::int64_t>();
            if (a < 0 || a >= m.dim || b < 0 || b >= m.dim || k < 0 || k >= m.dim)
                throw UsageError("structure index out of range");
            if (!(a < b || (a == b && m.parity[a] == 1)))
                throw UsageError(
                    "structure rows must use canonical pairs: a < b, or a == b odd");
            if (c <= 0 || c >= static_cast<std::int64_t>(m.p))
                throw UsageError("structure coefficient out of range [1, p)");
            m.structure[{static_cast<int>(a), static_cast<int>(b)}].push_back(
                {k, static_cast<std::uint32_t>(c)});
        }
        for (auto& [ab, vec] : m.structure) {
            (void)ab;
            SparseVec sorted = vec;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 1; i < sorted.size(); ++i) {
                if (sorted[i].first == sorted[i - 1].first)
                    throw UsageError("duplicate structure quadruple");
            }
            vec = std::move(sorted);
        }
        if (j.contains("torus")) {
            for (const auto& row : j["torus"])
                m.torus.push_back(sparse_from_json(row, m.dim, m.p));
        }
        if (j.contains("weights")) {
            m.weights = j["weights"].get<std::vector<std::vector<std::uint32_t>>>();
            if (static_cast<int>(m.weights.size()) != m.dim)
                throw UsageError("weight table length must equal dim");
            for (const auto& row : m.weights) {
                for (std::uint32_t w : row) {
                    if (w >= m.p) throw UsageError("weight entries must lie in [0, p)");
                }
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed model file: ") + e.what());
    }
}

void write_model_file(const AlgebraModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << serialize_model(model);
    if (!out) throw UsageError("failed writing '" + path + "'");
}

AlgebraModel read_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

namespace {

json solver_report_to_json(const SolverReport& report, bool with_wall_time) {
    json j;
    j["model_id"] = report.model_id;
    j["parity"] = report.parity;
    j["unknown_count"] = report.unknown_count;
    j["constraint_rows"] = report.constraint_rows;
    j["nullspace_dim"] = report.nullspace_dim;
    j["verdict"] = report.verdict;
    if (report.lambda) j["lambda"] = *report.lambda;
    j["message"] = report.message;
    if (with_wall_time)
        j["wall_ms"] = static_cast<std::int64_t>(std::llround(report.wall_ms));
    return j;
}

json identity_report_to_json(const IdentityReport& report) {
    json j;
    j["ok"] = report.ok;
    j["checks"] = report.checks;
    j["exhaustive"] = report.exhaustive;
    if (!report.exhaustive) j["seed"] = report.seed;
    j["sign_convention"] = report.sign_convention;
    j["message"] = report.message;
    return j;
}

}  // namespace

std::string solver_report_json(const SolverReport& report, bool with_wall_time) {
    return dump(solver_report_to_json(report, with_wall_time));
}

std::string structure_report_json(const StructureReport& report) {
    json j;
    j["ok"] = report.ok;
    j["pairs_checked"] = report.pairs_checked;
    j["triples_checked"] = report.triples_checked;
    j["message"] = report.message;
    return dump(j);
}

std::string identity_report_json(const IdentityReport& report) {
    return dump(identity_report_to_json(report));
}

std::string theorem_report_json(const TheoremReport& report, bool with_wall_time) {
    json j;
    j["summary"] = solver_report_to_json(report.summary, with_wall_time);
    if (report.bder0) j["bder_parity0"] = solver_report_to_json(*report.bder0, with_wall_time);
    if (report.bder1) j["bder_parity1"] = solver_report_to_json(*report.bder1, with_wall_time);
    if (report.inner) {
        json ji;
        ji["verdict"] = report.inner->verdict == InnerVerdict::equal ? "equal"
                        : report.inner->verdict == InnerVerdict::proper_superset
                            ? "proper superset"
                            : "disjoint";
        if (report.inner->lambda) ji["lambda"] = *report.inner->lambda;
        ji["message"] = report.inner->message;
        j["inner_comparison"] = ji;
    }
    json ids = json::object();
    for (const auto& [name, r] : report.identities)
        ids[name] = identity_report_to_json(r);
    j["identity_checks"] = ids;
    return dump(j);
}

}  // namespace cartansuper
