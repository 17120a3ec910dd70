// Command-line front end: build/load models, inspect brackets and weights,
// and run the structure checks and solvers with a stable exit-code contract:
//   0 success, 2 invalid shape/usage, 3 structure violation, 4 missing torus,
//   5 theorem not applicable, 6 internal consistency error.
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cartansuper/bider.hpp"
#include "cartansuper/derivations.hpp"
#include "cartansuper/serialize.hpp"
#include "json.hpp"

namespace {

using namespace cartansuper;
using json = nlohmann::ordered_json;

struct ExitWith {
    int code;
    std::string message;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int oracle_cap() { return 8; }

json sparse_json(const SparseVec& v, const std::vector<std::string>& labels) {
    json out = json::array();
    for (const auto& [k, c] : v)
        out.push_back(json::array({k, c, labels[static_cast<std::size_t>(k)]}));
    return out;
}

void cmd_build(const std::string& type, int m, int n, const std::vector<int>& t,
               std::int64_t p, const std::string& out_path) {
    if (p < 3 || p > 0x7fffffff || !is_odd_prime(static_cast<std::uint32_t>(p)))
        throw UsageError("p>2 required and p must be prime");
    const ShapePtr shape = make_shape(m, n, t, static_cast<std::uint32_t>(p));
    const std::int64_t guard = dimension_guard_from_env();
    const AlgebraModel model = type == "witt" ? build_witt_model(shape, guard)
                                              : build_special_model(shape, guard);
    const StructureReport rep = verify_structure(model);
    std::cout << structure_report_json(rep);
    if (!rep.ok) throw ExitWith{3, "structure verification failed: " + rep.message};
    write_model_file(model, out_path);
}

void cmd_info(const AlgebraModel& model) {
    json j;
    j["model_id"] = model_id(model);
    j["p"] = model.p;
    j["dim"] = model.dim;
    int even = 0;
    for (int bit : model.parity) even += bit == 0 ? 1 : 0;
    j["dim_even"] = even;
    j["dim_odd"] = model.dim - even;
    std::map<std::int64_t, int> by_degree;
    for (std::int64_t z : model.zdegree) ++by_degree[z];
    json degs = json::object();
    for (const auto& [z, cnt] : by_degree) degs[std::to_string(z)] = cnt;
    j["zdegree_dims"] = degs;
    std::int64_t entries = 0;
    for (const auto& [ab, vec] : model.structure) {
        (void)ab;
        entries += static_cast<std::int64_t>(vec.size());
    }
    j["structure_entries"] = entries;
    j["torus_generators"] = model.torus.size();
    j["has_weights"] = !model.weights.empty();
    emit(j);
}

void cmd_bracket(const AlgebraModel& model, int a, int b) {
    if (a < 0 || a >= model.dim || b < 0 || b >= model.dim)
        throw UsageError("basis indices must lie in [0, dim)");
    json j;
    j["model_id"] = model_id(model);
    j["a"] = json::array({a, model.labels[static_cast<std::size_t>(a)]});
    j["b"] = json::array({b, model.labels[static_cast<std::size_t>(b)]});
    j["bracket"] = sparse_json(model.bracket(a, b), model.labels);
    emit(j);
}

void cmd_weights(const AlgebraModel& model, const std::string& format) {
    if (model.torus.empty() || model.weights.empty())
        throw ExitWith{4, "model has no attached torus / weight table"};
    const std::size_t nw = model.weights.front().size();
    std::map<std::vector<std::uint32_t>, int> dims;
    for (const auto& row : model.weights) ++dims[row];
    if (format == "csv") {
        std::string header = "label,parity,zdegree";
        for (std::size_t q = 0; q < nw; ++q) header += ",w" + std::to_string(q);
        std::cout << header << "\n";
        for (int a = 0; a < model.dim; ++a) {
            std::cout << model.labels[static_cast<std::size_t>(a)] << ","
                      << model.parity[static_cast<std::size_t>(a)] << ","
                      << model.zdegree[static_cast<std::size_t>(a)];
            for (std::uint32_t w : model.weights[static_cast<std::size_t>(a)])
                std::cout << "," << w;
            std::cout << "\n";
        }
        for (const auto& [w, dim] : dims) {
            std::cout << "# weight";
            for (std::uint32_t x : w) std::cout << " " << x;
            std::cout << ": dim " << dim << "\n";
        }
        return;
    }
    json j;
    j["model_id"] = model_id(model);
    json rows = json::array();
    for (int a = 0; a < model.dim; ++a) {
        json row;
        row["label"] = model.labels[static_cast<std::size_t>(a)];
        row["parity"] = model.parity[static_cast<std::size_t>(a)];
        row["zdegree"] = model.zdegree[static_cast<std::size_t>(a)];
        row["weight"] = model.weights[static_cast<std::size_t>(a)];
        rows.push_back(row);
    }
    j["rows"] = rows;
    json summary = json::array();
    for (const auto& [w, dim] : dims)
        summary.push_back(json::object({{"weight", w}, {"dim", dim}}));
    j["weight_space_dims"] = summary;
    emit(j);
}

void cmd_check_structure(const AlgebraModel& model) {
    const StructureReport rep = verify_structure(model);
    std::cout << structure_report_json(rep);
    if (!rep.ok) throw ExitWith{3, "structure verification failed: " + rep.message};
}

void cmd_solve_der(const AlgebraModel& model, int parity, bool naive) {
    const DerivationSpace der = naive ? solve_superderivations_naive(model, parity)
                                      : solve_superderivations(model, parity);
    json j;
    j["model_id"] = model_id(model);
    j["parity"] = parity;
    j["dim_der"] = der.dim();
    j["solver"] = naive ? "naive" : "blocked";
    emit(j);
}

void cmd_solve_bider(const AlgebraModel& model, int parity, bool oracle,
                     bool wall_time) {
    BiderResult res = solve_super_biderivations(model, parity);
    if (parity == 0) {
        const InnerComparison cmp = compare_with_inner(res, model);
        res.report.verdict = cmp.verdict == InnerVerdict::equal ? "equal"
                             : cmp.verdict == InnerVerdict::proper_superset
                                 ? "proper superset"
                                 : "disjoint";
        res.report.lambda = cmp.lambda;
        res.report.message = cmp.message;
    }
    json j = json::parse(solver_report_json(res.report, wall_time));
    if (oracle) {
        if (model.dim > oracle_cap())
            throw UsageError("--oracle requires dim <= " +
                             std::to_string(oracle_cap()));
        const BiderResult brute = solve_super_biderivations_bruteforce(model, parity);
        if (!res.space.equals(brute.space))
            throw InternalError(
                "two-stage and brute-force biderivation nullspaces differ");
        j["oracle"] = "match";
    }
    emit(j);
}

void cmd_verify_theorem(const AlgebraModel& model, bool oracle, bool wall_time) {
    const TheoremReport rep = verify_theorem_full(model);
    json j = json::parse(theorem_report_json(rep, wall_time));
    if (oracle) {
        if (model.dim > oracle_cap())
            throw UsageError("--oracle requires dim <= " +
                             std::to_string(oracle_cap()));
        for (int parity : {0, 1}) {
            const BiderResult two = solve_super_biderivations(model, parity);
            const BiderResult brute =
                solve_super_biderivations_bruteforce(model, parity);
            if (!two.space.equals(brute.space))
                throw InternalError(
                    "two-stage and brute-force biderivation nullspaces differ");
        }
        j["oracle"] = "match";
    }
    emit(j);
    const std::string& verdict = rep.summary.verdict;
    if (verdict == "THEOREM VERIFIED") return;
    if (verdict == "NOT APPLICABLE") throw ExitWith{5, rep.summary.message};
    throw ExitWith{6, rep.summary.message};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructor and solver for the Cartan-type Lie "
                 "superalgebras W(m,n;t) and S(m,n;t) over F_p"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Build a model and write it to a file");
    std::string type, out_path;
    int m = 0, n = 0;
    std::vector<int> t;
    std::int64_t p = 0;
    build->add_option("--type", type, "witt or special")
        ->required()
        ->check(CLI::IsMember({"witt", "special"}));
    build->add_option("--m", m, "number of even variables")->required();
    build->add_option("--n", n, "number of odd variables")->required();
    build->add_option("--t", t, "divided-power heights, comma separated")
        ->required()
        ->delimiter(',');
    build->add_option("--p", p, "odd prime characteristic")->required();
    build->add_option("--out", out_path, "output model file")->required();

    const auto add_model_arg = [](CLI::App* cmd, std::string& path) {
        cmd->add_option("model", path, "model file path")->required();
    };

    auto* info = app.add_subcommand("info", "Summarize a model file");
    std::string info_path;
    add_model_arg(info, info_path);

    auto* bracket = app.add_subcommand("bracket", "Evaluate [e_a, e_b]");
    std::string bracket_path;
    int arg_a = 0, arg_b = 0;
    add_model_arg(bracket, bracket_path);
    bracket->add_option("--a", arg_a, "first basis index")->required();
    bracket->add_option("--b", arg_b, "second basis index")->required();

    auto* weights = app.add_subcommand("weights", "Torus weight table");
    std::string weights_path, weights_format = "json";
    add_model_arg(weights, weights_path);
    weights->add_option("--format", weights_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* check = app.add_subcommand("check-structure",
                                     "Exhaustive skew-symmetry and Jacobi check");
    std::string check_path;
    add_model_arg(check, check_path);

    auto* solve_der = app.add_subcommand("solve-der", "Solve the superderivation system");
    std::string der_path;
    int der_parity = 0;
    bool der_naive = false;
    add_model_arg(solve_der, der_path);
    solve_der->add_option("--parity", der_parity, "0 or 1")
        ->required()
        ->check(CLI::Range(0, 1));
    solve_der->add_flag("--naive", der_naive, "single unblocked all-pairs system");

    auto* solve_bider =
        app.add_subcommand("solve-bider", "Solve the skew super-biderivation system");
    std::string bider_path;
    int bider_parity = 0;
    bool bider_oracle = false, bider_no_wall = false;
    add_model_arg(solve_bider, bider_path);
    solve_bider->add_option("--parity", bider_parity, "0 or 1")
        ->required()
        ->check(CLI::Range(0, 1));
    solve_bider->add_flag("--oracle", bider_oracle,
                          "cross-check against the brute-force d^3 solver");
    solve_bider->add_flag("--no-wall-time", bider_no_wall,
                          "omit wall-time fields (golden-comparable output)");

    auto* verify = app.add_subcommand("verify-theorem",
                                      "Verify BDer = IBDer on the given model");
    std::string verify_path;
    bool verify_oracle = false, verify_no_wall = false;
    add_model_arg(verify, verify_path);
    verify->add_flag("--oracle", verify_oracle,
                     "cross-check against the brute-force d^3 solver");
    verify->add_flag("--no-wall-time", verify_no_wall,
                     "omit wall-time fields (golden-comparable output)");

    try {
        app.parse(argc, argv);
        if (build->parsed()) {
            cmd_build(type, m, n, t, p, out_path);
        } else if (info->parsed()) {
            cmd_info(read_model_file(info_path));
        } else if (bracket->parsed()) {
            cmd_bracket(read_model_file(bracket_path), arg_a, arg_b);
        } else if (weights->parsed()) {
            cmd_weights(read_model_file(weights_path), weights_format);
        } else if (check->parsed()) {
            cmd_check_structure(read_model_file(check_path));
        } else if (solve_der->parsed()) {
            cmd_solve_der(read_model_file(der_path), der_parity, der_naive);
        } else if (solve_bider->parsed()) {
            cmd_solve_bider(read_model_file(bider_path), bider_parity, bider_oracle,
                            !bider_no_wall);
        } else if (verify->parsed()) {
            cmd_verify_theorem(read_model_file(verify_path), verify_oracle,
                               !verify_no_wall);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ExitWith& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 6;
    }
}
