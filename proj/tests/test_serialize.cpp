#include <cstdio>
#include <fstream>
#include <sstream>

#include "cartansuper/derivations.hpp"
#include "cartansuper/serialize.hpp"
#include "corpus.hpp"
#include "json.hpp"
#include "doctest.h"

using namespace cartansuper;

namespace {

const AlgebraModel& special_p3() {
    static const AlgebraModel m = build_special_model(make_shape(2, 2, {1, 1}, 3));
    return m;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A minimal valid custom model text with one key replaced.
std::string tiny_model(const std::string& patch_key = "",
                       const nlohmann::json& patch_value = {}) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(R"({
  "format_version": 1,
  "kind": "custom",
  "p": 3,
  "dim": 2,
  "labels": ["x", "y"],
  "parity": [0, 0],
  "zdegree": [0, 0],
  "structure": []
})");
    if (!patch_key.empty()) j[patch_key] = patch_value;
    return j.dump(2) + "\n";
}

}  // namespace

TEST_CASE("serialization is byte-stable") {
    const std::string once = serialize_model(special_p3());
    const std::string twice = serialize_model(parse_model(once));
    CHECK(once == twice);
    CHECK(once.back() == '\n');

    for (const auto& model : corpus::all_models()) {
        const std::string text = serialize_model(model);
        CHECK(serialize_model(parse_model(text)) == text);
    }

    const auto W = build_witt_model(make_shape(2, 2, {1, 1}, 3));
    const std::string wt = serialize_model(W);
    CHECK(serialize_model(parse_model(wt)) == wt);
}

TEST_CASE("serialized special model matches the committed golden file") {
    const std::string golden = slurp(std::string(GOLDEN_DIR) + "/s_2211_p3.json");
    CHECK(serialize_model(special_p3()) == golden);
}

TEST_CASE("parsing preserves every stored field") {
    const auto S = special_p3();
    const auto back = parse_model(serialize_model(S));
    CHECK(back.kind == ModelKind::special);
    CHECK(back.p == S.p);
    CHECK(back.dim == S.dim);
    CHECK(back.labels == S.labels);
    CHECK(back.parity == S.parity);
    CHECK(back.zdegree == S.zdegree);
    CHECK(back.structure == S.structure);
    CHECK(back.torus == S.torus);
    CHECK(back.weights == S.weights);
    REQUIRE(back.shape != nullptr);
    CHECK(*back.shape == *S.shape);
    CHECK(back.basis_data.empty());  // provenance is not part of the format
}

TEST_CASE("a parsed model solves like the original") {
    const auto back = parse_model(serialize_model(special_p3()));
    CHECK(solve_superderivations(back, 0).dim() == 56);
    CHECK(solve_superderivations(back, 1).dim() == 54);
}

TEST_CASE("model files survive a disk round trip") {
    const std::string path = "roundtrip_model.json";
    write_model_file(corpus::sl2_plus_heis_p5(), path);
    const auto back = read_model_file(path);
    CHECK(serialize_model(back) == serialize_model(corpus::sl2_plus_heis_p5()));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_model_file("does-not-exist.json"), UsageError);
}

TEST_CASE("malformed model files are usage errors") {
    CHECK_THROWS_AS(parse_model("not json"), UsageError);
    CHECK_THROWS_AS(parse_model("[1, 2]"), UsageError);
    CHECK_THROWS_AS(parse_model(tiny_model("format_version", 2)), UsageError);
    CHECK_THROWS_AS(parse_model(tiny_model("kind", "lie")), UsageError);
    CHECK_THROWS_AS(parse_model(tiny_model("p", 4)), UsageError);
    CHECK_THROWS_AS(parse_model(tiny_model("p", 2)), UsageError);
    CHECK_THROWS_AS(parse_model(tiny_model("dim", 3)), UsageError);
    CHECK_THROWS_AS(parse_model(tiny_model("parity", {0, 2})), UsageError);
    // non-canonical pair order
    CHECK_THROWS_AS(parse_model(tiny_model("structure", {{1, 0, 0, 1}})),
                    UsageError);
    // even diagonal pair
    CHECK_THROWS_AS(parse_model(tiny_model("structure", {{0, 0, 1, 1}})),
                    UsageError);
    // coefficient outside [1, p)
    CHECK_THROWS_AS(parse_model(tiny_model("structure", {{0, 1, 0, 0}})),
                    UsageError);
    CHECK_THROWS_AS(parse_model(tiny_model("structure", {{0, 1, 0, 3}})),
                    UsageError);
    // index out of range
    CHECK_THROWS_AS(parse_model(tiny_model("structure", {{0, 5, 0, 1}})),
                    UsageError);
    // duplicate quadruple
    CHECK_THROWS_AS(
        parse_model(tiny_model("structure", {{0, 1, 0, 1}, {0, 1, 0, 2}})),
        UsageError);
}

TEST_CASE("report serializers emit stable text") {
    SolverReport rep;
    rep.model_id = "custom(dim 2)/F_3";
    rep.parity = 0;
    rep.unknown_count = 8;
    rep.constraint_rows = 12;
    rep.nullspace_dim = 2;
    rep.verdict = "proper superset";
    rep.wall_ms = 1.7;
    CHECK(solver_report_json(rep, false) ==
          "{\n"
          "  \"model_id\": \"custom(dim 2)/F_3\",\n"
          "  \"parity\": 0,\n"
          "  \"unknown_count\": 8,\n"
          "  \"constraint_rows\": 12,\n"
          "  \"nullspace_dim\": 2,\n"
          "  \"verdict\": \"proper superset\",\n"
          "  \"message\": \"ok\"\n"
          "}\n");
    CHECK(solver_report_json(rep, true).find("\"wall_ms\": 2") !=
          std::string::npos);

    StructureReport srep;
    srep.pairs_checked = 3;
    srep.triples_checked = 8;
    CHECK(structure_report_json(srep) ==
          "{\n"
          "  \"ok\": true,\n"
          "  \"pairs_checked\": 3,\n"
          "  \"triples_checked\": 8,\n"
          "  \"message\": \"ok\"\n"
          "}\n");

    IdentityReport irep;
    irep.checks = 81;
    irep.sign_convention = "none";
    CHECK(identity_report_json(irep) ==
          "{\n"
          "  \"ok\": true,\n"
          "  \"checks\": 81,\n"
          "  \"exhaustive\": true,\n"
          "  \"sign_convention\": \"none\",\n"
          "  \"message\": \"ok\"\n"
          "}\n");
    irep.exhaustive = false;
    irep.seed = 7;
    CHECK(identity_report_json(irep).find("\"seed\": 7") != std::string::npos);
}
