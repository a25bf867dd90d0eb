#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "divrel/documents.hpp"
#include "test_util.hpp"

#ifndef DIVREL_CLI_PATH
#error "DIVREL_CLI_PATH must point at the built executable"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string scratch_path(const std::string& name) {
    return std::string(DIVREL_SCRATCH_DIR) + "/" + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

RunResult run_cli(const std::string& args) {
    std::string out_path = scratch_path("out.txt");
    std::string command = std::string(DIVREL_CLI_PATH) + " " + args + " > " + out_path + " 2> " +
                          scratch_path("err.txt");
    int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.out = buffer.str();
    return result;
}

} // namespace

TEST_CASE("relations subcommand lists the minimal relations") {
    write_file(scratch_path("ideal.json"), R"({
  "variables": ["a","b","c","d","e","f","g","h"],
  "generators": ["bcg","abg","cdf","adgh","bef"]
})");
    RunResult result = run_cli("relations " + scratch_path("ideal.json") + " --mingen");
    REQUIRE(result.exit_code == 0);
    divrel::Json doc = divrel::parse_document(result.out);
    CHECK(doc["q"] == 5);
    bool has_12_3 = false, has_2_45 = false;
    for (const auto& entry : doc["relations"]) {
        if (entry == divrel::Json::array({1, {2, 3}}))
            has_12_3 = true;
        if (entry == divrel::Json::array({2, {4, 5}}))
            has_2_45 = true;
    }
    CHECK(has_12_3);
    CHECK(has_2_45);
    CHECK(doc.contains("minimal_generating"));

    // Empty relation sets serialize as empty lists.
    write_file(scratch_path("xy.json"), R"({"variables":["x","y"],"generators":[[1,0],[0,1]]})");
    RunResult empty = run_cli("relations " + scratch_path("xy.json"));
    REQUIRE(empty.exit_code == 0);
    CHECK(divrel::parse_document(empty.out)["relations"].empty());

    // Three pairwise relations on the triangle.
    write_file(scratch_path("tri.json"),
               R"({"variables":["x","y","z"],"generators":["xy","yz","xz"]})");
    RunResult tri = run_cli("relations " + scratch_path("tri.json"));
    CHECK(divrel::parse_document(tri.out)["relations"].size() == 3);
}

TEST_CASE("closure subcommand minimizes the composition closure") {
    write_file(scratch_path("chain.json"), R"({
  "q": 6,
  "relations": [[1,[2,3]],[2,[4,5]],[5,[4,6]]]
})");
    RunResult result = run_cli("closure " + scratch_path("chain.json"));
    REQUIRE(result.exit_code == 0);
    divrel::Json doc = divrel::parse_document(result.out);
    CHECK(doc["relations"].size() == 6);

    RunResult naive = run_cli("closure " + scratch_path("chain.json") + " --naive");
    CHECK(divrel::parse_document(naive.out) == doc);

    RunResult member = run_cli("closure " + scratch_path("chain.json") + " --member 1 3,4,6");
    REQUIRE(member.exit_code == 0);
    CHECK(divrel::parse_document(member.out)["member"] == true);

    RunResult non_member =
        run_cli("closure " + scratch_path("chain.json") + " --member 4 1,2");
    CHECK(divrel::parse_document(non_member.out)["member"] == false);

    write_file(scratch_path("empty.json"), R"({"q": 3, "relations": []})");
    RunResult empty = run_cli("closure " + scratch_path("empty.json"));
    CHECK(divrel::parse_document(empty.out)["relations"].empty());
}

TEST_CASE("extremal subcommand emits the ideal document") {
    write_file(scratch_path("d.json"), R"({"q": 4, "relations": [[1,[2,3]]]})");
    RunResult result = run_cli("extremal " + scratch_path("d.json"));
    REQUIRE(result.exit_code == 0);
    divrel::GeneratorList gens = divrel::ideal_from_json(divrel::parse_document(result.out));
    REQUIRE(gens.size() == 4);
    CHECK(gens.at(1).str() == "y_12*y_13*y_123*y_124*y_134*y_1234");
    CHECK(gens.vars->size() == 13);

    write_file(scratch_path("d2.json"), R"({"q": 2, "relations": []})");
    RunResult e2 = run_cli("extremal " + scratch_path("d2.json"));
    divrel::GeneratorList small = divrel::ideal_from_json(divrel::parse_document(e2.out));
    CHECK(small.at(1).str() == "y_1*y_12");
    CHECK(small.at(2).str() == "y_2*y_12");

    write_file(scratch_path("chain.json"), R"({
  "q": 6,
  "relations": [[1,[2,3]],[2,[4,5]],[5,[4,6]]]
})");
    RunResult chain = run_cli("extremal " + scratch_path("chain.json"));
    CHECK(divrel::ideal_from_json(divrel::parse_document(chain.out)).size() == 6);
}

TEST_CASE("decide subcommand produces verified certificates") {
    write_file(scratch_path("fig.json"), R"({
  "q": 5,
  "relations": [[1,[2,3]],[3,[1,5]],[3,[4,5]]]
})");
    RunResult not_in = run_cli("decide " + scratch_path("fig.json") + " 1 2,5");
    REQUIRE(not_in.exit_code == 0);
    divrel::Json doc = divrel::parse_document(not_in.out);
    CHECK(doc["member"] == false);
    CHECK(doc["certificate"]["kind"] == "witness");
    CHECK(doc["certificate"]["set"] == divrel::Json::array({1, 3, 4}));
    CHECK(doc["verified"] == true);

    RunResult trivial = run_cli("decide " + scratch_path("fig.json") + " 2 2,5");
    CHECK(divrel::parse_document(trivial.out)["certificate"]["kind"] == "trivial");

    write_file(scratch_path("chain.json"), R"({
  "q": 6,
  "relations": [[1,[2,3]],[2,[4,5]],[5,[4,6]]]
})");
    RunResult derived = run_cli("decide " + scratch_path("chain.json") + " 1 3,4,5");
    divrel::Json chain_doc = divrel::parse_document(derived.out);
    CHECK(chain_doc["member"] == true);
    CHECK(chain_doc["certificate"]["kind"] == "derivation");
    CHECK(chain_doc["verified"] == true);
}

TEST_CASE("betti subcommand reports totals and multidegrees") {
    write_file(scratch_path("d.json"), R"({"q": 4, "relations": [[1,[2,3]]]})");
    RunResult extremal = run_cli("extremal " + scratch_path("d.json"));
    write_file(scratch_path("ed.json"), extremal.out);

    RunResult r1 = run_cli("betti " + scratch_path("ed.json"));
    REQUIRE(r1.exit_code == 0);
    divrel::Json doc = divrel::parse_document(r1.out);
    CHECK(doc["total"] == divrel::Json::array({4, 5, 2}));
    CHECK(doc["field"] == "rational");

    RunResult r2 = run_cli("betti " + scratch_path("ed.json") + " --power 2 --field 2");
    divrel::Json squares = divrel::parse_document(r2.out);
    CHECK(squares["total"] == divrel::Json::array({10, 21, 15, 3}));
    CHECK(squares["field"] == "gf(2)");

    write_file(scratch_path("single.json"), R"({"variables":["x","y"],"generators":["xy"]})");
    RunResult single = run_cli("betti " + scratch_path("single.json"));
    CHECK(divrel::parse_document(single.out)["total"] == divrel::Json::array({1}));
}

TEST_CASE("bounds subcommand prints the comparison table") {
    write_file(scratch_path("d.json"), R"({"q": 4, "relations": [[1,[2,3]]]})");
    RunResult bare = run_cli("bounds --relations " + scratch_path("d.json"));
    REQUIRE(bare.exit_code == 0);
    divrel::Json doc = divrel::parse_document(bare.out);
    CHECK(doc["actual"].is_null());
    CHECK(doc["extremal_d"] == divrel::Json::array({4, 5, 2}));
    CHECK(doc["extremal_q"] == divrel::Json::array({4, 6, 4, 1}));
    CHECK(doc["taylor"] == divrel::Json::array({"4", "6", "4", "1"}));

    RunResult squares = run_cli("bounds --relations " + scratch_path("d.json") + " --power 2");
    divrel::Json sq = divrel::parse_document(squares.out);
    CHECK(sq["extremal_d"] == divrel::Json::array({10, 21, 15, 3}));
    CHECK(sq["extremal_q"] == divrel::Json::array({10, 27, 32, 19, 6, 1}));
    CHECK(sq["taylor"].size() == 10);

    // With an ideal: the four-cycle against its full relation set.
    write_file(scratch_path("cycle.json"),
               R"({"variables":["w","x","y","z"],"generators":["xy","yz","zw","wx"]})");
    RunResult rels = run_cli("relations " + scratch_path("cycle.json") + " --mingen");
    divrel::Json rel_doc = divrel::parse_document(rels.out);
    divrel::Json mingen_doc;
    mingen_doc["q"] = rel_doc["q"];
    mingen_doc["relations"] = rel_doc["minimal_generating"];
    write_file(scratch_path("cycle_rels.json"), divrel::dump_document(mingen_doc));
    RunResult both = run_cli("bounds --relations " + scratch_path("cycle_rels.json") +
                             " --ideal " + scratch_path("cycle.json"));
    REQUIRE(both.exit_code == 0);
    divrel::Json table = divrel::parse_document(both.out);
    CHECK(table["pass"] == true);
    CHECK(table["actual"] == table["extremal_d"]);

    // Degenerate universe: every column is (1).
    write_file(scratch_path("one.json"), R"({"q": 1, "relations": []})");
    RunResult tiny = run_cli("bounds --relations " + scratch_path("one.json") + " --power 3");
    divrel::Json tiny_doc = divrel::parse_document(tiny.out);
    CHECK(tiny_doc["extremal_d"] == divrel::Json::array({1}));
    CHECK(tiny_doc["extremal_q"] == divrel::Json::array({1}));
    CHECK(tiny_doc["taylor"] == divrel::Json::array({"1"}));
}

TEST_CASE("verify subcommand runs suites and reports failures precisely") {
    write_file(scratch_path("d.json"), R"({"q": 4, "relations": [[1,[2,3]]]})");
    RunResult extremal = run_cli("extremal " + scratch_path("d.json"));
    write_file(scratch_path("ed.json"), extremal.out);
    RunResult ok = run_cli("verify --relations " + scratch_path("d.json") + " --ideal " +
                           scratch_path("ed.json") + " --seed 7");
    REQUIRE(ok.exit_code == 0);
    CHECK(divrel::parse_document(ok.out)["pass"] == true);

    // An ideal that does not satisfy the relations is an input error
    // naming the failing relation.
    write_file(scratch_path("skew.json"),
               R"({"variables":["x","y","z"],"generators":["x","y","z"]})");
    write_file(scratch_path("tri_rels.json"), R"({"q": 3, "relations": [[1,[2,3]]]})");
    RunResult skew = run_cli("verify --relations " + scratch_path("tri_rels.json") +
                             " --ideal " + scratch_path("skew.json") + " --suite psi");
    CHECK(skew.exit_code == 2);

    RunResult corpus = run_cli("verify --random 3 --seed 11");
    CHECK(corpus.exit_code == 0);
}

TEST_CASE("documents round-trip byte for byte") {
    divrel::GeneratorList gens = testutil::running_ideal();
    divrel::Json doc = divrel::ideal_to_json(gens);
    std::string text = divrel::dump_document(doc);
    divrel::GeneratorList back = divrel::ideal_from_json(divrel::parse_document(text));
    CHECK(divrel::dump_document(divrel::ideal_to_json(back)) == text);

    divrel::RelationSet set = testutil::chain_rels();
    std::string rel_text = divrel::dump_document(divrel::relations_to_json(set));
    CHECK(divrel::dump_document(divrel::relations_to_json(
              divrel::relations_from_json(divrel::parse_document(rel_text)))) == rel_text);
}

TEST_CASE("format flag switches ideal output to monomial strings") {
    write_file(scratch_path("d.json"), R"({"q": 4, "relations": [[1,[2,3]]]})");
    RunResult strings = run_cli("extremal " + scratch_path("d.json") + " --format monomials");
    REQUIRE(strings.exit_code == 0);
    divrel::Json doc = divrel::parse_document(strings.out);
    CHECK(doc["generators"][0] == "y_12*y_13*y_123*y_124*y_134*y_1234");
    // String documents parse back to the same ideal.
    divrel::GeneratorList round = divrel::ideal_from_json(doc);
    CHECK(round.at(1).str() == "y_12*y_13*y_123*y_124*y_134*y_1234");
}

TEST_CASE("relations --naive agrees with the transversal route") {
    write_file(scratch_path("ideal.json"), R"({
  "variables": ["a","b","c","d","e","f","g","h"],
  "generators": ["bcg","abg","cdf","adgh","bef"]
})");
    RunResult fast = run_cli("relations " + scratch_path("ideal.json"));
    RunResult naive = run_cli("relations " + scratch_path("ideal.json") + " --naive");
    REQUIRE(naive.exit_code == 0);
    CHECK(fast.out == naive.out);
}

TEST_CASE("decide --tree includes the vertex list") {
    write_file(scratch_path("fig.json"), R"({
  "q": 5,
  "relations": [[1,[2,3]],[3,[1,5]],[3,[4,5]]]
})");
    RunResult result = run_cli("decide " + scratch_path("fig.json") + " 1 2,5 --tree");
    REQUIRE(result.exit_code == 0);
    divrel::Json doc = divrel::parse_document(result.out);
    REQUIRE(doc.contains("tree"));
    CHECK(doc["tree"].size() == 5);
    CHECK(doc["tree"][0]["height"] == 0);
    CHECK(doc["tree"][0]["extremely_bad"] == true);
    CHECK(doc["tree_text"].get<std::string>().find("rel 2") != std::string::npos);
}

TEST_CASE("input and cap errors use distinct exit codes") {
    write_file(scratch_path("broken.json"), "{not json");
    CHECK(run_cli("relations " + scratch_path("broken.json")).exit_code == 2);

    write_file(scratch_path("missing.json"), R"({"q": 2})");
    CHECK(run_cli("closure " + scratch_path("missing.json")).exit_code == 2);

    write_file(scratch_path("big.json"), R"({"q": 22, "relations": []})");
    CHECK(run_cli("extremal " + scratch_path("big.json")).exit_code == 3);

    CHECK(run_cli("relations " + scratch_path("does_not_exist.json")).exit_code == 2);
}
