#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "critsets/cli_runner.hpp"
#include "critsets/error.hpp"

using namespace critsets;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "critsets_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}

TEST_SUITE("cli") {

TEST_CASE("graph sources") {
    CHECK(graph_from_source("cycle:6") == make_cycle(6));
    CHECK(graph_from_source("complete:4") == make_complete(4));
    CHECK(graph_from_source("path:3") == make_path(3));
    CHECK(graph_from_source("empty:2") == make_empty(2));
    CHECK(graph_from_source("C~") == make_complete(4));
    CHECK(graph_from_source("g6:Bw") == make_complete(3));
    CHECK(graph_from_source("pendant:complete:3") == add_pendant_to_each(make_complete(3)));
    CHECK(graph_from_source("complement:complete:3") == make_empty(3));
    CHECK(graph_from_source("latin:2").edge_count() == 4);
    CHECK(graph_from_source("sudoku:2").order() == 16);
    CHECK_THROWS_AS(graph_from_source("wheel:5"), Error);
    CHECK_THROWS_AS(graph_from_source("cycle:x"), Error);
    CHECK_THROWS_AS(graph_from_source("file:/nonexistent/graph.g6"), Error);
}

TEST_CASE("params in every format") {
    const auto text = run({"params", "cycle:5"});
    CHECK(text.code == 0);
    CHECK(text.out.find("uscs = 3") != std::string::npos);

    const auto j = run({"--format", "json", "params", "cycle:7"});
    REQUIRE(j.code == 0);
    const auto doc = json::parse(j.out);
    CHECK(doc["chi"] == 3);
    CHECK(doc["params"]["uscs"]["value"] == 4);
    CHECK(doc["params"]["oscs"]["value"] == 5);
    CHECK(doc["params"]["ulcs"]["value"] == 4);
    CHECK(doc["params"]["olcs"]["value"] == 6);
    CHECK(doc["params"]["olcs"]["set"].size() == 6);

    const auto csv = run({"params", "complete:3", "--format", "csv"});
    CHECK(csv.out.rfind("param,value,coloring,set\n", 0) == 0);
    CHECK(csv.out.find("olcs,2,0 1 2,") != std::string::npos);

    const auto k = run({"--format", "json", "params", "path:2", "-k", "3"});
    CHECK(json::parse(k.out)["params"]["uscs"]["value"] == 2);
}

TEST_CASE("table") {
    const auto r = run({"--format", "csv", "table", "5", "--nonbipartite"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "graph6,n,edges,chi,uscs,oscs,ulcs,olcs,uniquely_colorable,uniform");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    // 34 graphs on five vertices, 13 of them bipartite.
    CHECK(rows == 21);
    CHECK(run({"table", "8"}).code == exit_size_limit);
    CHECK(params_table(4, false).size() == 11);
}

TEST_CASE("atlas") {
    const auto r = run({"atlas", "4"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
}

TEST_CASE("scan") {
    const auto path = scratch("scan.g6");
    {
        std::ofstream f(path);
        f << "Bw\n\nC~\nDhc\nnot-a-graph\n";
    }
    const auto r = run({"--format", "json", "scan", path.string(), "--check", "converse", "--workers", "2"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["checked"] == 3);
    CHECK(doc["held"] == 3);
    CHECK(doc["errors"] == 1);
    CHECK(doc["records"][3]["line"] == 5);

    const auto uniform = scan_graphs({"Bw", "Dhc", "C~"}, ScanCheck::uniform);
    CHECK(uniform.held == 2);
    CHECK(uniform.records[1].holds == false);
    CHECK(uniform.counterexamples.empty());
    CHECK(run({"scan", path.string(), "--check", "bogus"}).code == exit_input_error);
}

TEST_CASE("sudoku commands") {
    const auto mnc = run({"--format", "json", "sudoku", "mnc", "2"});
    REQUIRE(mnc.code == 0);
    CHECK(json::parse(mnc.out)["min_clues"] == 4);

    const auto trials = run({"sudoku", "trials", "2", "--count", "10", "--format", "csv", "--seed", "3"});
    CHECK(trials.code == 0);
    CHECK(trials.out.rfind("trial,seed,size,determining\n", 0) == 0);
    CHECK(trials.out == run({"sudoku", "trials", "2", "--count", "10", "--format", "csv", "--seed", "3",
                             "--workers", "3"})
                           .out);
    CHECK(run({"sudoku", "trials", "5"}).code == exit_input_error);

    const auto fair = scratch("fair.txt");
    {
        std::ofstream f(fair);
        f << json::parse(mnc.out)["puzzle"].get<std::string>();
    }
    const auto cert = run({"sudoku", "certify", fair.string()});
    CHECK(cert.code == 0);
    CHECK(cert.out.find("fair") != std::string::npos);

    const auto open = scratch("open.txt");
    {
        std::ofstream f(open);
        f << "1 . . .\n. . . .\n. . . .\n. . . .\n";
    }
    const auto many = run({"--cap-extensions", "1000", "--format", "json", "sudoku", "certify", open.string()});
    CHECK(many.code == 1);
    CHECK(json::parse(many.out)["completions"] == 72);

    const auto bad = scratch("bad.txt");
    {
        std::ofstream f(bad);
        f << "1 . . .\n. 9 . .\n. . . .\n. . . .\n";
    }
    const auto parse = run({"sudoku", "certify", bad.string()});
    CHECK(parse.code == exit_input_error);
    CHECK(parse.err.find("at byte 10") != std::string::npos);

    const auto gen = run({"--format", "json", "sudoku", "gen", "3"});
    CHECK(json::parse(gen.out)["degree"] == 20);
}

TEST_CASE("reduce writes the instance and the role map") {
    const auto prefix = scratch("k2").string();
    const auto r = run({"reduce", "ulcs", "complete:2", "--out", prefix, "--verify"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("consistent") != std::string::npos);
    std::ifstream g6(prefix + ".g6");
    std::string line;
    std::getline(g6, line);
    CHECK(parse_graph6(line).order() == 9);
    std::ifstream roles_file(prefix + ".roles.json");
    const auto roles = json::parse(roles_file);
    CHECK(roles["k"] == 6);
    CHECK(roles["vertices"].size() == 9);
    CHECK(roles["vertices"][0]["role"] == "V1");
    CHECK(roles["vertices"][2]["role"] == "V2");
    CHECK(roles["vertices"][8]["role"] == "V3");

    const auto j = run({"--format", "json", "reduce", "olcs", "path:3", "--verify"});
    const auto doc = json::parse(j.out);
    CHECK(doc["verify"]["mode"] == "full");
    CHECK(doc["verify"]["exact_value"] >= doc["k"]);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == exit_input_error);
    CHECK(run({"frobnicate"}).code == exit_input_error);
    CHECK(run({"params", "C"}).code == exit_input_error);
    CHECK(run({"params", "cycle:2"}).code == exit_input_error);
    CHECK(run({"params", "cycle:21"}).code == exit_size_limit);
    CHECK(run({"--max-vertices", "4", "params", "cycle:5"}).code == exit_size_limit);
    CHECK(run({"atlas", "9"}).code == exit_size_limit);
    CHECK(run({"sudoku", "gen", "7"}).code == exit_size_limit);
    CHECK(run({"--format", "xml", "atlas", "3"}).code == exit_input_error);
    CHECK(run({"--help"}).code == exit_ok);
    const auto err = run({"params", "C"});
    CHECK(err.err.find("parse error") != std::string::npos);
}

}
