#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <sstream>

using namespace polyolab;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

// Line of a Pxy table for the cell x^k y^n.
std::string pxy_cell(const std::string& table, int k, int n) {
    std::string prefix = "x^" + std::to_string(k) + " y^" + std::to_string(n) + ": ";
    for (const auto& l : lines(table))
        if (l.rfind(prefix, 0) == 0) return l.substr(prefix.size());
    return "<missing>";
}

}  // namespace

TEST_CASE("enum") {
    auto r = call({"enum", "polyominoes", "2", "2"});
    CHECK(r.code == cli::ok);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls.back() == "count=3");

    r = call({"enum", "labelled", "2", "2", "--format", "json"});
    CHECK(r.code == cli::ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["records"].size() == 4);
    CHECK(j["count"] == 4);

    r = call({"enum", "paths", "0", "3"});
    CHECK(lines(r.out) == std::vector<std::string>{"NNN", "count=1"});

    r = call({"enum", "polyominoes", "3", "3", "--limit", "5"});
    ls = lines(r.out);
    CHECK(ls.size() == 6);
    CHECK(ls.back() == "count=20");

    CHECK(call({"enum", "doubly", "2", "2"}).out.find("count=") != std::string::npos);
    CHECK(call({"enum", "star", "2", "2"}).code == cli::ok);

    // deterministic
    CHECK(call({"enum", "doubly", "3", "2", "--format", "json"}).out ==
          call({"enum", "doubly", "3", "2", "--format", "json", "--threads", "2"}).out);
}

TEST_CASE("enum errors") {
    CHECK(call({"enum", "polyominoes", "0", "2"}).code == cli::usage);
    CHECK(call({"enum", "paths", "-1", "2"}).code == cli::usage);
    CHECK(call({"enum", "widgets", "2", "2"}).code == cli::usage);
    CHECK(call({"enum", "polyominoes", "2"}).code == cli::usage);
    CHECK(call({}).code == cli::usage);
    auto r = call({"enum", "labelled", "7", "3"});
    CHECK(r.code == cli::cap);
    CHECK(r.err.find("cap") != std::string::npos);
    CHECK(call({"--cap-brute", "7", "enum", "paths", "7", "1"}).code == cli::ok);
}

TEST_CASE("stat") {
    CHECK(call({"stat", "area", "yyxxxyyxxyxxxyxx"}).out == "41\n");
    CHECK(call({"stat", "aword", "NNNEENEEE|ENEENENEN"}).out == "0~,1,1,1~,2,2~,1~,2,1~\n");
    CHECK(call({"stat", "motzkin", "NNNEENEEE|ENEENENEN"}).out == "d r d b d~ d d~ b d~\n");
    CHECK(call({"stat", "gamma", "NNEE|EENN"}).out == "(2)\n");
    CHECK(call({"stat", "area", "NNEE|EENN"}).out == "1\n");
    CHECK(call({"stat", "area", "NNEE|ENEN"}).out == "0\n");
    CHECK(call({"stat", "dinv", "NE|EN"}).code == cli::ok);

    auto r = call({"stat", "area", "NNzE"});
    CHECK(r.code == cli::usage);
    CHECK(r.err.find("position 2") != std::string::npos);
    CHECK(call({"stat", "aword", "NNEE"}).code == cli::usage);
    CHECK(call({"stat", "area", "NNEE|NNEE"}).code == cli::usage);

    auto j = nlohmann::json::parse(call({"--format", "json", "stat", "area", "NNEE|EENN"}).out);
    CHECK(j["value"] == 1);
}

TEST_CASE("frob") {
    CHECK(call({"frob", "L", "3", "2", "--basis", "h"}).out == "3*h[1,1] + 3*h[2]\n");
    CHECK(call({"frob", "L", "1", "4", "--basis", "h"}).out == "h[4]\n");
    CHECK(call({"frob", "L", "3", "2", "--basis", "h", "--brute"}).out == "3*h[1,1] + 3*h[2]\n");
    CHECK(call({"frob", "L2", "3", "2", "--basis", "s"}).out ==
          "sY[2,1]*sZ[1,1] + 3*sY[2,1]*sZ[2] + 3*sY[3]*sZ[1,1] + 6*sY[3]*sZ[2]\n");
    CHECK(call({"frob", "paths", "2", "2", "--graded"}).code == cli::ok);
    CHECK(call({"frob", "paths", "2", "2"}).out == call({"frob", "paths", "2", "2", "--brute"}).out);
    for (const char* w : {"Lq", "L2star", "ribbon", "srho", "littlewood"})
        CHECK_MESSAGE(call({"frob", w, "2", "3"}).code == cli::ok, w);
    CHECK(call({"frob", "littlewood", "0", "3"}).out == "s[3]\n");

    CHECK(call({"frob", "L2", "7", "2"}).code == cli::cap);
    CHECK(call({"frob", "L", "3", "2", "--basis", "q"}).code == cli::usage);
    CHECK(call({"frob", "nope", "3", "2"}).code == cli::usage);
    CHECK(call({"frob", "L", "0", "2"}).code == cli::usage);
}

TEST_CASE("verify") {
    auto r = call({"verify", "eqFrob", "--max-k", "4", "--max-n", "4", "--format", "json", "--no-timing"});
    CHECK(r.code == cli::ok);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["records"].size() == 16);
    for (const auto& rec : j["records"]) {
        CHECK(rec["equal"] == true);
        CHECK(rec["status"] == "theorem");
        CHECK(rec["time_ms"] == 0);
    }
    CHECK(r.out == call({"verify", "eqFrob", "--max-k", "4", "--max-n", "4", "--format", "json", "--no-timing",
                         "--threads", "1"})
                       .out);

    r = call({"verify", "michele", "--max-n", "4"});
    CHECK(r.code == cli::ok);
    CHECK(r.out.find("conjecture") != std::string::npos);
    CHECK(r.out.find("DIFFERENT") == std::string::npos);

    r = call({"verify", "qangela", "--max-n", "3", "--max-k", "3", "--mode", "evaluation", "--format", "json"});
    CHECK(r.code == cli::ok);
    CHECK(nlohmann::json::parse(r.out)["mode"] == "evaluation");

    CHECK(call({"verify", "noSuchIdentity"}).code == cli::usage);
    CHECK(call({"verify"}).code == cli::usage);
    CHECK(call({"verify", "eqFrob", "--max-k", "9"}).code == cli::cap);
    r = call({"verify", "--list"});
    CHECK(r.code == cli::ok);
    CHECK(r.out.find("eqFrob theorem") != std::string::npos);
}

TEST_CASE("series") {
    auto r = call({"series", "Pxy", "--trunc", "6"});
    CHECK(r.code == cli::ok);
    CHECK(pxy_cell(r.out, 2, 2) == "2+q");
    CHECK(pxy_cell(r.out, 3, 3) == "6+6q+5q^2+2q^3+q^4");
    CHECK(pxy_cell(r.out, 2, 4) == "4+3q+2q^2+q^3");
    CHECK(pxy_cell(r.out, 4, 2) == "4+3q+2q^2+q^3");
    for (int n = 1; n <= 5; ++n) CHECK(pxy_cell(r.out, 1, n) == "1");
    CHECK(lines(r.out).size() == 15);
    CHECK(call({"series", "Pxy", "--trunc", "13"}).code == cli::usage);

    r = call({"series", "labelledGF", "--k", "3", "--trunc", "3"});
    CHECK(lines(r.out) == std::vector<std::string>{
                              "n=1 count=1 [x^n] x(1-kx)^-k=1 [x^n] (1-kx)^-k=9",
                              "n=2 count=9 [x^n] x(1-kx)^-k=9 [x^n] (1-kx)^-k=54",
                              "n=3 count=54 [x^n] x(1-kx)^-k=54 [x^n] (1-kx)^-k=270",
                          });

    r = call({"series", "hilbert", "--n", "3", "--trunc", "3", "--format", "json"});
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][0]["series_a"] == "1");
    CHECK(j["rows"][1]["series_a"] == "3");
}
