#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "commat/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "commat");
    std::ostringstream out, err;
    const int code = commat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(COMMAT_FIXTURES) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("mul") {
    SUBCASE("identity with report") {
        const auto r = run({"mul", "--a", fixture("id3.json"), "--b", fixture("id3.json"), "--report"});
        REQUIRE(r.code == 0);
        const auto out = lines(r.out);
        REQUIRE(out.size() == 2);
        CHECK(out[0] == R"({"rows":3,"cols":3,"data":[1,0,0,0,1,0,0,0,1]})");
        const auto report = nlohmann::json::parse(out[1]);
        CHECK(report["strategy"] == "paper-general");
        CHECK(report["predicted"] == 21);
        CHECK(report["observed"] == 21);
    }
    SUBCASE("row times 3x3, text input") {
        const auto r = run({"mul", "--a", fixture("row_1x3.json"), "--b", fixture("b_123.txt"), "--report"});
        REQUIRE(r.code == 0);
        const auto out = lines(r.out);
        CHECK(out[0] == R"({"rows":1,"cols":3,"data":[30,36,42]})");
        CHECK(nlohmann::json::parse(out[1])["observed"] == 9);
    }
    SUBCASE("big integers") {
        const auto r = run({"mul", "--a", fixture("big_1x3.json"), "--b", fixture("id3.json")});
        REQUIRE(r.code == 0);
        CHECK(r.out == "{\"rows\":1,\"cols\":3,\"data\":[\"123456789012345678901234567890\",-1,2]}\n");
    }
    SUBCASE("modular, from the file and from --ring") {
        const auto r = run({"mul", "--a", fixture("sq2_mod101.json"), "--b", fixture("sq2_mod101.json")});
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["modulus"] == 101);
        const auto s = run({"mul", "--a", fixture("a_2x3.json"), "--b", fixture("id3.json"), "--ring", "mod:7"});
        REQUIRE(s.code == 0);
        CHECK(s.out == "{\"rows\":2,\"cols\":3,\"data\":[1,5,3,4,5,1],\"modulus\":7}\n");
    }
    SUBCASE("output file") {
        const std::string path = "cli_mul_out.json";
        const auto r = run({"mul", "--a", fixture("id3.json"), "--b", fixture("b_123.json"), "--out", path});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        std::remove(path.c_str());
    }
}

TEST_CASE("mul errors map to exit codes") {
    CHECK(run({"mul", "--a", fixture("a_2x3.json"), "--b", fixture("a_2x3.json")}).code == 2);
    CHECK(run({"mul", "--a", fixture("missing.json"), "--b", fixture("id3.json")}).code == 2);
    CHECK(run({"mul", "--a", fixture("id3.json"), "--b", fixture("id3.json"), "--strategy", "strassen"}).code == 2);
    CHECK(run({"mul", "--a", fixture("id3.json"), "--b", fixture("id3.json"), "--strategy", "waksman-even"}).code == 2);
    CHECK(run({"mul", "--a", fixture("id3.json"), "--b", fixture("id3.json"), "--ring", "mod:x"}).code == 2);
    CHECK(run({"mul", "--a", fixture("sq2_mod101.json"), "--b", fixture("sq2_mod101.json"), "--ring", "mod:7"}).code ==
          2);
    CHECK(run({"mul", "--a", fixture("id3.json")}).code == 2);
    const auto r = run({"mul", "--a", fixture("sq2_mod4.json"), "--b", fixture("sq2_mod4.json"), "--strategy", "waksman-even"});
    CHECK(r.code == 3);
    CHECK(r.err.find("halv") != std::string::npos);
    // auto picks a division-free schedule instead
    const auto ok = run({"mul", "--a", fixture("sq2_mod4.json"), "--b", fixture("sq2_mod4.json"), "--report"});
    CHECK(ok.code == 0);
    CHECK(lines(ok.out)[0] == R"({"rows":2,"cols":2,"data":[3,0,0,3],"modulus":4})");
    CHECK(nlohmann::json::parse(lines(ok.out)[1])["strategy"] == "winograd-even");
    CHECK(run({"mul", "--a", fixture("b_mod4.json"), "--b", fixture("b_mod4.json")}).code == 0);
}

TEST_CASE("table") {
    const auto r = run({"table", "--lmax", "3", "--nmax", "3", "--mmax", "4"});
    REQUIRE(r.code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 1 + 3 * 2);
    CHECK(out[0] == "l,n,m,paper,waksman_odd,naive,delta");
    CHECK(out[1] == "1,3,3,9,9,9,0");
    CHECK(out[5] == "3,3,3,21,23,27,2");
    CHECK(out[6] == "3,3,4,28,30,36,2");

    const auto j = run({"table", "--lmax", "2", "--nmax", "5", "--mmax", "3", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.size() == 4);
    CHECK(doc[0]["l"] == 1);
    CHECK(run({"table", "--lmax", "0"}).code == 2);
    CHECK(run({"table", "--format", "xml"}).code == 2);
}

TEST_CASE("verify") {
    const auto counts = run({"verify", "--suite", "counts"});
    CHECK(counts.code == 0);
    CHECK(nlohmann::json::parse(counts.out)["pass"] == true);

    const auto sym = run({"verify", "--suite", "symbolic", "--max-shape", "3,7,6"});
    CHECK(sym.code == 0);
    const auto doc = nlohmann::json::parse(sym.out);
    CHECK(doc["suites"]["symbolic"]["checks"].get<int>() > 0);
    CHECK(doc["max_shape"] == nlohmann::json::array({3, 7, 6}));

    const auto mutant = run({"verify", "--mutant", "core3-p7-sign"});
    CHECK(mutant.code == 1);
    const auto bad = nlohmann::json::parse(mutant.out);
    CHECK(bad["pass"] == false);
    REQUIRE(bad["failures"].size() == 1);
    CHECK(bad["failures"][0]["monomial"] == "b12*b21");
    CHECK(bad["failures"][0]["entry"] == nlohmann::json::array({1, 1}));

    CHECK(run({"verify", "--mutant", "nope"}).code == 2);
    CHECK(run({"verify", "--max-shape", "3,7"}).code == 2);
    CHECK(run({"verify", "--suite", "random", "--max-shape", "2,3,3", "--trials", "5", "--seed", "9"}).code == 0);
    CHECK(run({"verify", "--suite", "taint", "--max-shape", "2,5,4"}).code == 0);
}

TEST_CASE("verify output is deterministic") {
    const auto a = run({"verify", "--suite", "all", "--max-shape", "2,3,3", "--trials", "3"});
    const auto b = run({"verify", "--suite", "all", "--max-shape", "2,3,3", "--trials", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto t1 = run({"table"});
    const auto t2 = run({"table"});
    CHECK(t1.out == t2.out);
}

TEST_CASE("bench") {
    auto strategies = [](const std::string& csv) {
        std::vector<std::string> names;
        const auto rows = lines(csv);
        for (std::size_t i = 1; i < rows.size(); ++i) names.push_back(rows[i].substr(0, rows[i].find(',')));
        return names;
    };
    auto contains = [](const std::vector<std::string>& v, const char* s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };

    const auto r = run({"bench", "--shape", "3,3,3", "--ring", "int:4096", "--reps", "3"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[0] == "strategy,l,n,m,ring,reps,multiplications,median_ns,min_ns,max_ns");
    const auto s = strategies(r.out);
    CHECK(contains(s, "paper-general"));
    CHECK(contains(s, "waksman-odd"));
    CHECK(contains(s, "naive"));
    CHECK(lines(r.out)[1].rfind("paper-general,3,3,3,int:4096,3,21,", 0) == 0);

    const auto m = run({"bench", "--shape", "2,4,3", "--ring", "mod:101", "--reps", "2"});
    REQUIRE(m.code == 0);
    CHECK(contains(strategies(m.out), "waksman-even"));
    CHECK(contains(strategies(m.out), "winograd-even"));

    const auto j = run({"bench", "--shape", "2,4,3", "--reps", "1", "--format", "json", "--strategy", "naive"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["multiplications"] == 24);

    CHECK(run({"bench", "--shape", "2,4,3", "--strategy", "core3"}).code == 2);
    CHECK(run({"bench", "--shape", "2,4,3", "--ring", "mod:4", "--strategy", "waksman-even"}).code == 3);
    CHECK(run({"bench", "--shape", "2,0,3"}).code == 2);
    CHECK(run({"bench"}).code == 2);
}

TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("mul") != std::string::npos);
}
