#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "drazinkit/cli.hpp"
#include "drazinkit/json_io.hpp"

using namespace drazinkit;
using json_io::Json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
    Json report() const { return Json::parse(out); }
    Json error() const { return Json::parse(err); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

Json rows(std::initializer_list<std::initializer_list<const char*>> r) {
    Json out = Json::array();
    for (const auto& row : r) {
        Json j = Json::array();
        for (const char* e : row) j.push_back(e);
        out.push_back(j);
    }
    return out;
}

const std::string kExample25 =
    R"({"ring":"Q","a":[["0","1"],["0","0"]],"b":[["0","0"],["0","1"]],"c":[["1","0"],["1","1"]],"d":[["1","0"],["-1","0"]]})";

} // namespace

TEST_CASE("demo 2.4 pinpoints the failing relation") {
    const Run r = run({"demo", "--example", "2.4"});
    CHECK(r.status == 1);
    const Json rep = r.report();
    CHECK(rep["intertwining"]["accepted"] == false);
    const Json& rel = rep["intertwining"]["relations"][0];
    CHECK(rel["relation"] == "bdb = bac");
    CHECK(rel["holds"] == false);
    CHECK(rel["lhs"] == rows({{"1", "0"}, {"0", "0"}}));
    CHECK(rel["rhs"] == rows({{"1", "1"}, {"0", "0"}}));
    CHECK(rep["intertwining"]["relations"][1]["holds"] == true);
    CHECK(r.error()["error"] == "RelationViolation");
}

TEST_CASE("demo 2.5 accepts") {
    const Run r = run({"demo", "--example", "2.5"});
    CHECK(r.status == 0);
    CHECK(r.err.empty());
    const Json rep = r.report();
    CHECK(rep["intertwining"]["accepted"] == true);
    const Json zero = rows({{"0", "0"}, {"0", "0"}});
    for (const auto& rel : rep["intertwining"]["relations"]) {
        CHECK(rel["holds"] == true);
        CHECK(rel["lhs"] == zero);
        CHECK(rel["rhs"] == zero);
    }
    CHECK(rep["ac"]["drazin_inverse"]["valid"] == true);
    CHECK(rep["ac"]["drazin_inverse"]["inverse"]["rows"] == rows({{"1", "1"}, {"0", "0"}}));
    CHECK(rep["cline"]["valid"] == true);
}

TEST_CASE("demo 3.6 over the integers") {
    const Run r = run({"demo", "--example", "3.6"});
    CHECK(r.status == 0);
    const Json rep = r.report();
    const Json zero = rows({{"0", "0"}, {"0", "0"}});
    CHECK(rep["ring"] == "Z");
    CHECK(rep["intertwining"]["accepted"] == true);
    CHECK(rep["ac"]["matrix"] == zero);
    CHECK(rep["ac"]["group_inverse"]["valid"] == true);
    CHECK(rep["ac"]["group_inverse"]["inverse"]["rows"] == zero);
    CHECK(rep["bd"]["matrix"] == rows({{"0", "2"}, {"0", "0"}}));
    CHECK(rep["bd"]["drazin_inverse"]["inverse"]["rows"] == zero);
    CHECK(rep["bd"]["drazin_inverse"]["index"] == 2);
    CHECK(rep["bd"]["group_inverse"]["error"] == "NoGroupInverse");
}

TEST_CASE("drazin command") {
    const Run id = run({"drazin", "--in", R"({"ring":"Q","rows":[["1","0","0"],["0","1","0"],["0","0","1"]]})"});
    CHECK(id.status == 0);
    CHECK(id.report()["index"] == 0);
    CHECK(id.report()["inverse"]["rows"] == rows({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));

    const std::string nil = R"({"ring":"Q","rows":[["0","1"],["0","0"]]})";
    CHECK(run({"drazin", "--in", nil}).status == 0);
    const Run group = run({"drazin", "--in", nil, "--flavor", "group"});
    CHECK(group.status == 1);
    CHECK(group.error()["error"] == "NoGroupInverse");

    const Run gf = run({"drazin", "--in", R"({"ring":{"GF":5},"rows":[["2","1"],["0","0"]]})", "--flavor", "pdrazin"});
    CHECK(gf.status == 0);
    CHECK(gf.report()["flavor"] == "pdrazin");

    CHECK(run({"drazin", "--in", R"({"ring":"Z","rows":[["1"]]})"}).error()["error"] == "NotAField");
}

TEST_CASE("malformed input exits 2") {
    for (const auto& bad : std::vector<std::vector<std::string>>{
             {"drazin", "--in", R"({"ring":"Q","rows":[["1","x"],["0","0"]]})"},
             {"drazin", "--in", R"({"ring":"Q","rows":[["1","0"],["0"]]})"},
             {"drazin", "--in", R"({"ring":{"Zmod":4},"rows":[["4"]]})"},
             {"drazin", "--in", R"({"ring":{"GF":4},"rows":[["1"]]})"},
             {"drazin", "--in", R"({"ring":"R","rows":[["1"]]})"},
             {"drazin", "--in", "{not json"},
             {"drazin", "--in", "/nonexistent/m.json"},
             {"drazin", "--in", R"({"ring":"Q","rows":[["1"]]})", "--flavor", "mp"},
             {"verify", "--in", R"({"ring":"Q","a":[["1"]],"b":[["1"]],"c":[["1"]]})"},
             {"verify", "--in", R"({"ring":"Q","a":[["1"]],"b":[["1"]],"c":[["1"]],"d":[["1","0"],["0","1"]]})"},
             {"demo", "--example", "9.9"},
             {"search", "--ring", "gf2", "--strategy", "sideways"},
             {"nonsense"},
             {},
         }) {
        CAPTURE(bad.empty() ? std::string() : bad.back());
        const Run r = run(bad);
        CHECK(r.status == 2);
        CHECK(r.error().contains("error"));
    }
}

TEST_CASE("verify and cline commands") {
    const Run ok = run({"verify", "--in", kExample25});
    CHECK(ok.status == 0);
    CHECK(ok.report()["accepted"] == true);

    const std::string broken =
        R"({"ring":"Q","a":[["0","1"],["0","0"]],"b":[["1","0"],["0","0"]],"c":[["1","0"],["1","1"]],"d":[["1","1"],["0","0"]]})";
    const Run rejected = run({"verify", "--in", broken});
    CHECK(rejected.status == 1);
    CHECK(rejected.report()["relations"][0]["differing"] == Json::parse("[[0,1]]"));
    CHECK(run({"cline", "--in", broken}).status == 1);

    const Run c = run({"cline", "--in", kExample25, "--flavor", "gdrazin"});
    CHECK(c.status == 0);
    CHECK(c.report()["cline"]["bd"]["index"] == 2);

    const std::string z36 =
        R"({"ring":"Z","a":[[0,1],[0,1]],"b":[[1,1],[0,0]],"c":[[1,-1],[0,0]],"d":[[0,1],[0,1]]})";
    const Run cz = run({"cline", "--in", z36, "--flavor", "group"});
    CHECK(cz.status == 0);
    CHECK(cz.report()["computed_over"] == "Q");
    CHECK(cz.report()["cline"]["classification"] == "index-two");
}

TEST_CASE("jacobson and spectrum commands") {
    const Run singular = run({"jacobson", "--in", kExample25});
    CHECK(singular.status == 1);
    CHECK(singular.error()["error"] == "NotInvertible");

    const Run scaled = run({"jacobson", "--in", kExample25, "--lambda", "2"});
    CHECK(scaled.status == 0);
    CHECK(scaled.report()["lambda"] == "2");
    CHECK(run({"jacobson", "--in", kExample25, "--lambda", "0"}).status == 1);
    CHECK(run({"jacobson", "--in", kExample25, "--lambda", "1/0"}).status == 2);

    const Run s = run({"spectrum", "--in", kExample25, "--lambdas", "1,-1,5/7"});
    CHECK(s.status == 0);
    const Json rep = s.report();
    CHECK(rep["ac_vs_bd"]["equal"] == false);
    CHECK(rep["ac_vs_bd"]["second_within_first"] == true);
    CHECK(rep["transfer"]["verdicts"].size() == 3);
    CHECK(rep["transfer"]["forward_holds"] == true);
    CHECK(rep["transfer"]["reverse_holds"] == false);
    CHECK(run({"spectrum", "--in", kExample25}).report()["transfer"]["verdicts"].size() == 7);
}

TEST_CASE("oracle command") {
    const Run r = run({"oracle", "--in", "[[2,1],[0,2]]", "--ring", "zmod4", "--flavor", "pdrazin"});
    CHECK(r.status == 0);
    CHECK(r.report()["count"] == 1);
    CHECK(r.report()["element"]["ring"] == Json::parse(R"({"Zmod":4})"));
    const Run g = run({"oracle", "--in", R"({"ring":{"GF":2},"rows":[["0","1"],["0","0"]]})", "--flavor", "group"});
    CHECK(g.status == 1);
    CHECK(g.report()["count"] == 0);
    CHECK(run({"oracle", "--in", R"({"ring":"Q","rows":[["1"]]})"}).status == 1);
}

TEST_CASE("search streams JSON lines deterministically") {
    const Run ex = run({"search", "--ring", "gf2", "--dim", "2", "--strategy", "exhaustive"});
    CHECK(ex.status == 0);
    std::istringstream lines(ex.out);
    std::string line, last;
    std::size_t quads = 0;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        if (j["kind"] == "quadruple") ++quads;
        last = line;
    }
    CHECK(quads == 9412);
    CHECK(Json::parse(last)["count"] == 9412);

    const std::vector<std::string> args = {"search", "--ring", "gf3", "--dim", "2", "--strategy",
                                           "linear-solve", "--budget", "30", "--seed", "5"};
    const Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    setenv("DRAZINKIT_SEED", "6", 1);
    const Run env = run(args);
    unsetenv("DRAZINKIT_SEED");
    CHECK(env.out != a.out);
    std::vector<std::string> six = args;
    six.back() = "6";
    CHECK(run(six).out == env.out);

    setenv("DRAZINKIT_SEED", "abc", 1);
    CHECK(run(args).status == 2);
    unsetenv("DRAZINKIT_SEED");

    CHECK(run({"search", "--ring", "zmod4", "--dim", "2", "--strategy", "exhaustive"}).status == 1);
}

TEST_CASE("printed matrices re-parse to identical values") {
    const Run r = run({"search", "--ring", "zmod4", "--dim", "2", "--strategy", "linear-solve", "--budget", "50"});
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        if (j["kind"] != "quadruple") continue;
        const auto m = json_io::quadruple_matrices_from_json(j);
        const Quadruple q = make_quadruple(m[0], m[1], m[2], m[3]);
        CHECK(json_io::quadruple_to_json(q).dump() == [&] {
            Json copy = j;
            copy.erase("kind");
            return copy.dump();
        }());
    }
    const Json cert = run({"demo", "--example", "2.5"}).report()["ac"]["drazin_inverse"];
    const SquareMatrix inv = json_io::matrix_from_json(cert["inverse"]);
    CHECK(json_io::matrix_to_json(inv) == cert["inverse"]);
}

TEST_CASE("reports are byte-identical across runs and --out writes the same bytes") {
    for (const char* ex : {"2.4", "2.5", "3.6"}) {
        const Run a = run({"demo", "--example", ex}), b = run({"demo", "--example", ex});
        CHECK(a.out == b.out);
    }
    const auto path = std::filesystem::temp_directory_path() / "drazinkit_cli_test.json";
    const Run to_file = run({"demo", "--example", "2.5", "--out", path.string()});
    CHECK(to_file.status == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run({"demo", "--example", "2.5"}).out);
    std::filesystem::remove(path);
}
