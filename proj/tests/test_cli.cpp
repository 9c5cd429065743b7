#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dv/cli.hpp"
#include "dv/io.hpp"
#include "fixtures.hpp"

using namespace dv;
namespace fs = std::filesystem;

namespace {

struct run_result {
    int code;
    std::string out;
    std::string err;
};

run_result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = dv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct temp_dir {
    fs::path path;
    temp_dir() {
        path = fs::temp_directory_path() / ("dv_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~temp_dir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli verify") {
    temp_dir tmp;
    save_matrix(fixtures::sunflower_7x10(), tmp.file("m.dvm"));

    auto ok = run_cli({"verify", "--input", tmp.file("m.dvm"), "--columns", "2,3,4,5,6,7"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    auto bad = run_cli({"verify", "--input", tmp.file("m.dvm"), "--columns", "1,2"});
    CHECK(bad.code == 1);
    CHECK(bad.out == "invalid\n");

    auto oob = run_cli({"verify", "--input", tmp.file("m.dvm"), "--columns", "42"});
    CHECK(oob.code == 2);
    CHECK(oob.err.find("error:") == 0);
}

TEST_CASE("cli solve exit codes and output") {
    temp_dir tmp;
    save_matrix(fixtures::sunflower_7x10(), tmp.file("m.dvm"));

    auto no = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "5"});
    CHECK(no.code == 1);
    CHECK(no.out == "no\n");

    auto yes = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "6"});
    CHECK(yes.code == 0);
    solution sol = parse_solution(yes.out.substr(0, yes.out.size() - 1), 10);
    CHECK(sol.size() == 6);
    CHECK(is_distinguishing(fixtures::sunflower_7x10(), sol));

    for (const char* algo : {"exact", "branch"}) {
        auto again = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "6", "--algo", algo});
        CHECK(again.code == 0);
    }

    // the polynomial solver insists on reduced input
    auto unreduced = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "6", "--algo", "poly"});
    CHECK(unreduced.code == 2);
    auto reduce = run_cli({"reduce", "--input", tmp.file("m.dvm"), "--output", tmp.file("red.dvm")});
    REQUIRE(reduce.code == 0);
    auto poly = run_cli({"solve", "--input", tmp.file("red.dvm"), "--k", "6", "--algo", "poly"});
    CHECK(poly.code == 0);
    CHECK(parse_solution(poly.out.substr(0, poly.out.size() - 1), 6).size() == 6);
}

TEST_CASE("cli exit codes are deterministic") {
    temp_dir tmp;
    save_matrix(fixtures::incidence_5x4(), tmp.file("m.dvm"));
    auto first = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "3"});
    auto second = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "3"});
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
}

TEST_CASE("cli classify") {
    temp_dir tmp;
    save_matrix(fixtures::incidence_5x4(), tmp.file("twofour.dvm"));
    auto r = run_cli({"classify", "--input", tmp.file("twofour.dvm")});
    CHECK(r.code == 0);
    CHECK(r.out == "NP-complete regime (h=2, H=4)\n");

    save_matrix(fixtures::sunflower_7x10(), tmp.file("m.dvm"));
    auto ex = run_cli({"classify", "--input", tmp.file("m.dvm"), "--explain"});
    CHECK(ex.code == 0);
    CHECK(ex.out.find("NP-complete regime (h=1, H=4)") == 0);
    CHECK(ex.out.find("sunflower: core {1,2}") != std::string::npos);
}

TEST_CASE("cli json output round-trips and carries the declared keys") {
    temp_dir tmp;
    save_matrix(fixtures::sunflower_7x10(), tmp.file("m.dvm"));
    auto r = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "6", "--json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "solve");
    CHECK(doc["result"] == "yes");
    CHECK(doc["input"]["digest"].get<std::string>().rfind("fnv1a:", 0) == 0);
    CHECK(doc["solution"].size() == 6);
    CHECK(doc["profile"]["h"] == 1);
    CHECK(doc["profile"]["H"] == 4);
    CHECK(doc.contains("timings"));

    auto twice = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "6", "--json"});
    auto doc2 = nlohmann::json::parse(twice.out);
    CHECK(doc["solution"] == doc2["solution"]);
    CHECK(doc["input"]["digest"] == doc2["input"]["digest"]);

    auto no = run_cli({"solve", "--input", tmp.file("m.dvm"), "--k", "5", "--json"});
    CHECK(no.code == 1);
    auto no_doc = nlohmann::json::parse(no.out);
    CHECK(no_doc["result"] == "no");
    CHECK_FALSE(no_doc.contains("solution"));
}

TEST_CASE("cli reduce") {
    temp_dir tmp;
    save_matrix(fixtures::sunflower_7x10(), tmp.file("m.dvm"));
    auto r = run_cli({"reduce", "--input", tmp.file("m.dvm"), "--rules", "preprocess,inessential"});
    CHECK(r.code == 0);
    CHECK(r.err.find("duplicates removed 4") != std::string::npos);
    std::istringstream in(r.out);
    matrix reduced = read_matrix(in);
    CHECK(reduced.d() == 6);
    CHECK(reduced.n() == 7);

    auto to_file = run_cli({"reduce", "--input", tmp.file("m.dvm"), "--output", tmp.file("red.dvm")});
    CHECK(to_file.code == 0);
    CHECK(load_matrix(tmp.file("red.dvm")).d() <= 6);
}

TEST_CASE("cli kernel") {
    temp_dir tmp;
    save_matrix(fixtures::sunflower_7x10(), tmp.file("m.dvm"));

    // budget below the pigeonhole bound: definite no, trivial instance out
    auto no = run_cli({"kernel", "--param", "sigma-k", "--input", tmp.file("m.dvm"), "--k", "2"});
    CHECK(no.code == 0);
    CHECK(no.err.find("definite-no") != std::string::npos);
    std::istringstream in(no.out);
    matrix trivial = read_matrix(in);
    CHECK(trivial.n() == 2);

    auto hk = run_cli({"kernel", "--param", "h-k", "--input", tmp.file("m.dvm"), "--k", "6", "--json"});
    CHECK(hk.code == 0);
    auto doc = nlohmann::json::parse(hk.out);
    CHECK(doc["result"] == "ok");
    CHECK(doc["kernel"]["k"] == 6);
}

TEST_CASE("cli approx") {
    temp_dir tmp;
    save_matrix(fixtures::sunflower_7x10(), tmp.file("m.dvm"));
    auto r = run_cli({"approx", "--input", tmp.file("m.dvm")});
    CHECK(r.code == 0);
    solution sol = parse_solution(r.out.substr(0, r.out.size() - 1), 10);
    CHECK(is_distinguishing(fixtures::sunflower_7x10(), sol));
}

TEST_CASE("cli generate with metadata sidecar") {
    temp_dir tmp;
    auto r = run_cli({"generate", "--kind", "sunflower", "--core", "2", "--petals", "2,1,2,2,1,0", "--seed", "9",
                      "--output", tmp.file("gen.dvm")});
    CHECK(r.code == 0);
    matrix m = load_matrix(tmp.file("gen.dvm"));
    CHECK(m.n() == 7);
    CHECK(m.d() == 10);

    std::ifstream side(tmp.file("gen.dvm") + ".meta.json");
    REQUIRE(side.good());
    auto meta = nlohmann::json::parse(side);
    CHECK(meta["kind"] == "sunflower");
    CHECK(meta["seed"] == 9);
    CHECK(meta["rng"] == "mt19937_64/modulo");
    CHECK(meta.contains("profile"));

    auto rnd = run_cli({"generate", "--kind", "random", "--rows", "5", "--cols", "8", "--alpha", "1", "--beta", "2",
                        "--seed", "4", "--output", tmp.file("rnd.dvm")});
    CHECK(rnd.code == 0);
    CHECK(distance_profile(load_matrix(tmp.file("rnd.dvm"))).h == 1);
}

TEST_CASE("cli generate from graphs") {
    temp_dir tmp;
    {
        std::ofstream g(tmp.file("good.txt"));
        g << "4 4\n1 2\n3 4\n1 4\n1 3\n";  // two disjoint edges among four
    }
    auto ok = run_cli({"generate", "--kind", "d3is", "--graph", tmp.file("good.txt"), "--k", "2", "--output",
                       tmp.file("g.dvm")});
    CHECK(ok.code == 0);
    matrix m = load_matrix(tmp.file("g.dvm"));
    auto p = distance_profile(m);
    CHECK(p.h == 2);
    CHECK(p.H == 4);

    {
        std::ofstream g(tmp.file("star.txt"));
        g << "4 3\n1 2\n1 3\n1 4\n";
    }
    auto refused = run_cli({"generate", "--kind", "d3is", "--graph", tmp.file("star.txt"), "--k", "2", "--output",
                            tmp.file("s.dvm")});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("verdict: no") != std::string::npos);  // a star admits only a single vertex
}

TEST_CASE("cli usage errors exit with 2") {
    CHECK(run_cli({"solve"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"solve", "--input", "/nonexistent.dvm", "--k", "1"}).code == 2);
    CHECK(run_cli({}).code == 2);
}
