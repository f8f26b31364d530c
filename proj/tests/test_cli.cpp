#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbilat/cli.hpp"
#include "orbilat/json_io.hpp"
#include "orbilat/lataut.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace orbilat;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("build command") {
    auto r = run({"build", "D4_6", "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("det") == "1");
    CHECK(j.at("rank") == 24);
    CHECK(j.at("even") == true);
    CHECK(j.at("component_layout").size() == 6);
    CHECK(matrix_from_json(j.at("basis")).rows() == 24);
}

TEST_CASE("roots command") {
    auto r = run({"roots", "E6_4", "--json"});
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out).at("root_count") == 288);
}

TEST_CASE("invariants command") {
    auto r = run({"invariants", "D4_6", "sigma3", "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("order") == 3);
    CHECK(j.at("fixed_rank") == 6);
    CHECK(j.at("root_fix") == 18);
    CHECK(j.at("miyamoto_ok") == true);
}

TEST_CASE("classify command") {
    auto r = run({"classify", "Leech", "sigma7", "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("outcome") == "moonshine_candidate");
    CHECK(j.at("rho") == "4/3");
}

TEST_CASE("matrix file input") {
    auto tmp = std::filesystem::temp_directory_path() / "orbilat_sigma3.json";
    {
        std::ofstream f(tmp);
        f << matrix_to_json(sigma(3).matrix);
    }
    auto r = run({"invariants", "D4_6", "--file", tmp.string(), "--json"});
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out).at("fixed_rank") == 6);
    std::filesystem::remove(tmp);
}

TEST_CASE("certify command") {
    auto tmp = std::filesystem::temp_directory_path() / "orbilat_id.json";
    {
        std::ofstream f(tmp);
        f << matrix_to_json(QMatrix::identity(24));
    }
    auto good = run({"certify", "D4_6", "sigma3", "sigma3", "--g", tmp.string(), "--json"});
    CHECK(good.status == 0);
    CHECK(nlohmann::json::parse(good.out).at("conjugate") == true);

    auto bad = run({"certify", "D4_6", "sigma3", "sigma4", "--g", tmp.string(), "--json"});
    CHECK(bad.status == 1);
    CHECK(nlohmann::json::parse(bad.out).at("conjugate") == false);
    std::filesystem::remove(tmp);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"build", "F4_6"}).status == 2);
    CHECK(run({"verify", "no-such-suite"}).status == 2);
    CHECK(run({"invariants", "D4_6", "sigma9"}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"invariants", "E6_4", "sigma3"}).status == 2); // wrong lattice for the name
}

TEST_CASE("verify command emits per-check records") {
    auto r = run({"verify", "sigma-table", "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j[0].at("suite") == "sigma-table");
    CHECK(j[0].at("pass") == true);
    for (const auto& c : j[0].at("checks")) {
        CHECK(c.contains("check"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("got"));
        CHECK(c.at("pass") == true);
    }
}

TEST_CASE("identical invocations are byte-identical") {
    auto a = run({"verify", "lemma-conj", "--json", "--seed", "42"});
    auto b = run({"verify", "lemma-conj", "--json", "--seed", "42"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto c = run({"classify", "D4_6", "sigma4", "--json"});
    auto d = run({"classify", "D4_6", "sigma4", "--json"});
    CHECK(c.out == d.out);
}

#ifdef ORBILAT_CLI_PATH
TEST_CASE("NIEMEIER_DATA override is honored by a fresh process") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "orbilat_glue_override";
    fs::create_directories(dir);

    // a corrupted A6_4 table: certification must reject it (exit nonzero)
    {
        std::ofstream f(dir / "A6_4.json");
        f << R"({"generators": [[1,1,1,1]]})";
    }
    std::string cmd = std::string("NIEMEIER_DATA=") + dir.string() + " " + ORBILAT_CLI_PATH +
                      " build A6_4 >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) != 0);

    // the genuine table via the override path works
    {
        std::ofstream f(dir / "A6_4.json");
        f << R"({"generators": [[1,2,1,6],[1,1,6,2],[1,6,2,1]]})";
    }
    status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    fs::remove_all(dir);
}
#endif
