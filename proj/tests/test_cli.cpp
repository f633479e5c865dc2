#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zkn/cli.hpp"
#include "zkn/json_io.hpp"

using namespace zkn;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::filesystem::path> fixtures()
{
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(ZKN_FIXTURE_DIR))
        if (entry.path().extension() == ".json")
            out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("basis output")
{
    const Result r = run({"basis", "--k", "1", "--j", "2", "--m", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"dim\":3,\"indices\":[[1,0],[1,1],[2,1]]}\n");
    CHECK(run({"basis", "--k", "1", "--j", "2", "--level", "2"}).out == r.out);
    CHECK(run({"basis", "--k", "1", "--j", "2", "--m", "3", "--level", "2"}).code == 1);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 1);
    CHECK(run({"basis", "--k", "1", "--m", "3"}).code == 1);
    CHECK(run({"basis", "--k", "x", "--j", "2", "--m", "3"}).code == 1);
    CHECK(run({"isom", "--k", "1", "--j", "2", "--m", "3"}, "{not json").code == 1);
    CHECK(run({"isom", "--k", "1", "--j", "2", "--m", "3"}, R"({"p":[0,0,1],"p_prime":[1,0,0]})").code == 0);
    CHECK(run({"restrict", "--k", "1", "--j", "2", "--m", "3", "--to", "4"}, "[1,2,5]").code == 1);
    CHECK(run({"basis", "--help"}).code == 0);
}

TEST_CASE("act with the identity echoes p")
{
    const ModuliParams params{{2, 4}, 3};
    const Json payload = {{"g", to_json(GroupElem::identity(params))}, {"p", Json::array({1, 2, 3, 4})}};
    const Result r = run({"act", "--k", "2", "--j", "3", "--m", "4"}, payload.dump());
    REQUIRE(r.code == 0);
    const ExtClass echoed = ext_class_from_json(Json::parse(r.out));
    CHECK(echoed == ExtClass::from_coordinates(params, {1, 2, 3, 4}));
}

TEST_CASE("isom witness is verified and re-parses")
{
    const ModuliParams params{{1, 3}, 2};
    const Result r = run({"isom", "--k", "1", "--j", "2", "--m", "3"}, R"({"p":[1,2,5],"p_prime":[3,6,0]})");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["isomorphic"] == true);
    const GroupElem w = group_elem_from_json(j["witness"], params);
    CHECK(act(w, ExtClass::from_coordinates(params, {1, 2, 5})) == ExtClass::from_coordinates(params, {3, 6, 0}));
}

TEST_CASE("output file")
{
    const auto path = std::filesystem::temp_directory_path() / "zkn_cli_output_test.json";
    const Result r = run({"cone-check", "--k", "3", "--m", "2", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::string text((std::istreambuf_iterator<char>(file)), {});
    CHECK(text == run({"cone-check", "--k", "3", "--m", "2"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("fixture corpus: exit codes, determinism, round-trip")
{
    const auto files = fixtures();
    REQUIRE(files.size() >= 12);
    for (const auto& path : files) {
        INFO(path.filename().string());
        std::ifstream file(path);
        const Json fixture = Json::parse(file);
        const auto args = fixture["args"].get<std::vector<std::string>>();
        const std::string input = fixture.contains("stdin") ? fixture["stdin"].dump() : "";
        const Result first = run(args, input);
        const Result second = run(args, input);
        CHECK(first.code == fixture["exit"].get<int>());
        CHECK(first.out == second.out);
        if (first.code == 0)
            CHECK(Json::parse(first.out).dump() + "\n" == first.out);
    }
}
