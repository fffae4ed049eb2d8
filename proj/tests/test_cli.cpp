#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "toric/io.hpp"

using namespace toric;
namespace fs = std::filesystem;

namespace {

const std::string kData = TORIC_DATA_DIR;

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> data_files() {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(kData))
        if (e.path().extension() == ".mat") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Parse, Examples) {
    EXPECT_EQ(parse_matrix_string("1 3\n2 3 11\n"), IntMatrix::from_rows({{2, 3, 11}}, 3));
    EXPECT_EQ(parse_matrix_string("2 5\n2 0 2 1 3\n2 2 0 3 3\n"),
              IntMatrix::from_rows({{2, 0, 2, 1, 3}, {2, 2, 0, 3, 3}}, 5));
}

TEST(Parse, Errors) {
    try {
        parse_matrix_string("2 2\n1 2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 2u);
        EXPECT_NE(std::string(e.what()).find("expected 4 entries, found 2"), std::string::npos);
    }
    try {
        parse_matrix_string("1 3\n2 3 x\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 2u);
    }
    EXPECT_THROW(parse_matrix_string("1 2\n1 2\n3\n"), ParseError);  // trailing garbage
    EXPECT_THROW(parse_matrix_string(""), ParseError);
    EXPECT_THROW(parse_matrix_string("1\n"), ParseError);
    EXPECT_THROW(parse_matrix_string("-1 2\n"), ParseError);
    EXPECT_THROW(parse_matrix_string("1 1\n99999999999999999999\n"), ParseError);
    EXPECT_THROW(parse_matrix_file(kData + "/does_not_exist.mat"), ParseError);
}

TEST(RoundTrip, DataFilesAreByteExact) {
    auto files = data_files();
    ASSERT_GE(files.size(), 10u);
    for (const auto& path : files) {
        std::string text = slurp(path);
        EXPECT_EQ(format_matrix(parse_matrix_string(text)), text) << path;
    }
}

TEST(RoundTrip, BasisOutputParsesBack) {
    auto r = run({"graver", kData + "/curve_2_3_11.mat"});
    ASSERT_EQ(r.code, 0);
    IntMatrix m = parse_matrix_string(r.out);
    EXPECT_EQ(m.rows(), 8u);
    EXPECT_EQ(format_matrix(m), r.out);
}

TEST(Cli, Determinism) {
    const std::vector<std::vector<std::string>> cmds{
        {"graver", kData + "/curve_2_3_11.mat", "--format", "json"},
        {"markov", kData + "/example_2x5.mat", "--kind", "minimal"},
        {"markov", kData + "/example_2x5.mat", "--format", "json"},
        {"fiber", kData + "/example_2x5.mat", "--rhs", "4 6"},
        {"curve", "2", "3", "11", "--lawrence", "3", "--format", "json"},
        {"lift", kData + "/curve_3_4_5.mat", "-r", "3"},
        {"bounds", "3", "4", "5", "--coupling", kData + "/coupling_1_4_0.mat"},
    };
    for (const auto& c : cmds) {
        auto a = run(c), b = run(c);
        EXPECT_EQ(a.code, 0) << c[0] << a.err;
        EXPECT_EQ(a.out, b.out) << c[0];
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(Cli, CurveLawrenceVerify) {
    auto r = run({"curve", "2", "3", "11", "--lawrence", "3", "--verify", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], cli::kSchema);
    EXPECT_EQ(j["lawrence"]["count"], 24);
    EXPECT_EQ(j["lawrence"]["max_type"], 2);
    EXPECT_EQ(j["verified"], true);
    EXPECT_EQ(j["classification"], "complete_intersection");
    EXPECT_EQ(j["counts"]["minimal_bases"], 2);
}

TEST(Cli, DecomposeNoTwoChain) {
    auto r = run({"decompose", kData + "/example_2x5.mat", "--vector", "2 1 0 -1 -1", "--kind", "ssc", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["length"], 3);
    EXPECT_EQ(j["in_universal_markov"], false);
    EXPECT_NE(j["note"].get<std::string>().find("no 2-chain"), std::string::npos);

    auto sc = run({"decompose", kData + "/curve_2_3_11.mat", "--vector", "-3 2 0", "--kind", "sc"});
    EXPECT_EQ(sc.code, 0);
    EXPECT_NE(sc.out.find("found: no"), std::string::npos);
}

TEST(Cli, ComplexityScan) {
    auto r = run({"complexity", "curve:3,4,5", "--kind", "graver", "--max-r", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["max_type"], 2);
    EXPECT_EQ(j["scan"][0]["count"], 7);
}

TEST(Cli, MarkovJsonMetadata) {
    auto r = run({"markov", kData + "/curve_2_3_11.mat", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["count"], 3);
    EXPECT_EQ(j["degrees"].size(), 3u);
    EXPECT_EQ(j["elements"][1], nlohmann::json::parse("[3,-2,0]"));
    EXPECT_EQ(j["fiber_sizes"][1], 2);  // indispensable
}

TEST(Cli, LiftMatchesLibrary) {
    auto r = run({"lift", kData + "/curve_2_3_11.mat", "-r", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(kData + "/lift_2_3_11_r2.mat"));
    auto g = run({"lift", kData + "/curve_3_4_5.mat", "-r", "2", "--coupling", kData + "/coupling_1_3_0.mat"});
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(g.out, "3 6\n3 4 5 0 0 0\n0 0 0 3 4 5\n1 3 0 1 3 0\n");
}

TEST(Cli, BoundsText) {
    auto r = run({"bounds", "3", "4", "5", "--exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("graver_lower_bound: 12"), std::string::npos);
    EXPECT_NE(r.out.find("hs_lower_bound: 3"), std::string::npos);
    EXPECT_NE(r.out.find("graver_complexity: 12"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"graver", kData + "/nope.mat"}).code, 2);
    EXPECT_EQ(run({"curve", "2", "4", "6"}).code, 2);
    EXPECT_EQ(run({"lift", kData + "/curve_2_3_11.mat", "-r", "1"}).code, 2);
    EXPECT_EQ(run({"decompose", kData + "/curve_2_3_11.mat", "--vector", "1 1 1"}).code, 2);
    EXPECT_EQ(run({"graver", kData + "/curve_2_3_17.mat", "--max-pairs", "3"}).code, 3);
    EXPECT_EQ(run({"--max-elements", "2", "graver", kData + "/curve_2_3_17.mat"}).code, 3);
    EXPECT_EQ(run({"fiber", kData + "/identity_3.mat", "--rhs", "1 2 3"}).code, 0);
    EXPECT_EQ(run({"--help"}).code, 0);
}
