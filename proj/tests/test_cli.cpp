#include <polymat/cli.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace polymat;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "polymat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(POLYMAT_SOURCE_DIR) + "/tests/golden/" + name);
    EXPECT_TRUE(in) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Last non-comment line of a CSV document.
std::string last_row(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') last = line;
    return last;
}

}  // namespace

TEST(Cli, GoldenFiles) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"redmat_dim2_h1.csv", {"redmat", "--dim", "2", "--height", "1"}},
        {"redmat_dim2_h1.json", {"redmat", "--dim", "2", "--height", "1", "--format", "json"}},
        {"singmat_dim2_h2.csv", {"singmat", "--dim", "2", "--height", "2"}},
        {"redpoly_deg3_h1_c1.csv", {"redpoly", "--degree", "3", "--height", "1", "--constant-term", "1"}},
        {"groupred_sl2_5.csv", {"groupred", "--group", "SL", "--dim", "2", "--q", "5"}},
        {"certify_pa.json", {"certify", "--charpoly", "1,-3,1", "--pa"}},
        {"certify_sn.json", {"certify", "--charpoly", "-1,-1,0,1", "--format", "json"}},
        {"trend_sl2.csv", {"trend", "--dim", "2", "--lengths", "0,5,10", "--samples", "200", "--seed", "7"}},
        {"splitdist_d2_p5.csv", {"splitdist", "--degree", "2", "--p", "5", "--constant-term", "1"}},
        {"walkdist_sl2_5.csv", {"walkdist", "--dim", "2", "--q", "5", "--steps", "5"}},
    };
    for (auto [file, args] : cases) {
        args.push_back("--no-timestamp");
        auto r = run(args);
        EXPECT_EQ(r.code, 0) << file << r.err;
        EXPECT_EQ(r.out, golden(file)) << file;
    }
}

TEST(Cli, KnownValues) {
    auto a = run({"certify", "--charpoly", "1,-3,1", "--pa", "--no-timestamp"});
    ASSERT_EQ(a.code, 0);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["result"]["verdict"], "PROVED");
    EXPECT_EQ(j["version"], version_string);
    EXPECT_TRUE(reverify(nlohmann::ordered_json::parse(j["result"].dump())));

    EXPECT_EQ(last_row(run({"redmat", "--dim", "2", "--height", "1"}).out), "MATRIX_REDUCIBLE,2,1,81,55,true");
    EXPECT_EQ(last_row(run({"redpoly", "--degree", "1", "--height", "5"}).out), "POLY_REDUCIBLE,1,5,11,0,true");
}

TEST(Cli, HeaderEchoesConfig) {
    auto r = run({"--seed", "9", "redpoly", "--degree", "2", "--height", "3", "--fix", "1:2", "--jobs", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("# polymat 0.1.0\n# command: redpoly\n", 0), 0u);
    EXPECT_NE(r.out.find(R"("seed":9,"jobs":2)"), std::string::npos);
    EXPECT_NE(r.out.find(R"("fix":"1:2")"), std::string::npos);
    EXPECT_NE(r.out.find("# timestamp: "), std::string::npos);
    auto s = run({"redpoly", "--degree", "2", "--height", "3", "--no-timestamp"});
    EXPECT_EQ(s.out.find("timestamp"), std::string::npos);
}

TEST(Cli, DeterministicAcrossJobs) {
    auto a = run({"trend", "--experiment", "strong", "--dim", "3", "--lengths", "4,8", "--samples", "60", "--no-timestamp",
                  "--format", "json"});
    auto b = run({"trend", "--experiment", "strong", "--dim", "3", "--lengths", "4,8", "--samples", "60", "--no-timestamp",
                  "--format", "json", "--jobs", "3"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(nlohmann::json::parse(a.out)["result"].dump(), nlohmann::json::parse(b.out)["result"].dump());
    EXPECT_EQ(a.out, run({"trend", "--experiment", "strong", "--dim", "3", "--lengths", "4,8", "--samples", "60",
                          "--no-timestamp", "--format", "json"}).out);
    auto c = run({"redpoly", "--degree", "3", "--height", "4", "--jobs", "1", "--no-timestamp"});
    auto d = run({"redpoly", "--degree", "3", "--height", "4", "--jobs", "4", "--no-timestamp"});
    EXPECT_EQ(last_row(c.out), last_row(d.out));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nosuch"}).code, 2);
    auto unknown = run({"redmat", "--dim", "2", "--height", "1", "--bogus"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({"redmat", "--dim", "2", "--height", "0"}).code, 2);
    EXPECT_EQ(run({"groupred", "--dim", "2", "--q", "6"}).code, 2);
    EXPECT_EQ(run({"certify", "--charpoly", "1,2,1"}).code, 2);
    EXPECT_EQ(run({"certify", "--charpoly", "1,x"}).code, 2);
    EXPECT_EQ(run({"redmat", "--dim", "3", "--height", "2", "--cap", "1000"}).code, 3);
    EXPECT_EQ(run({"groupred", "--group", "SP", "--dim", "4", "--q", "5", "--cap", "10000"}).code, 3);
    auto curve = run({"curve", "--f", "0,0,1", "--p", "5"});
    EXPECT_EQ(curve.code, 2);
    EXPECT_NE(curve.err.find("NOT_ABSOLUTELY_IRREDUCIBLE"), std::string::npos);
    EXPECT_TRUE(curve.out.empty());
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SamplingMode) {
    auto r = run({"redmat", "--dim", "3", "--height", "5", "--samples", "300", "--seed", "4", "--no-timestamp"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("# sampled: population=2357947691"), std::string::npos);
    EXPECT_EQ(last_row(r.out).rfind("MATRIX_REDUCIBLE,3,5,300,", 0), 0u);
    EXPECT_EQ(last_row(r.out).substr(last_row(r.out).size() - 5), "false");
}

TEST(Cli, OtherSubcommands) {
    EXPECT_EQ(last_row(run({"fiber", "--charpoly", "1,0,1", "--p", "7"}).out), "x^2 + 1,7,2016,42,16,100,true");
    EXPECT_EQ(last_row(run({"curve", "--f", "1,0,0,1", "--p", "5"}).out), "x^3+1,2,5,5,2,12,true");
    EXPECT_EQ(last_row(run({"orbit", "--f", "1,0,1", "--p", "5"}).out), "x^2+1,5,10,20,2,false");
    auto m = run({"certify", "--matrix", "2,1;1,1", "--power", "5", "--format", "csv"});
    EXPECT_EQ(last_row(m.out), "POWER_IRREDUCIBLE,INCONCLUSIVE,x^2 - 3*x + 1");
    EXPECT_EQ(run({"certify", "--charpoly", "1,-3,1", "--pa", "--sn"}).code, 2);
}

// The shipped Sp(4) fixture is the standard generating set.
TEST(Cli, GeneratorFixture) {
    const std::string fixture = std::string(POLYMAT_SOURCE_DIR) + "/tests/fixtures/sp4_generators.txt";
    auto gens = cli::detail::read_generators(fixture);
    EXPECT_EQ(gens.fingerprint(), standard_generators(GroupId(GroupKind::SP, 4)).fingerprint());
    auto a = run({"trend", "--experiment", "pseudo_anosov", "--dim", "4", "--lengths", "6", "--samples", "40",
                  "--generators", fixture, "--no-timestamp"});
    auto b = run({"trend", "--experiment", "pseudo_anosov", "--dim", "4", "--lengths", "6", "--samples", "40",
                  "--no-timestamp"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(last_row(a.out), last_row(b.out));
}
