#include "conceptminer/cli.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace conceptminer;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(CONCEPTMINER_DATA_DIR) / name).string(); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

// Drops the runtime column so rows can be compared across runs.
std::string without_runtime(const std::string& row) {
    std::string out;
    std::size_t col = 0;
    for (char ch : row) {
        if (ch == ',') ++col;
        if (col != 4 || ch == ',') out += ch;
    }
    return out;
}

class CliTest : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir = fs::temp_directory_path() / (std::string("conceptminer_cli_") + info->name());
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) {
        const auto p = dir / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
};

}  // namespace

TEST_F(CliTest, MineSfc2aOnTable1) {
    const auto tsv = (dir / "rules.tsv").string();
    const auto cov = (dir / "cov.txt").string();
    const auto r = invoke({"mine", "--input", data("table1.csv"), "--algo", "sfc2a", "--min-sup", "0.35",
                           "--min-conf", "0.75", "--out", tsv, "--dump-coverage", cov});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines_of(r.out);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0], cli::metrics_header);
    EXPECT_EQ(without_runtime(out[1]), "table1,sfc2a,0.350000,0.750000,,6,2");
    const auto rules = lines_of(slurp(tsv));
    ASSERT_EQ(rules.size(), 3u);
    EXPECT_EQ(rules[0], rule_tsv_header);
    EXPECT_EQ(rules[1], "A\tB\t0.400000\t1.000000\tsfc2a");
    EXPECT_EQ(rules[2], "D\tC\t0.400000\t1.000000\tsfc2a");
    const auto ctx = testing_support::table1();
    EXPECT_TRUE(validate_coverage(ctx, sfc2a(ctx)).ok());
    EXPECT_EQ(lines_of(slurp(cov)).size(), 6u);
}

TEST_F(CliTest, MineAprioriAllFormatsAgree) {
    std::string first;
    for (const char* f : {"table1.csv", "table1.dat", "table1.cxt"}) {
        const auto tsv = (dir / (std::string(f) + ".tsv")).string();
        const auto r = invoke({"mine", "--input", data(f), "--algo", "apriori", "--out", tsv});
        ASSERT_EQ(r.code, 0) << f << ": " << r.err;
        const auto rows = lines_of(slurp(tsv));
        EXPECT_EQ(rows.size(), 3u) << f;
        if (first.empty()) first = without_runtime(lines_of(r.out)[1]);
    }
    EXPECT_EQ(first, "table1,apriori,0.350000,0.750000,,7,2");
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(invoke({"mine", "--input", (dir / "missing.dat").string(), "--algo", "sfc2a"}).code, 2);
    EXPECT_EQ(invoke({"mine", "--input", data("table1.dat"), "--algo", "sfc2a", "--min-sup", "1.5"}).code, 2);
    EXPECT_EQ(invoke({"mine", "--input", data("table1.dat"), "--algo", "apriori", "--dump-coverage",
                      (dir / "c.txt").string()})
                  .code,
              2);
    EXPECT_EQ(invoke({"mine", "--input", data("table1.dat"), "--algo", "eclat"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    const auto bad = write("bad.dat", "1 2 x\n");
    const auto r = invoke({"mine", "--input", bad, "--algo", "apriori"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
}

TEST_F(CliTest, HelpIsNotAnError) { EXPECT_EQ(invoke({"--help"}).code, 0); }

TEST_F(CliTest, CompareTable1) {
    const auto r = invoke({"compare", "--input", data("table1.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines_of(r.out);
    ASSERT_EQ(out.size(), 6u);
    EXPECT_EQ(out[0], cli::metrics_header);
    EXPECT_EQ(without_runtime(out[1]), "table1,sfc2a,0.350000,0.750000,,6,2");
    EXPECT_EQ(without_runtime(out[2]), "table1,apriori,0.350000,0.750000,,7,2");
    EXPECT_EQ(out[3], "");
    EXPECT_EQ(out[4], "only_in_apriori,only_in_sfc2a,common");
    EXPECT_EQ(out[5], "0,0,2");
}

TEST_F(CliTest, CompareEmptyInput) {
    const auto empty = write("empty.dat", "");
    const auto r = invoke({"compare", "--input", empty});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines_of(r.out);
    ASSERT_EQ(out.size(), 6u);
    EXPECT_EQ(without_runtime(out[1]), "empty,sfc2a,0.350000,0.750000,,0,0");
    EXPECT_EQ(without_runtime(out[2]), "empty,apriori,0.350000,0.750000,,0,0");
    EXPECT_EQ(out[5], "0,0,0");
}

TEST_F(CliTest, ConceptsListing) {
    const auto r = invoke({"concepts", "--input", data("table1.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines_of(r.out);
    ASSERT_EQ(out.size(), 8u);
    EXPECT_EQ(out[1], "{o1,o2} | {A,B}");
    const auto dot = invoke({"concepts", "--input", data("table1.csv"), "--dot"});
    ASSERT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out, export_dot(enumerate_concepts(testing_support::table1())));
}

TEST_F(CliTest, ConceptsGuard) {
    std::string row;
    for (int i = 0; i < 30; ++i) row += std::to_string(i) + " ";
    const auto wide = write("wide.dat", row + "\n");
    const auto refused = invoke({"concepts", "--input", wide});
    EXPECT_EQ(refused.code, 3);
    EXPECT_NE(refused.err.find("24"), std::string::npos) << refused.err;
    EXPECT_EQ(invoke({"concepts", "--input", wide, "--force"}).code, 0);

    ::setenv("CONCEPTMINER_GUARD_PROPS", "40", 1);
    EXPECT_EQ(invoke({"concepts", "--input", wide}).code, 0);
    ::setenv("CONCEPTMINER_GUARD_PROPS", "3", 1);
    EXPECT_EQ(invoke({"concepts", "--input", data("table1.dat")}).code, 3);
    ::unsetenv("CONCEPTMINER_GUARD_PROPS");
}

TEST_F(CliTest, BenchManifest) {
    write("t1.csv", testing_support::table1_csv);
    write("t2.dat", testing_support::table1_fimi);
    const auto manifest = write("m.csv", "# two datasets\npath,format,min_sup,min_conf\nt1.csv,csv,0.35,0.75\n"
                                         "t2.dat,fimi,0.35,0.5\n");
    const auto metrics = (dir / "metrics.csv").string();
    const auto r = invoke({"bench", "--manifest", manifest, "--out", metrics, "--repeat", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines_of(r.out);
    ASSERT_EQ(out.size(), 5u);
    EXPECT_EQ(without_runtime(out[1]), "t1,sfc2a,0.350000,0.750000,,6,2");
    EXPECT_EQ(without_runtime(out[2]), "t1,apriori,0.350000,0.750000,,7,2");
    EXPECT_EQ(without_runtime(out[4]), "t2,apriori,0.350000,0.500000,,7,6");
    EXPECT_EQ(lines_of(slurp(metrics)), out);

    ASSERT_EQ(invoke({"bench", "--manifest", manifest, "--out", metrics}).code, 0);
    const auto appended = lines_of(slurp(metrics));
    ASSERT_EQ(appended.size(), 9u);
    EXPECT_EQ(without_runtime(appended[5]), without_runtime(out[1]));
    EXPECT_EQ(std::count(appended.begin(), appended.end(), std::string(cli::metrics_header)), 1);
}

TEST_F(CliTest, BadManifest) {
    EXPECT_EQ(invoke({"bench", "--manifest", write("a.csv", "path,fmt\nx,fimi\n")}).code, 2);
    EXPECT_EQ(invoke({"bench", "--manifest", write("b.csv", "path,format,min_sup,min_conf\nx.dat,fimi,abc,0.5\n")})
                  .code,
              2);
    EXPECT_EQ(invoke({"bench", "--manifest", write("c.csv", "path,format,min_sup,min_conf\nnone.dat,fimi,0.3,0.5\n")})
                  .code,
              2);
    EXPECT_EQ(invoke({"bench", "--manifest", (dir / "absent.csv").string()}).code, 2);
    EXPECT_EQ(invoke({"bench", "--manifest", write("d.csv", "")}).code, 2);
    EXPECT_EQ(invoke({"bench", "--manifest", write("e.csv", "path,format,min_sup,min_conf\n"), "--repeat", "0"}).code,
              2);
}

TEST_F(CliTest, MedianOfRuns) {
    EXPECT_EQ(cli::median({3, 1, 2}), 2);
    EXPECT_EQ(cli::median({4, 1, 2, 3}), 2.5);
}

TEST_F(CliTest, RepeatedMineIsByteIdentical) {
    for (const char* algo : {"sfc2a", "apriori"}) {
        std::vector<std::string> rules, covs;
        for (int k = 0; k < 2; ++k) {
            const auto tsv = (dir / ("r" + std::to_string(k) + ".tsv")).string();
            std::vector<std::string> args{"mine", "--input", data("table1.dat"), "--algo", algo, "--min-conf",
                                          "0.5", "--out", tsv};
            const auto cov = (dir / ("c" + std::to_string(k) + ".txt")).string();
            if (std::string(algo) == "sfc2a") args.insert(args.end(), {"--dump-coverage", cov});
            ASSERT_EQ(invoke(args).code, 0);
            rules.push_back(slurp(tsv));
            if (std::string(algo) == "sfc2a") covs.push_back(slurp(cov));
        }
        EXPECT_EQ(rules[0], rules[1]);
        if (!covs.empty()) {
            EXPECT_EQ(covs[0], covs[1]);
        }
    }
}
