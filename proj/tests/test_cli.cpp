#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = stirmat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STIRMAT_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path.string();
}

} // namespace

TEST(CliTriangle, PlainOutput) {
    EXPECT_EQ(run({"triangle", "--a", "stirling2", "--rows", "3"}).out, "1\n0 1\n0 1 1\n0 1 3 1\n");
    EXPECT_EQ(run({"triangle", "--a", "binomial", "--rows", "0"}).out, "1\n");
    const auto composite = run({"triangle", "--a", "binomial", "--b", "stirling2", "--rows", "3"});
    EXPECT_EQ(composite.code, 0);
    EXPECT_EQ(composite.out, "1\n1 1\n1 3 1\n1 7 6 1\n");
}

TEST(CliTriangle, SignedAndFormats) {
    EXPECT_EQ(run({"triangle", "--a", "binomial", "--rows", "2", "--signed"}).out, "1\n-1 1\n1 -2 1\n");
    EXPECT_EQ(run({"triangle", "--a", "lah", "--rows", "2", "--format", "csv"}).out, "1\n0,1\n0,2,1\n");
    EXPECT_EQ(run({"triangle", "--a", "lah", "--rows", "1", "--format", "json"}).out, "[[\"1\"],[\"0\",\"1\"]]\n");
}

TEST(CliTriangle, OutputIsDeterministic) {
    const std::vector<std::string> args{"triangle", "--a", "stirling1", "--b", "lah", "--rows", "15"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliTriangle, UsageErrors) {
    EXPECT_EQ(run({"triangle", "--a", "fibonacci", "--rows", "3"}).code, 2);
    EXPECT_EQ(run({"triangle", "--a", "lah", "--rows", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"triangle", "--a", "lah", "--rows", "3", "--bogus"}).code, 2);
    EXPECT_EQ(run({"triangle", "--rows", "3"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const auto bad = run({"frobnicate"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_FALSE(bad.err.empty());
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliCheck, SuitesPass) {
    const auto closed = run({"check", "--suite", "closed-forms", "--max-n", "10"});
    EXPECT_EQ(closed.code, 0) << closed.out;
    EXPECT_NE(closed.out.find("PASS"), std::string::npos);
    EXPECT_EQ(closed.out.find("FAIL"), std::string::npos);

    const auto oracles = run({"check", "--suite", "oracles", "--oracle-max-n", "6"});
    EXPECT_EQ(oracles.code, 0) << oracles.out;

    const auto degenerate = run({"check", "--suite", "all", "--max-n", "0"});
    EXPECT_EQ(degenerate.code, 0) << degenerate.out;
}

TEST(CliCheck, OracleBoundsBecomeSkips) {
    const auto r = run({"check", "--suite", "oracles", "--oracle-max-n", "8"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("SKIPPED"), std::string::npos);
}

TEST(CliCheck, UnknownSuite) { EXPECT_EQ(run({"check", "--suite", "everything"}).code, 2); }

TEST(CliCompare, TableFixtures) {
    // A008277 lists {n,k} from (1,1); (C,S2) row n is {n+1,m+1}.
    EXPECT_EQ(run({"oeis-compare", "--a", "binomial", "--b", "stirling2", "--bfile", data("b008277.txt"),
                   "--offset", "1"})
                  .code,
              0);
    EXPECT_EQ(run({"oeis-compare", "--a", "stirling2", "--bfile", data("b008277.txt"), "--offset", "1",
                   "--skip-column0"})
                  .code,
              0);
    EXPECT_EQ(run({"oeis-compare", "--a", "stirling1", "--b", "stirling1", "--bfile", data("b325872.txt"),
                   "--offset", "0", "--signed"})
                  .code,
              0);
}

TEST(CliCompare, DetectsMismatch) {
    // Unsigned (S1,S1) against the signed listing.
    const auto r = run({"oeis-compare", "--a", "stirling1", "--b", "stirling1", "--bfile", data("b325872.txt"),
                        "--offset", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("mismatch at index 4"), std::string::npos) << r.out;
}

TEST(CliCompare, RowSums) {
    EXPECT_EQ(run({"oeis-compare", "--a", "stirling1", "--b", "stirling2", "--bfile", data("b000262.txt"),
                   "--offset", "0", "--row-sums"})
                  .code,
              0);
}

TEST(CliCompare, EmptyAndBrokenFiles) {
    const auto empty = temp_file("stirmat_empty_bfile.txt", "# nothing here\n");
    EXPECT_EQ(run({"oeis-compare", "--a", "lah", "--b", "lah", "--bfile", empty, "--offset", "0"}).code, 0);
    const auto garbled = temp_file("stirmat_garbled_bfile.txt", "0 1\n1 one\n");
    EXPECT_EQ(run({"oeis-compare", "--a", "lah", "--bfile", garbled, "--offset", "0"}).code, 2);
    EXPECT_EQ(run({"oeis-compare", "--a", "lah", "--bfile", "/nonexistent/b.txt", "--offset", "0"}).code, 2);
    EXPECT_EQ(run({"oeis-compare", "--a", "nope", "--bfile", empty, "--offset", "0"}).code, 2);
}
