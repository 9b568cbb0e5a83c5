#include <gtest/gtest.h>

#include <sstream>

#include "stirmat/stirmat.hpp"

using namespace stirmat;

TEST(Output, PlainCsvJson) {
    const auto t = base_triangle(TriangleKind::Stirling2, 3);
    std::ostringstream plain, csv, json;
    write_triangle(plain, t, OutputFormat::Plain);
    write_triangle(csv, t, OutputFormat::Csv);
    write_triangle(json, t, OutputFormat::Json);
    EXPECT_EQ(plain.str(), "1\n0 1\n0 1 1\n0 1 3 1\n");
    EXPECT_EQ(csv.str(), "1\n0,1\n0,1,1\n0,1,3,1\n");
    EXPECT_EQ(json.str(), R"([["1"],["0","1"],["0","1","1"],["0","1","3","1"]])"
                          "\n");
}

TEST(Output, JsonKeepsDigitsBeyondDoublePrecision) {
    std::ostringstream json;
    write_triangle(json, base_triangle(TriangleKind::Lah, 22), OutputFormat::Json);
    const auto parsed = nlohmann::json::parse(json.str());
    EXPECT_EQ(parsed[22][1].get<std::string>(), factorial(22).str());
}

TEST(BFile, ParsesCommentsAndBlankLines) {
    const auto b = parse_bfile("# header\n\n1 1\n2 -3\r\n  3   12345678901234567890123\n");
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b[0].index, 1);
    EXPECT_EQ(b[1].value, -3);
    EXPECT_EQ(b[2].value, Integer("12345678901234567890123"));
    EXPECT_TRUE(parse_bfile("").empty());
}

TEST(BFile, RejectsGarbage) {
    EXPECT_THROW(parse_bfile("1 2 3\n"), BFileError);
    EXPECT_THROW(parse_bfile("1\n"), BFileError);
    EXPECT_THROW(parse_bfile("x 2\n"), BFileError);
    EXPECT_THROW(parse_bfile("1 2x\n"), BFileError);
    EXPECT_THROW(parse_bfile("2 1\n2 1\n"), BFileError);
    EXPECT_THROW(parse_bfile("3 1\n2 1\n"), BFileError);
}

TEST(BFile, LinearizeAndCompare) {
    const auto t = base_triangle(TriangleKind::Stirling2, 3);
    EXPECT_EQ(linearize(t, false).size(), linearized_size(3, false));
    EXPECT_EQ(linearize(t, true).size(), linearized_size(3, true));
    const std::vector<Integer> skipped{1, 1, 1, 1, 3, 1};
    EXPECT_EQ(linearize(t, true), skipped);

    const auto b = parse_bfile("1 1\n2 1\n3 1\n4 1\n5 3\n6 1\n7 1\n");
    EXPECT_FALSE(compare_with_bfile(skipped, b, 1).has_value()); // index 7 lies past the terms
    const auto bad = compare_with_bfile(skipped, parse_bfile("5 4\n"), 1);
    ASSERT_TRUE(bad.has_value());
    EXPECT_EQ(bad->index, 5);
    EXPECT_EQ(bad->expected, 4);
    EXPECT_EQ(bad->actual, 3);
}
