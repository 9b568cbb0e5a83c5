#pragma once

// Command implementations behind the stirmat executable. Kept in a header
// so the tests can drive them with in-memory streams.

#include <cstddef>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stirmat/stirmat.hpp"

namespace stirmat::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct TriangleArgs {
    std::string a;
    std::string b;
    std::size_t rows = 0;
    bool is_signed = false;
    std::string format = "plain";
};

struct CheckArgs {
    std::string suite = "all";
    std::size_t max_n = 20;
    std::size_t oracle_max_n = 6;
};

struct CompareArgs {
    std::string a;
    std::string b;
    std::string bfile;
    long long offset = 0;
    bool skip_column0 = false;
    bool is_signed = false;
    bool row_sums = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline TriangleKind require_kind(const std::string& text) {
    if (auto kind = parse_kind(text)) return *kind;
    throw UsageError("unknown triangle kind '" + text + "' (expected binomial, stirling1, stirling2 or lah)");
}

// Base triangle or, when b is given, the product A*B.
inline Triangle build(const std::string& a, const std::string& b, std::size_t max_row) {
    const auto left = require_kind(a);
    if (b.empty()) return base_triangle(left, max_row);
    return composite_product({left, require_kind(b)}, max_row);
}

inline int run_triangle(const TriangleArgs& args, std::ostream& out) {
    const auto format = parse_format(args.format);
    if (!format) throw UsageError("unknown format '" + args.format + "' (expected plain, csv or json)");
    auto t = build(args.a, args.b, args.rows);
    if (args.is_signed) t = sign_twist(t);
    write_triangle(out, t, *format);
    return exit_ok;
}

inline int run_check(const CheckArgs& args, std::ostream& out) {
    std::vector<Suite> suites;
    if (args.suite == "all") {
        suites.assign(all_suites.begin(), all_suites.end());
    } else {
        for (auto s : all_suites) {
            if (args.suite == suite_name(s)) suites.push_back(s);
        }
        if (suites.empty()) throw UsageError("unknown suite '" + args.suite + "'");
    }
    CheckOptions options;
    options.max_n = args.max_n;
    options.oracle_max_n = args.oracle_max_n;

    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (auto suite : suites) {
        for (const auto& result : run_suite(suite, options)) {
            out << std::left << std::setw(8) << status_name(result.status) << std::setw(14) << result.suite
                << result.name;
            if (!result.detail.empty()) out << "  [" << result.detail << "]";
            out << '\n';
            switch (result.status) {
            case CheckStatus::Pass: ++passed; break;
            case CheckStatus::Fail: ++failed; break;
            case CheckStatus::Skipped: ++skipped; break;
            }
        }
    }
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? exit_ok : exit_mismatch;
}

inline int run_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
    // Validate the kinds before touching the file.
    require_kind(args.a);
    if (!args.b.empty()) require_kind(args.b);

    std::ifstream in(args.bfile);
    if (!in) {
        err << "error: cannot read b-file '" << args.bfile << "'\n";
        return exit_usage;
    }
    BFile bfile;
    try {
        bfile = parse_bfile(in);
    } catch (const BFileError& e) {
        err << "error: " << args.bfile << ": " << e.what() << '\n';
        return exit_usage;
    }
    if (bfile.empty() || bfile.back().index < args.offset) {
        out << "match: 0 terms compared\n";
        return exit_ok;
    }

    const auto needed = static_cast<std::size_t>(bfile.back().index - args.offset + 1);
    std::vector<Integer> terms;
    if (args.row_sums) {
        auto t = build(args.a, args.b, needed - 1);
        if (args.is_signed) t = sign_twist(t);
        for (std::size_t n = 0; n < t.order(); ++n) terms.push_back(row_total(t, n));
    } else {
        std::size_t max_row = 0;
        while (linearized_size(max_row, args.skip_column0) < needed) ++max_row;
        auto t = build(args.a, args.b, max_row);
        if (args.is_signed) t = sign_twist(t);
        terms = linearize(t, args.skip_column0);
    }

    if (auto mismatch = compare_with_bfile(terms, bfile, args.offset)) {
        out << "mismatch at index " << mismatch->index << ": b-file has " << mismatch->expected << ", computed "
            << mismatch->actual << '\n';
        return exit_mismatch;
    }
    std::size_t compared = 0;
    for (const auto& e : bfile) compared += e.index >= args.offset;
    out << "match: " << compared << " terms compared\n";
    return exit_ok;
}

} // namespace detail

/**
 * Runs the command line `args` (without the program name). Data goes to
 * `out`, diagnostics to `err`. Returns 0 on success or a passing check,
 * 1 on a failed check or b-file mismatch, 2 on bad usage or input.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact triangles of binomial, Stirling and Lah numbers and their products", "stirmat"};
    app.require_subcommand(1);

    detail::TriangleArgs tri;
    auto* triangle_cmd = app.add_subcommand("triangle", "Print a base triangle or the product A*B");
    triangle_cmd->add_option("--a", tri.a, "Left kind: binomial, stirling1, stirling2, lah")->required();
    triangle_cmd->add_option("--b", tri.b, "Right kind; omit for the base triangle");
    triangle_cmd->add_option("--rows", tri.rows, "Index of the last row")->required();
    triangle_cmd->add_flag("--signed", tri.is_signed, "Multiply entry (n,m) by (-1)^(n-m)");
    triangle_cmd->add_option("--format", tri.format, "plain, csv or json");

    detail::CheckArgs chk;
    auto* check_cmd = app.add_subcommand("check", "Verify the identity suites");
    check_cmd->add_option("--suite", chk.suite,
                          "closed-forms, recurrences, inverses, row-sums, bases, oracles, absorption or all");
    check_cmd->add_option("--max-n", chk.max_n, "Largest row index for algebraic suites");
    check_cmd->add_option("--oracle-max-n", chk.oracle_max_n, "Largest n for brute-force enumeration");

    detail::CompareArgs cmp;
    auto* compare_cmd = app.add_subcommand("oeis-compare", "Compare a triangle read by rows against a b-file");
    compare_cmd->add_option("--a", cmp.a, "Left kind")->required();
    compare_cmd->add_option("--b", cmp.b, "Right kind; omit for the base triangle");
    compare_cmd->add_option("--bfile", cmp.bfile, "Path to the b-file")->required();
    compare_cmd->add_option("--offset", cmp.offset, "b-file index of the first term")->required();
    compare_cmd->add_flag("--skip-column0", cmp.skip_column0, "Drop column 0 of every row");
    compare_cmd->add_flag("--signed", cmp.is_signed, "Sign-twist before comparing");
    compare_cmd->add_flag("--row-sums", cmp.row_sums, "Compare row sums instead of entries");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (triangle_cmd->parsed()) return detail::run_triangle(tri, out);
        if (check_cmd->parsed()) return detail::run_check(chk, out);
        return detail::run_compare(cmp, out, err);
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace stirmat::cli
