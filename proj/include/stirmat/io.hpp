#pragma once

// Text formats: triangle output (plain / csv / json) and OEIS b-files.

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stirmat/integer.hpp"
#include "stirmat/triangle.hpp"

namespace stirmat {

enum class OutputFormat { Plain, Csv, Json };

inline std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "plain") return OutputFormat::Plain;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    return std::nullopt;
}

// Plain: space separated rows. Csv: comma separated rows. Json: array of
// arrays of decimal strings. Every format ends with a single newline.
inline void write_triangle(std::ostream& out, const Triangle& t, OutputFormat format) {
    if (format == OutputFormat::Json) {
        auto rows = nlohmann::json::array();
        for (const auto& row : t.rows()) {
            auto r = nlohmann::json::array();
            for (const auto& v : row) r.push_back(v.str());
            rows.push_back(std::move(r));
        }
        out << rows.dump() << '\n';
        return;
    }
    const char sep = format == OutputFormat::Csv ? ',' : ' ';
    for (const auto& row : t.rows()) {
        for (std::size_t m = 0; m < row.size(); ++m) {
            if (m) out << sep;
            out << row[m];
        }
        out << '\n';
    }
}

class BFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BFileEntry {
    long long index;
    Integer value;
};

using BFile = std::vector<BFileEntry>;

/**
 * Parses OEIS b-file text: one "index value" pair per line, '#' starts a
 * comment line, blank lines are skipped. Indices must strictly increase.
 */
inline BFile parse_bfile(std::istream& in) {
    BFile entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string index_text;
        std::string value_text;
        std::string extra;
        fields >> index_text >> value_text;
        if (value_text.empty() || (fields >> extra)) {
            throw BFileError("b-file line " + std::to_string(line_no) + ": expected \"index value\"");
        }
        BFileEntry entry;
        try {
            std::size_t used = 0;
            entry.index = std::stoll(index_text, &used);
            if (used != index_text.size()) throw std::invalid_argument(index_text);
            const bool negative = value_text.front() == '-';
            const auto digits = std::string_view(value_text).substr(negative ? 1 : 0);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
                throw std::invalid_argument(value_text);
            }
            entry.value = Integer(value_text);
        } catch (const std::exception&) {
            throw BFileError("b-file line " + std::to_string(line_no) + ": malformed number");
        }
        if (!entries.empty() && entry.index <= entries.back().index) {
            throw BFileError("b-file line " + std::to_string(line_no) + ": index " + std::to_string(entry.index) +
                             " does not increase");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

inline BFile parse_bfile(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_bfile(in);
}

// Row-by-row linearization, optionally dropping column 0 of every row.
inline std::vector<Integer> linearize(const Triangle& t, bool skip_column0) {
    std::vector<Integer> out;
    for (const auto& row : t.rows()) out.insert(out.end(), row.begin() + (skip_column0 ? 1 : 0), row.end());
    return out;
}

// Number of linearized terms in rows 0..max_row.
inline std::size_t linearized_size(std::size_t max_row, bool skip_column0) {
    const auto rows = max_row + 1;
    return rows * (rows + 1) / 2 - (skip_column0 ? rows : 0);
}

struct Mismatch {
    long long index;
    Integer expected;
    Integer actual;
};

/**
 * Compares terms[j] against the b-file entry with index offset + j for
 * every j that both sides cover. Returns the first disagreement.
 */
inline std::optional<Mismatch> compare_with_bfile(const std::vector<Integer>& terms, const BFile& bfile,
                                                  long long offset) {
    for (const auto& e : bfile) {
        const long long j = e.index - offset;
        if (j < 0 || j >= static_cast<long long>(terms.size())) continue;
        if (terms[static_cast<std::size_t>(j)] != e.value) {
            return Mismatch{e.index, e.value, terms[static_cast<std::size_t>(j)]};
        }
    }
    return std::nullopt;
}

} // namespace stirmat
