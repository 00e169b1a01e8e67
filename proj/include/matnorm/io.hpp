// io.hpp - text formats: matrix CSV, the graph edge-list format, norm-pair
// tokens, and round-trippable value formatting.
//
// Matrix CSV: one row per line, comma-separated decimal literals (scientific
// notation fine), uniform column count.  Graph files: first significant line
// is the vertex count, then one "i j" edge per line with 1 <= i < j <= n;
// '#' starts a comment.  Values are printed with %.17g, which round-trips
// binary64 exactly and never consults the locale.

#pragma once

#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matnorm/core.hpp"
#include "matnorm/hardness.hpp"

namespace matnorm {

inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    // A trailing newline is not an extra (empty) row.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

inline double parse_double_token(std::string_view token, std::size_t line_no,
                                 std::size_t col_no) {
    std::string_view t = trim(token);
    if (t.empty()) throw parse_error("empty field", line_no, col_no);
    if (t.front() == '+' && t.size() > 1) t.remove_prefix(1);  // from_chars takes no '+'
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw parse_error("cannot parse '" + std::string(t) + "' as a number", line_no, col_no);
    if (!std::isfinite(v))
        throw parse_error("non-finite value '" + std::string(t) + "'", line_no, col_no);
    return v;
}

inline std::uint64_t parse_count_token(std::string_view token, std::size_t line_no,
                                       std::size_t col_no) {
    const std::string_view t = trim(token);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw parse_error("cannot parse '" + std::string(t) + "' as a positive integer",
                          line_no, col_no);
    return v;
}

}  // namespace detail

inline Matrix parse_matrix_csv(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty()) throw parse_error("empty input", 1, 1);

    std::vector<double> entries;
    std::size_t cols = 0;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string_view line = lines[li];
        std::size_t field = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string_view token =
                comma == std::string_view::npos ? line.substr(start)
                                                : line.substr(start, comma - start);
            ++field;
            entries.push_back(detail::parse_double_token(token, li + 1, field));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (li == 0) {
            cols = field;
        } else if (field != cols) {
            throw parse_error("ragged row: expected " + std::to_string(cols) +
                                  " values, got " + std::to_string(field),
                              li + 1, 1);
        }
    }
    return Matrix(lines.size(), cols, std::move(entries));
}

inline std::string format_matrix_csv(const Matrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += ',';
            out += format_value(a(i, j));
        }
        out += '\n';
    }
    return out;
}

inline Graph parse_graph(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::optional<std::size_t> n;
    std::vector<Graph::Edge> edges;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = lines[li];
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            if (pos >= line.size()) break;
            std::size_t end = pos;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
            tokens.push_back(line.substr(pos, end - pos));
            pos = end;
        }

        if (!n) {
            if (tokens.size() != 1)
                throw parse_error("expected the vertex count alone on the first line", li + 1, 1);
            const std::uint64_t count = detail::parse_count_token(tokens[0], li + 1, 1);
            if (count == 0) throw parse_error("vertex count must be at least 1", li + 1, 1);
            n = static_cast<std::size_t>(count);
            continue;
        }

        if (tokens.size() != 2)
            throw parse_error("expected an edge 'i j'", li + 1, 1);
        const std::uint64_t i = detail::parse_count_token(tokens[0], li + 1, 1);
        const std::uint64_t j = detail::parse_count_token(tokens[1], li + 1, 2);
        if (i < 1 || j < 1 || i > *n || j > *n)
            throw parse_error("edge endpoint out of range [1, " + std::to_string(*n) + "]",
                              li + 1, 1);
        if (i >= j)
            throw parse_error("edges must satisfy i < j (no self-loops)", li + 1, 1);
        const Graph::Edge e{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)};
        for (const auto& seen : edges)
            if (seen == e) throw parse_error("duplicate edge", li + 1, 1);
        edges.push_back(e);
    }

    if (!n) throw parse_error("missing vertex count", 1, 1);
    return Graph(*n, std::move(edges));
}

// "1", "2" or "inf".
inline std::optional<NormIndex> parse_norm_index(std::string_view s) {
    s = detail::trim(s);
    if (s == "1") return NormIndex::One;
    if (s == "2") return NormIndex::Two;
    if (s == "inf") return NormIndex::Infinity;
    return std::nullopt;
}

// "p,q" as typed on the command line, e.g. "inf,2".
inline std::optional<NormPair> parse_norm_pair(std::string_view s) {
    const std::size_t comma = s.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    const auto p = parse_norm_index(s.substr(0, comma));
    const auto q = parse_norm_index(s.substr(comma + 1));
    if (!p || !q) return std::nullopt;
    return NormPair{*p, *q};
}

inline std::string pair_label(NormPair pair) {
    return std::string(to_string(pair.p)) + "," + to_string(pair.q);
}

// Comma-free token for CSV fields, e.g. "inf-2".
inline std::string pair_token(NormPair pair) {
    return std::string(to_string(pair.p)) + "-" + to_string(pair.q);
}

}  // namespace matnorm
