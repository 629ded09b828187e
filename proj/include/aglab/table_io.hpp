#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "aglab/groupoid.hpp"

namespace aglab {

namespace io_detail {

struct Token {
    std::string text;
    int line;    // 1-based
    int column;  // 1-based, at the token start
};

// One content line split into whitespace-separated tokens. Lines whose first
// non-blank character is '#' are comments; blank lines are skipped.
struct ContentLine {
    std::vector<Token> tokens;
    int line;
};

inline std::vector<ContentLine> tokenize(const std::string& text) {
    std::vector<ContentLine> out;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string line =
            text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        ++line_number;
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;

        ContentLine content{{}, line_number};
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            if (content.tokens.empty() && line[i] == '#') break;  // comment line
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            content.tokens.push_back(
                Token{line.substr(i, j - i), line_number, static_cast<int>(i) + 1});
            i = j;
        }
        if (!content.tokens.empty()) out.push_back(std::move(content));
        if (eol == std::string::npos) break;
    }
    return out;
}

}  // namespace io_detail

// Parses the Cayley table text format: line 1 the order, line 2 the labels,
// then one row per left operand. '#' starts a comment line.
inline FiniteGroupoid parse_table(const std::string& text, int max_order = kMaxOrder) {
    using io_detail::ContentLine;
    const std::vector<ContentLine> lines = io_detail::tokenize(text);
    if (lines.empty()) {
        throw ParseError("empty table", 1, 1);
    }
    const ContentLine& head = lines[0];
    if (head.tokens.size() != 1) {
        throw ParseError("expected a single integer order", head.line,
                         head.tokens[std::min<std::size_t>(1, head.tokens.size() - 1)].column);
    }
    int order = 0;
    try {
        std::size_t used = 0;
        order = std::stoi(head.tokens[0].text, &used);
        if (used != head.tokens[0].text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("order \"" + head.tokens[0].text + "\" is not an integer", head.line,
                         head.tokens[0].column);
    }
    if (order < 1) {
        throw ParseError("order must be positive", head.line, head.tokens[0].column);
    }
    if (order > max_order) {
        throw SizeError("order " + std::to_string(order) + " exceeds the order guard "
                        + std::to_string(max_order));
    }
    if (lines.size() < 2) {
        throw ParseError("missing label line", head.line + 1, 1);
    }
    const ContentLine& label_line = lines[1];
    if (label_line.tokens.size() != static_cast<std::size_t>(order)) {
        throw ParseError("expected " + std::to_string(order) + " labels, got "
                             + std::to_string(label_line.tokens.size()),
                         label_line.line, label_line.tokens[0].column);
    }
    std::vector<std::string> labels;
    for (const auto& token : label_line.tokens) {
        for (const std::string& seen : labels) {
            if (seen == token.text) {
                throw ParseError("duplicate label \"" + token.text + "\"", token.line,
                                 token.column);
            }
        }
        labels.push_back(token.text);
    }
    const auto index_of = [&](const io_detail::Token& token) -> int {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == token.text) return static_cast<int>(i);
        }
        throw ParseError("unknown label \"" + token.text + "\"", token.line, token.column);
    };

    if (lines.size() < static_cast<std::size_t>(order) + 2) {
        throw ParseError("expected " + std::to_string(order) + " table rows, got "
                             + std::to_string(lines.size() - 2),
                         lines.back().line + 1, 1);
    }
    if (lines.size() > static_cast<std::size_t>(order) + 2) {
        const ContentLine& extra = lines[order + 2];
        throw ParseError("unexpected content after the table", extra.line,
                         extra.tokens[0].column);
    }
    std::vector<int> flat(order * order);
    for (int row = 0; row < order; ++row) {
        const ContentLine& content = lines[row + 2];
        if (content.tokens.size() != static_cast<std::size_t>(order)) {
            throw ParseError("row has " + std::to_string(content.tokens.size())
                                 + " entries, expected " + std::to_string(order),
                             content.line, content.tokens[0].column);
        }
        for (int col = 0; col < order; ++col) {
            flat[row * order + col] = index_of(content.tokens[col]);
        }
    }
    return FiniteGroupoid(order, flat, std::move(labels));
}

// Canonical whitespace-normal form: single spaces, one trailing newline per
// line, no comments. parse(serialize(g)) reproduces g exactly.
inline std::string serialize_table(const FiniteGroupoid& g) {
    std::ostringstream out;
    const int n = g.order();
    out << n << '\n';
    for (int x = 0; x < n; ++x) {
        out << g.label(x) << (x + 1 == n ? '\n' : ' ');
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            out << g.label(g.at(a, b)) << (b + 1 == n ? '\n' : ' ');
        }
    }
    return out.str();
}

}  // namespace aglab
