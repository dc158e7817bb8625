#pragma once

// Text formats: truth tables, per-coordinate Boolean expressions, and DOT
// export of nested graph layers.

#include <cctype>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trapnet/core.hpp"
#include "trapnet/dynamics.hpp"

namespace trapnet {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error(format(line, column, message)), line(line), column(column) {}

    int line;
    /// 1-based; 0 when the error concerns the whole line.
    int column;

private:
    static std::string format(int line, int column, const std::string& message) {
        std::string out = "line " + std::to_string(line);
        if (column > 0) out += ", column " + std::to_string(column);
        return out + ": " + message;
    }
};

enum class DocumentSource { truth_table, expression };

struct NetworkDocument {
    int n = 1;
    DocumentSource source = DocumentSource::truth_table;
    BooleanNetwork network;
    std::optional<std::string> name;
};

namespace detail {

struct TextLine {
    int number;
    std::string_view text;
};

inline std::vector<TextLine> split_lines(std::string_view text) {
    std::vector<TextLine> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back({++number, line});
        pos = end + 1;
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

/// Position of the first non-binary character, or npos.
inline std::size_t find_non_binary(std::string_view s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != '0' && s[i] != '1') return i;
    return std::string_view::npos;
}

}  // namespace detail

/// Grammar: optional "# name" first line, further '#' comments, header
/// "n=<k>", then 2^k rows "<config> <image>" in any order.
inline NetworkDocument parse_truth_table(std::string_view text) {
    NetworkDocument doc;
    std::optional<int> n;
    std::vector<Word> image;
    std::vector<bool> seen;
    std::size_t rows = 0;
    bool first_content = true;
    int last_line = 0;

    for (const auto& [number, raw] : detail::split_lines(text)) {
        last_line = number;
        const std::string_view line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (first_content && !n) {
                const std::string_view label = detail::trim(line.substr(1));
                if (!label.empty()) doc.name = std::string(label);
            }
            first_content = false;
            continue;
        }
        first_content = false;
        if (!n) {
            if (line.substr(0, 2) != "n=") throw ParseError(number, 1, "expected header 'n=<k>'");
            const std::string_view digits = line.substr(2);
            int k = 0;
            if (digits.empty() || digits.size() > 2) throw ParseError(number, 3, "bad dimension");
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(digits[i])))
                    throw ParseError(number, static_cast<int>(3 + i), "bad character in dimension");
                k = k * 10 + (digits[i] - '0');
            }
            if (k < 1 || k > kMaxDimension)
                throw ParseError(number, 3, "dimension " + std::to_string(k) + " outside 1.." +
                                                std::to_string(kMaxDimension));
            n = k;
            image.assign(cube_size(k), 0);
            seen.assign(cube_size(k), false);
            continue;
        }
        const std::size_t space = line.find(' ');
        if (space == std::string_view::npos) throw ParseError(number, 0, "expected '<config> <image>'");
        const std::string_view config = line.substr(0, space);
        const std::string_view value = detail::trim(line.substr(space + 1));
        const std::size_t value_col = line.size() - value.size() + 1;
        if (auto bad = detail::find_non_binary(config); bad != std::string_view::npos)
            throw ParseError(number, static_cast<int>(bad + 1), "bad character '" + std::string(1, config[bad]) + "'");
        if (auto bad = detail::find_non_binary(value); bad != std::string_view::npos)
            throw ParseError(number, static_cast<int>(value_col + bad),
                             "bad character '" + std::string(1, value[bad]) + "'");
        if (static_cast<int>(config.size()) != *n || static_cast<int>(value.size()) != *n)
            throw ParseError(number, 0, "ragged row: expected width " + std::to_string(*n));
        const Word x = detail::parse_bits(config, *n);
        if (seen[x]) throw ParseError(number, 1, "duplicate configuration " + std::string(config));
        seen[x] = true;
        image[x] = detail::parse_bits(value, *n);
        ++rows;
    }
    if (!n) throw ParseError(last_line + 1, 0, "missing header 'n=<k>'");
    if (rows != cube_size(*n)) {
        for (Word x = 0; x < seen.size(); ++x)
            if (!seen[x])
                throw ParseError(last_line, 0, "missing configuration " + detail::format_bits(x, *n));
    }
    doc.n = *n;
    doc.source = DocumentSource::truth_table;
    doc.network = BooleanNetwork(*n, std::move(image));
    return doc;
}

/// Canonical form: optional "# name", header, rows in increasing order.
inline std::string write_truth_table(const NetworkDocument& doc) {
    const BooleanNetwork& f = doc.network;
    std::string out;
    out.reserve(32 + f.size() * static_cast<std::size_t>(2 * f.n() + 2));
    if (doc.name) out += "# " + *doc.name + "\n";
    out += "n=" + std::to_string(f.n()) + "\n";
    for (Word x = 0; x < f.size(); ++x) {
        out += detail::format_bits(x, f.n());
        out += ' ';
        out += detail::format_bits(f.raw(x), f.n());
        out += '\n';
    }
    return out;
}

inline std::string write_truth_table(const BooleanNetwork& f, std::optional<std::string> name = std::nullopt) {
    return write_truth_table(NetworkDocument{f.n(), DocumentSource::truth_table, f, std::move(name)});
}

namespace detail {

/// Expression AST over x1..xn. Nodes live in a flat vector.
struct ExprNode {
    enum class Kind { constant, variable, negation, conjunction, exclusive, disjunction } kind;
    int value = 0;  // constant value or 1-based variable index
    int lhs = -1;
    int rhs = -1;
};

struct Expr {
    std::vector<ExprNode> nodes;
    int root = -1;

    [[nodiscard]] bool eval(Word x, int at) const {
        const ExprNode& e = nodes[static_cast<std::size_t>(at)];
        switch (e.kind) {
        case ExprNode::Kind::constant: return e.value != 0;
        case ExprNode::Kind::variable: return (x >> (e.value - 1)) & 1u;
        case ExprNode::Kind::negation: return !eval(x, e.lhs);
        case ExprNode::Kind::conjunction: return eval(x, e.lhs) && eval(x, e.rhs);
        case ExprNode::Kind::exclusive: return eval(x, e.lhs) != eval(x, e.rhs);
        case ExprNode::Kind::disjunction: return eval(x, e.lhs) || eval(x, e.rhs);
        }
        return false;
    }
    [[nodiscard]] bool eval(Word x) const { return eval(x, root); }
};

/// Recursive descent, precedence ! > & > ^ > |.
class ExprParser {
public:
    ExprParser(std::string_view text, int line, int column_offset)
        : text_(text), line_(line), offset_(column_offset) {}

    Expr parse() {
        expr_.root = parse_or();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return std::move(expr_);
    }

    /// Largest variable index referenced so far.
    [[nodiscard]] int max_variable() const { return max_var_; }
    [[nodiscard]] int max_variable_column() const { return max_var_col_; }

private:
    [[noreturn]] void fail(const std::string& what) const {
        const bool at_end = pos_ >= text_.size();
        throw ParseError(line_, offset_ + static_cast<int>(pos_) + 1,
                         at_end ? "syntax error at end of line: " + what : "syntax error: " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int add(ExprNode node) {
        expr_.nodes.push_back(node);
        return static_cast<int>(expr_.nodes.size() - 1);
    }

    int parse_binary(ExprNode::Kind kind, char op, int (ExprParser::*next)()) {
        int lhs = (this->*next)();
        while (accept(op)) {
            const int rhs = (this->*next)();
            lhs = add({kind, 0, lhs, rhs});
        }
        return lhs;
    }

    int parse_or() { return parse_binary(ExprNode::Kind::disjunction, '|', &ExprParser::parse_xor); }
    int parse_xor() { return parse_binary(ExprNode::Kind::exclusive, '^', &ExprParser::parse_and); }
    int parse_and() { return parse_binary(ExprNode::Kind::conjunction, '&', &ExprParser::parse_not); }

    int parse_not() {
        if (accept('!')) return add({ExprNode::Kind::negation, 0, parse_not(), -1});
        return parse_atom();
    }

    int parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected operand");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            const int inner = parse_or();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return add({ExprNode::Kind::constant, c - '0', -1, -1});
        }
        if (c == 'x') {
            const std::size_t start = pos_++;
            int index = 0;
            std::size_t digits = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                index = index * 10 + (text_[pos_++] - '0');
                if (++digits > 3) break;
            }
            if (digits == 0 || index < 1) {
                pos_ = start;
                fail("bad identifier");
            }
            if (index > max_var_) {
                max_var_ = index;
                max_var_col_ = offset_ + static_cast<int>(start) + 1;
            }
            return add({ExprNode::Kind::variable, index, -1, -1});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    int line_;
    int offset_;
    std::size_t pos_ = 0;
    Expr expr_;
    int max_var_ = 0;
    int max_var_col_ = 0;
};

}  // namespace detail

/// One "x<i>, <expr>" line per coordinate, any order; '#' comments allowed.
/// The dimension is the number of coordinate lines.
inline NetworkDocument parse_expression_network(std::string_view text) {
    struct Entry {
        int coordinate;
        int line;
        detail::Expr expr;
        int max_var;
        int max_var_col;
    };
    std::vector<Entry> entries;
    std::optional<std::string> name;
    bool first_content = true;
    int last_line = 0;

    for (const auto& [number, raw] : detail::split_lines(text)) {
        last_line = number;
        const std::string_view line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (first_content) {
                const std::string_view label = detail::trim(line.substr(1));
                if (!label.empty()) name = std::string(label);
            }
            first_content = false;
            continue;
        }
        first_content = false;
        const std::size_t lead = raw.find_first_not_of(" \t");
        if (line.front() != 'x') throw ParseError(number, static_cast<int>(lead + 1), "expected 'x<i>,'");
        std::size_t i = 1;
        int coordinate = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])) && i < 4)
            coordinate = coordinate * 10 + (line[i++] - '0');
        if (i == 1 || coordinate < 1) throw ParseError(number, static_cast<int>(lead + 2), "bad coordinate");
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size() || line[i] != ',')
            throw ParseError(number, static_cast<int>(lead + i + 1), "expected ','");
        ++i;
        for (const Entry& e : entries)
            if (e.coordinate == coordinate)
                throw ParseError(number, static_cast<int>(lead + 1),
                                 "duplicate coordinate x" + std::to_string(coordinate));
        detail::ExprParser parser(line.substr(i), number, static_cast<int>(lead + i));
        detail::Expr expr = parser.parse();
        entries.push_back({coordinate, number, std::move(expr), parser.max_variable(), parser.max_variable_column()});
    }

    const int n = static_cast<int>(entries.size());
    if (n == 0) throw ParseError(last_line + 1, 0, "no coordinate lines");
    if (n > kMaxDimension)
        throw ParseError(entries.back().line, 0, "dimension " + std::to_string(n) + " exceeds " +
                                                     std::to_string(kMaxDimension));
    std::vector<const Entry*> by_coordinate(static_cast<std::size_t>(n), nullptr);
    for (const Entry& e : entries) {
        if (e.coordinate > n)
            throw ParseError(e.line, 0, "missing coordinate line for some x<i> with i <= " + std::to_string(n) +
                                            " (found x" + std::to_string(e.coordinate) + ")");
        by_coordinate[static_cast<std::size_t>(e.coordinate - 1)] = &e;
    }
    for (const Entry& e : entries)
        if (e.max_var > n)
            throw ParseError(e.line, e.max_var_col, "undefined variable x" + std::to_string(e.max_var));

    std::vector<Word> image(cube_size(n), 0);
    for (Word x = 0; x < image.size(); ++x)
        for (int c = 0; c < n; ++c)
            if (by_coordinate[static_cast<std::size_t>(c)]->expr.eval(x)) image[x] |= Word{1} << c;

    return NetworkDocument{n, DocumentSource::expression, BooleanNetwork(n, std::move(image)), std::move(name)};
}

/// Dispatches on content: a document whose first non-comment line starts
/// with "n=" is a truth table, otherwise an expression network.
inline NetworkDocument parse_network(std::string_view text) {
    for (const auto& [number, raw] : detail::split_lines(text)) {
        const std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        return line.substr(0, 2) == "n=" ? parse_truth_table(text) : parse_expression_network(text);
    }
    return parse_truth_table(text);
}

inline const std::vector<std::string>& default_layer_colors() {
    static const std::vector<std::string> colors{"blue", "magenta", "orange"};
    return colors;
}

/// DOT digraph of nested layers. Each non-loop arc takes the color of the
/// first layer containing it. Layers must grow under arc inclusion.
inline std::string export_dot(std::span<const HypercubeGraph> layers, std::span<const std::string> labels = {},
                              std::span<const std::string> colors = default_layer_colors()) {
    if (layers.empty()) throw std::invalid_argument("export_dot: no layers");
    const int n = layers.front().n();
    for (std::size_t k = 0; k < layers.size(); ++k) {
        require_same_dimension(n, layers[k].n());
        if (k > 0 && !layers[k - 1].is_subgraph_of(layers[k]))
            throw std::invalid_argument("export_dot: layer " + std::to_string(k) + " does not contain layer " +
                                        std::to_string(k - 1));
    }
    if (colors.size() < layers.size()) throw std::invalid_argument("export_dot: not enough layer colors");

    std::string out = "digraph {\n";
    for (std::size_t k = 0; k < layers.size(); ++k) {
        out += "  // layer " + std::to_string(k) + ": " + colors[k];
        if (k < labels.size()) out += " " + labels[k];
        out += "\n";
    }
    const Word size = static_cast<Word>(cube_size(n));
    for (Word x = 0; x < size; ++x) out += "  \"" + detail::format_bits(x, n) + "\";\n";
    for (Word x = 0; x < size; ++x) {
        const std::string from = detail::format_bits(x, n);
        layers.back().out(x).for_each([&](Word y) {
            if (y == x) return;
            std::size_t k = 0;
            while (!layers[k].has_arc(x, y)) ++k;
            out += "  \"" + from + "\" -> \"" + detail::format_bits(y, n) + "\" [color=" + colors[k] + "];\n";
        });
    }
    out += "}\n";
    return out;
}

inline std::string export_dot(const HypercubeGraph& graph) {
    return export_dot(std::span<const HypercubeGraph>(&graph, 1));
}

}  // namespace trapnet
