#include "unimod/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace unimod {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i])) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !is_blank(line[i])) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

BigInt parse_integer(const Token& tok, std::size_t line_no) {
    std::string_view s = tok.text;
    std::size_t digits_from = s.front() == '-' ? 1 : 0;
    if (digits_from == s.size()) throw ParseError(line_no, tok.column, "expected an integer, found '-'");
    for (std::size_t i = digits_from; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError(line_no, tok.column + i,
                             "unexpected character '" + std::string(1, s[i]) + "' in integer '" + std::string(s) + "'");
    }
    return BigInt(std::string(s), 10);
}

std::size_t parse_dimension(const Token& tok, std::size_t line_no) {
    BigInt v = parse_integer(tok, line_no);
    if (v < 1 || v > 100000) throw ParseError(line_no, tok.column, "dimension must be a positive integer");
    return v.get_ui();
}

} // namespace

IntMatrix parse_matrix_file(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t k = 0, n = 0;
    bool have_header = false;
    std::vector<BigInt> entries;
    std::size_t rows_read = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto toks = tokenize(line);
        if (toks.empty() || toks.front().text.front() == '#') {
            if (eol == text.size()) break;
            continue;
        }
        if (!have_header) {
            if (toks.size() != 2)
                throw ParseError(line_no, toks.size() > 2 ? toks[2].column : line.size() + 1,
                                 "header must be exactly two positive integers 'k n'");
            k = parse_dimension(toks[0], line_no);
            n = parse_dimension(toks[1], line_no);
            have_header = true;
            entries.reserve(k * n);
        } else {
            if (rows_read == k) throw ParseError(line_no, toks.front().column, "extra non-blank line after " +
                                                                                   std::to_string(k) + " rows");
            if (toks.size() != n)
                throw ParseError(line_no, toks.size() > n ? toks[n].column : line.size() + 1,
                                 "expected " + std::to_string(n) + " integers, found " + std::to_string(toks.size()));
            for (const auto& t : toks) entries.push_back(parse_integer(t, line_no));
            ++rows_read;
        }
        if (eol == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no, 1, "missing header 'k n'");
    if (rows_read != k)
        throw ParseError(line_no, 1, "expected " + std::to_string(k) + " rows, found " + std::to_string(rows_read));
    return IntMatrix(k, n, std::move(entries));
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_file(ss.str());
}

std::string format_matrix_file(const IntMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

} // namespace unimod
