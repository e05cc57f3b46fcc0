#include "sca/text.hpp"

#include <charconv>
#include <sstream>

namespace sca {

std::string ParseError::str() const {
    std::ostringstream ss;
    ss << "parse error at line " << line << ", column " << column;
    if (!token.empty()) {
        ss << " ('" << token << "')";
    }
    ss << ": " << message;
    return ss.str();
}

namespace {

ParseError err(std::size_t line, std::size_t col, std::string tok, std::string msg) {
    return ParseError{line, col, std::move(tok), std::move(msg)};
}

}  // namespace

PatternParse parse_pattern(std::string_view text) {
    PatternParse out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    int prev_parity = -1;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        if (i >= line.size() || line[i] == '#') {
            continue;
        }
        if (line[i] != '@') {
            out.error = err(line_no, i + 1, std::string(1, line[i]), "expected '@<base>'");
            return out;
        }
        std::size_t num_start = ++i;
        if (i < line.size() && (line[i] == '-' || line[i] == '+')) {
            ++i;
        }
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
            ++i;
        }
        long long base = 0;
        auto conv = std::from_chars(line.data() + num_start, line.data() + i, base);
        if (conv.ec != std::errc() || conv.ptr != line.data() + i || i == num_start) {
            out.error = err(line_no, num_start + 1, std::string(line.substr(num_start, i - num_start)),
                            "bad base index");
            return out;
        }
        std::vector<CellContent> cells;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
                ++i;
            }
            if (i >= line.size()) {
                break;
            }
            std::size_t tok_start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
                ++i;
            }
            std::string_view tok = line.substr(tok_start, i - tok_start);
            CellContent c;
            if (!cell_from_token(tok, c)) {
                out.error = err(line_no, tok_start + 1, std::string(tok), "unknown cell token");
                return out;
            }
            cells.push_back(c);
        }
        Generation g(base, std::move(cells));
        if (!g.empty() && prev_parity >= 0 && prev_parity == g.parity()) {
            out.error = err(line_no, num_start + 1, std::to_string(base),
                            "base parity must alternate between generations");
            return out;
        }
        if (!g.empty()) {
            prev_parity = g.parity();
        }
        out.pattern.push_back(std::move(g));
    }
    return out;
}

std::string serialize_generation(const Generation& g) {
    std::ostringstream ss;
    ss << '@' << g.base();
    for (CellContent c : g.cells()) {
        ss << ' ' << token(c);
    }
    return ss.str();
}

std::string serialize_pattern(const Pattern& p) {
    std::string out;
    for (const Generation& g : p) {
        out += serialize_generation(g);
        out += '\n';
    }
    return out;
}

}  // namespace sca
