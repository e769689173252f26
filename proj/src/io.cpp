#include "fragchain/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace fragchain {

ParseError::ParseError(int line_arg, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_arg) + ": " + message), line(line_arg) {}

namespace {

bool parse_int(std::string_view token, std::int64_t& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

// '#n=<N> m=<M>', nothing else on the line.
bool parse_header(std::string_view line, Pos& n, Pos& m) {
    if (!line.starts_with("#n=")) return false;
    line.remove_prefix(3);
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) return false;
    std::int64_t n_val = 0;
    std::int64_t m_val = 0;
    if (!parse_int(line.substr(0, space), n_val)) return false;
    std::string_view rest = line.substr(space + 1);
    if (!rest.starts_with("m=")) return false;
    rest.remove_prefix(2);
    if (!parse_int(rest, m_val)) return false;
    n = n_val;
    m = m_val;
    return true;
}

}  // namespace

Instance parse_fragment_file(std::istream& in) {
    Instance inst;
    std::vector<int> fragment_lines;
    bool have_header = false;
    Pos header_n = 0;
    Pos header_m = 0;
    Pos max_right = -1;
    Pos max_top = -1;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            Pos n = 0;
            Pos m = 0;
            if (parse_header(line, n, m)) {
                if (have_header) throw ParseError(line_no, "duplicate header");
                if (n < 0 || m < 0) throw ParseError(line_no, "negative sequence length");
                have_header = true;
                header_n = n;
                header_m = m;
            }
            continue;
        }

        std::int64_t fields[5];
        std::string_view rest = line;
        for (int field = 0; field < 5; ++field) {
            const std::size_t tab = rest.find('\t');
            const std::string_view token = field < 4 ? rest.substr(0, tab) : rest;
            if (field < 4) {
                if (tab == std::string_view::npos) {
                    throw ParseError(line_no, "expected 5 tab-separated fields");
                }
                rest = rest.substr(tab + 1);
            } else if (tab != std::string_view::npos) {
                throw ParseError(line_no, "expected 5 tab-separated fields");
            }
            if (!parse_int(token, fields[field])) {
                throw ParseError(line_no, "field " + std::to_string(field + 1) + " is not an integer");
            }
        }

        const Fragment f{fields[0], fields[1], fields[2], fields[3], fields[4]};
        if (f.left < 0 || f.bottom < 0) throw ParseError(line_no, "negative coordinate");
        if (f.left > f.right) throw ParseError(line_no, "left border exceeds right border");
        if (f.bottom > f.top) throw ParseError(line_no, "bottom border exceeds top border");
        if (f.score < 0) throw ParseError(line_no, "negative score");
        max_right = std::max(max_right, f.right);
        max_top = std::max(max_top, f.top);
        inst.fragments.push_back(f);
        fragment_lines.push_back(line_no);
    }

    if (have_header) {
        inst.n = header_n;
        inst.m = header_m;
        for (std::size_t i = 0; i < inst.fragments.size(); ++i) {
            if (inst.fragments[i].right >= inst.n) {
                throw ParseError(fragment_lines[i], "right border outside sequence");
            }
            if (inst.fragments[i].top >= inst.m) {
                throw ParseError(fragment_lines[i], "top border outside sequence");
            }
        }
    } else {
        inst.n = max_right + 1;
        inst.m = max_top + 1;
    }
    return inst;
}

Instance parse_fragment_file_text(const std::string& text) {
    std::istringstream in(text);
    return parse_fragment_file(in);
}

Instance load_fragment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_fragment_file(in);
}

void emit_fragment_file(std::ostream& out, const Instance& inst) {
    out << "#n=" << inst.n << " m=" << inst.m << "\n";
    for (const Fragment& f : inst.fragments) {
        out << f.left << '\t' << f.right << '\t' << f.bottom << '\t' << f.top << '\t' << f.score
            << "\n";
    }
}

std::string fragment_file_text(const Instance& inst) {
    std::ostringstream out;
    emit_fragment_file(out, inst);
    return out.str();
}

}  // namespace fragchain
