#include "stillife/pattern_io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace stillife {

namespace {

struct Line {
    int no;  // 1-based line number in the original text
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t end = raw.find_last_not_of(" \t");
        std::string t = (end == std::string::npos) ? "" : raw.substr(0, end + 1);
        if (t.empty() || t[0] == '!') continue;
        out.push_back({no, t});
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (...) {
        throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + tok + "'");
    }
}

void fill_from_char_rows(const std::vector<Line>& lines, std::size_t first, int w, int h,
                         const std::function<void(int, int)>& set) {
    if (lines.size() - first != static_cast<std::size_t>(h)) {
        int at = lines.empty() ? 1 : lines.back().no;
        throw ParseError(at, "expected " + std::to_string(h) + " rows, found " +
                                 std::to_string(lines.size() - first));
    }
    for (int y = 0; y < h; ++y) {
        const Line& ln = lines[first + y];
        if (static_cast<int>(ln.text.size()) != w)
            throw ParseError(ln.no, "row has " + std::to_string(ln.text.size()) +
                                        " characters, expected " + std::to_string(w));
        for (int x = 0; x < w; ++x) {
            char c = ln.text[x];
            if (c == '#')
                set(x, y);
            else if (c != '.')
                throw ParseError(ln.no, std::string("illegal character '") + c + "'");
        }
    }
}

}  // namespace

ParsedPattern parse_pattern(const std::string& text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "empty pattern text");
    std::vector<std::string> head = split_ws(lines[0].text);

    if (head[0] == "grid") {
        if (head.size() != 3) throw ParseError(lines[0].no, "grid header needs `grid W H`");
        int w = parse_int(head[1], lines[0].no, "width");
        int h = parse_int(head[2], lines[0].no, "height");
        if (w < 1 || h < 1) throw ParseError(lines[0].no, "grid dims must be positive");
        FiniteGrid g(w, h);
        fill_from_char_rows(lines, 1, w, h, [&](int x, int y) { g.set(x, y, true); });
        return g;
    }

    if (head[0] == "torus") {
        if (head.size() < 2) throw ParseError(lines[0].no, "torus header needs `torus k d1 .. dk`");
        int k = parse_int(head[1], lines[0].no, "dimension");
        if (k < 1) throw ParseError(lines[0].no, "torus dimension must be >= 1");
        if (static_cast<int>(head.size()) != 2 + k)
            throw ParseError(lines[0].no,
                             "torus header needs " + std::to_string(k) + " moduli");
        std::vector<int> dims(k);
        for (int i = 0; i < k; ++i) {
            dims[i] = parse_int(head[2 + i], lines[0].no, "modulus");
            if (dims[i] < 1) throw ParseError(lines[0].no, "torus moduli must be positive");
        }
        TorusPattern p(dims);
        if (k == 2) {
            fill_from_char_rows(lines, 1, dims[0], dims[1],
                                [&](int x, int y) { p.set({x, y}, true); });
        } else {
            for (std::size_t i = 1; i < lines.size(); ++i) {
                std::vector<std::string> toks = split_ws(lines[i].text);
                if (static_cast<int>(toks.size()) != k)
                    throw ParseError(lines[i].no, "cell needs " + std::to_string(k) +
                                                      " coordinates");
                Coord c(k);
                for (int j = 0; j < k; ++j) {
                    c[j] = parse_int(toks[j], lines[i].no, "coordinate");
                    if (c[j] < 0 || c[j] >= dims[j])
                        throw ParseError(lines[i].no, "coordinate " + std::to_string(c[j]) +
                                                          " outside [0, " +
                                                          std::to_string(dims[j]) + ")");
                }
                p.set(c, true);
            }
        }
        return p;
    }

    throw ParseError(lines[0].no, "unknown header '" + head[0] + "'");
}

ParsedPattern load_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern(buf.str());
}

std::string serialize(const TorusPattern& p) {
    std::ostringstream out;
    out << "torus " << p.dimension();
    for (int d : p.dims()) out << ' ' << d;
    out << '\n';
    if (p.dimension() == 2) {
        int w = p.dims()[0], h = p.dims()[1];
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) out << (p.contains({x, y}) ? '#' : '.');
            out << '\n';
        }
    } else {
        for (const Coord& c : p.cells()) {
            for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
            out << '\n';
        }
    }
    return out.str();
}

std::string serialize(const FiniteGrid& g) {
    std::ostringstream out;
    out << "grid " << g.width() << ' ' << g.height() << '\n';
    for (int y = 0; y < g.height(); ++y) {
        for (int x = 0; x < g.width(); ++x) out << (g.contains(x, y) ? '#' : '.');
        out << '\n';
    }
    return out.str();
}

}  // namespace stillife
