#include "homog/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace homog {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + what
                                  : what),
      line_(line),
      column_(column) {}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

/// Lines with comments stripped; `number` is 1-based.
struct Line {
    std::string_view text;
    int number;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back({line, number});
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Token> tokenize(std::string_view line, int column_offset = 0) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1 + column_offset});
        i = j;
    }
    return out;
}

bool blank(std::string_view line) {
    for (char c : line)
        if (!is_space(c)) return false;
    return true;
}

int parse_int(const Token& t, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(t.text) + "'",
                         line, t.column);
    return value;
}

}  // namespace

Language parse_language(std::string_view text) {
    LanguageDescription desc;
    bool have_parts = false;
    for (const auto& line : split_lines(text)) {
        if (blank(line.text)) continue;
        auto toks = tokenize(line.text);
        if (!have_parts) {
            if (toks[0].text != "parts" || toks.size() != 2)
                throw ParseError("expected 'parts M'", line.number, toks[0].column);
            desc.parts = parse_int(toks[1], line.number, "part count");
            have_parts = true;
            continue;
        }
        if (toks[0].text != "colours")
            throw ParseError("expected 'colours I J : tokens'", line.number, toks[0].column);
        if (toks.size() < 4 || toks[3].text != ":")
            throw ParseError("expected ':' after the part pair", line.number,
                             toks.size() > 3 ? toks[3].column : static_cast<int>(line.text.size()) + 1);
        int i = parse_int(toks[1], line.number, "part index");
        int j = parse_int(toks[2], line.number, "part index");
        if (i < 0 || j < 0 || i >= desc.parts || j >= desc.parts)
            throw ParseError("part index out of range", line.number, toks[i < 0 || i >= desc.parts ? 1 : 2].column);
        if (desc.colours.count({i, j}) || desc.colours.count({j, i}))
            throw ParseError("pair given twice", line.number, toks[1].column);
        std::vector<std::string> names;
        for (std::size_t t = 4; t < toks.size(); ++t) names.emplace_back(toks[t].text);
        desc.colours[{std::min(i, j), std::max(i, j)}] = names;
    }
    if (!have_parts) throw ParseError("empty language file", 0, 0);
    auto report = validate_language(desc);
    if (!report.ok()) {
        std::string msg = "invalid language:";
        for (const auto& v : report.violations) msg += " " + v + ";";
        throw ParseError(msg, 0, 0);
    }
    return Language(desc);
}

std::string serialize_language(const Language& lang) {
    std::string out = "parts " + std::to_string(lang.parts()) + "\n";
    for (int i = 0; i < lang.parts(); ++i)
        for (int j = i + 1; j < lang.parts(); ++j) {
            out += "colours " + std::to_string(i) + " " + std::to_string(j) + " :";
            for (int c = 0; c < lang.colour_count(i, j); ++c)
                out += " " + lang.colour_name(i, j, static_cast<Colour>(c));
            out += "\n";
        }
    return out;
}

Monic parse_monic(std::string_view text, const Language& lang, int line, int column_offset) {
    std::size_t open = text.find('[');
    if (open == std::string_view::npos || !blank(text.substr(0, open)))
        throw ParseError("expected '['", line, column_offset + 1);
    std::size_t semi = text.find(';', open);
    if (semi == std::string_view::npos) throw ParseError("expected ';'", line, column_offset + static_cast<int>(text.size()) + 1);
    std::size_t close = text.find(']', semi);
    if (close == std::string_view::npos)
        throw ParseError("expected ']'", line, column_offset + static_cast<int>(text.size()) + 1);
    if (!blank(text.substr(close + 1)))
        throw ParseError("trailing text after ']'", line, column_offset + static_cast<int>(close) + 2);

    const int m = lang.parts();
    std::string_view jtext = text.substr(open + 1, semi - open - 1);
    const int jcol = column_offset + static_cast<int>(open) + 2;
    std::vector<int> parts;
    std::vector<int> part_cols;
    if (jtext.find(',') != std::string_view::npos) {
        std::size_t s = 0;
        while (true) {
            std::size_t e = jtext.find(',', s);
            if (e == std::string_view::npos) e = jtext.size();
            std::string_view piece = jtext.substr(s, e - s);
            std::size_t a = 0;
            while (a < piece.size() && is_space(piece[a])) ++a;
            std::size_t b = piece.size();
            while (b > a && is_space(piece[b - 1])) --b;
            Token t{piece.substr(a, b - a), jcol + static_cast<int>(s + a)};
            if (t.text.empty()) throw ParseError("empty part index", line, t.column);
            parts.push_back(parse_int(t, line, "part index"));
            part_cols.push_back(t.column);
            if (e == jtext.size()) break;
            s = e + 1;
        }
    } else {
        for (std::size_t x = 0; x < jtext.size(); ++x) {
            if (is_space(jtext[x])) continue;
            if (jtext[x] < '0' || jtext[x] > '9')
                throw ParseError(std::string("expected a part digit, got '") + jtext[x] + "'", line,
                                 jcol + static_cast<int>(x));
            parts.push_back(jtext[x] - '0');
            part_cols.push_back(jcol + static_cast<int>(x));
        }
    }
    for (std::size_t x = 0; x < parts.size(); ++x) {
        if (parts[x] < 0 || parts[x] >= m)
            throw ParseError("part index " + std::to_string(parts[x]) + " out of range", line,
                             part_cols[x]);
        if (x > 0 && parts[x] <= parts[x - 1])
            throw ParseError("part list must be strictly increasing", line, part_cols[x]);
    }
    if (parts.size() < 2) throw ParseError("a monic needs at least two parts", line, jcol);

    auto toks = tokenize(text.substr(semi + 1, close - semi - 1),
                         column_offset + static_cast<int>(semi) + 1);
    const std::size_t k = parts.size();
    if (toks.size() != k * (k - 1) / 2)
        throw ParseError("expected " + std::to_string(k * (k - 1) / 2) + " colour tokens, got " +
                             std::to_string(toks.size()),
                         line, column_offset + static_cast<int>(semi) + 2);
    std::vector<Colour> colours;
    std::size_t t = 0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b, ++t) {
            auto c = lang.find_colour(parts[a], parts[b], toks[t].text);
            if (!c)
                throw ParseError("unknown colour '" + std::string(toks[t].text) + "' on pair {" +
                                     std::to_string(parts[a]) + "," + std::to_string(parts[b]) + "}",
                                 line, toks[t].column);
            colours.push_back(*c);
        }
    return Monic(m, parts, colours);
}

FamilyFile parse_family_file(std::string_view text, const Language& lang) {
    FamilyFile out;
    for (const auto& line : split_lines(text)) {
        if (blank(line.text)) continue;
        std::string_view body = line.text;
        int offset = 0;
        std::string label;
        std::size_t open = body.find('[');
        std::size_t colon = body.find(':');
        if (colon != std::string_view::npos && (open == std::string_view::npos || colon < open)) {
            std::string_view name = body.substr(0, colon);
            auto toks = tokenize(name);
            if (toks.size() != 1) throw ParseError("malformed label", line.number, 1);
            label = std::string(toks[0].text);
            body = body.substr(colon + 1);
            offset = static_cast<int>(colon) + 1;
        }
        out.members.push_back(parse_monic(body, lang, line.number, offset));
        out.labels.push_back(label);
    }
    return out;
}

Family parse_family(std::string_view text, const Language& lang) {
    return Family(lang, parse_family_file(text, lang).members);
}

std::string serialize_family(const Family& f) {
    std::string out;
    for (const auto& a : f.members()) out += format_monic(a, f.language()) + "\n";
    return out;
}

Graph parse_graph(std::string_view text, const Language& lang) {
    int n = -1;
    std::vector<int> parts;
    std::vector<std::tuple<int, int, Colour>> edges;
    for (const auto& line : split_lines(text)) {
        if (blank(line.text)) continue;
        auto toks = tokenize(line.text);
        if (n < 0) {
            if (toks[0].text != "graph" || toks.size() != 3)
                throw ParseError("expected 'graph M N'", line.number, toks[0].column);
            int m = parse_int(toks[1], line.number, "part count");
            if (m != lang.parts())
                throw ParseError("graph part count differs from the language", line.number, toks[1].column);
            n = parse_int(toks[2], line.number, "vertex count");
            if (n < 0) throw ParseError("negative vertex count", line.number, toks[2].column);
            parts.assign(static_cast<std::size_t>(n), -1);
            continue;
        }
        if (toks[0].text == "v") {
            if (toks.size() != 3) throw ParseError("expected 'v ID PART'", line.number, toks[0].column);
            int id = parse_int(toks[1], line.number, "vertex id");
            int p = parse_int(toks[2], line.number, "part index");
            if (id < 0 || id >= n) throw ParseError("vertex id out of range", line.number, toks[1].column);
            if (p < 0 || p >= lang.parts())
                throw ParseError("part index out of range", line.number, toks[2].column);
            if (parts[id] != -1) throw ParseError("vertex given twice", line.number, toks[1].column);
            parts[id] = p;
        } else if (toks[0].text == "e") {
            if (toks.size() != 4)
                throw ParseError("expected 'e ID1 ID2 COLOUR'", line.number, toks[0].column);
            int u = parse_int(toks[1], line.number, "vertex id");
            int v = parse_int(toks[2], line.number, "vertex id");
            if (u < 0 || u >= n || parts[u] < 0)
                throw ParseError("unknown vertex", line.number, toks[1].column);
            if (v < 0 || v >= n || parts[v] < 0)
                throw ParseError("unknown vertex", line.number, toks[2].column);
            if (parts[u] == parts[v])
                throw ParseError("edge inside a part", line.number, toks[1].column);
            auto c = lang.find_colour(parts[u], parts[v], toks[3].text);
            if (!c) throw ParseError("unknown colour '" + std::string(toks[3].text) + "'", line.number, toks[3].column);
            edges.emplace_back(u, v, *c);
        } else {
            throw ParseError("expected 'v' or 'e' line", line.number, toks[0].column);
        }
    }
    if (n < 0) throw ParseError("empty graph file", 0, 0);
    GraphBuilder b(lang.parts());
    for (int v = 0; v < n; ++v) {
        if (parts[v] < 0) throw ParseError("vertex " + std::to_string(v) + " has no 'v' line", 0, 0);
        b.add_vertex(parts[v]);
    }
    for (auto [u, v, c] : edges) b.set_colour(u, v, c);
    try {
        return b.build();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

std::string serialize_graph(const Graph& g, const Language& lang) {
    std::string out = "graph " + std::to_string(g.part_count()) + " " + std::to_string(g.size()) + "\n";
    for (int v = 0; v < g.size(); ++v)
        out += "v " + std::to_string(v) + " " + std::to_string(g.part(v)) + "\n";
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.part(u) != g.part(v))
                out += "e " + std::to_string(u) + " " + std::to_string(v) + " " +
                       lang.colour_name(g.part(u), g.part(v), g.colour(u, v)) + "\n";
    return out;
}

}  // namespace homog
