#include "cbsg/bodyspec.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace cbsg {

namespace {

struct Value {
    bool is_array = false;
    std::string scalar;
    std::vector<Value> items;
};

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::string strip_comment(const std::string& line)
{
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"')
            quoted = !quoted;
        else if (line[i] == '#' && !quoted)
            return line.substr(0, i);
    }
    return line;
}

int bracket_depth(const std::string& s)
{
    int depth = 0;
    bool quoted = false;
    for (char c : s) {
        if (c == '"')
            quoted = !quoted;
        else if (!quoted && c == '[')
            ++depth;
        else if (!quoted && c == ']')
            --depth;
    }
    return depth;
}

Value parse_value(std::string_view text)
{
    const std::string s = trim(text);
    if (s.empty())
        throw ParseError("missing value");
    Value v;
    if (s.front() == '[') {
        if (s.back() != ']')
            throw ParseError("unterminated array: " + s);
        v.is_array = true;
        const std::string inner = s.substr(1, s.size() - 2);
        int depth = 0;
        bool quoted = false;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= inner.size(); ++i) {
            const bool end = i == inner.size();
            const char c = end ? ',' : inner[i];
            if (c == '"')
                quoted = !quoted;
            else if (!quoted && c == '[')
                ++depth;
            else if (!quoted && c == ']')
                --depth;
            else if (!quoted && depth == 0 && c == ',') {
                const std::string item = trim(std::string_view(inner).substr(start, i - start));
                if (!item.empty())
                    v.items.push_back(parse_value(item));
                else if (!end)
                    throw ParseError("empty array element in " + s);
                start = i + 1;
            }
        }
        if (depth != 0 || quoted)
            throw ParseError("unbalanced array: " + s);
        return v;
    }
    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"')
            throw ParseError("unterminated string: " + s);
        v.scalar = s.substr(1, s.size() - 2);
    } else {
        v.scalar = s;
    }
    return v;
}

using Table = std::map<std::string, Value>;

Table parse_tables(std::string_view text, std::string& section_seen)
{
    Table body;
    std::istringstream in{std::string(text)};
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string l = trim(strip_comment(line));
        if (l.empty())
            continue;
        if (l.front() == '[' && l.find('=') == std::string::npos) {
            if (l.back() != ']')
                throw ParseError("bad section header on line " + std::to_string(lineno));
            section = trim(std::string_view(l).substr(1, l.size() - 2));
            if (section == "body")
                section_seen = section;
            continue;
        }
        const std::size_t eq = l.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key = value on line " + std::to_string(lineno));
        const std::string key = trim(std::string_view(l).substr(0, eq));
        std::string value = l.substr(eq + 1);
        // arrays may span lines
        while (bracket_depth(value) > 0) {
            if (!std::getline(in, line))
                throw ParseError("unterminated array for key " + key);
            ++lineno;
            value += " " + trim(strip_comment(line));
        }
        if (section != "body")
            continue;
        if (body.count(key))
            throw ParseError("duplicate key " + key);
        body[key] = parse_value(value);
    }
    return body;
}

const Value& need(const Table& t, const std::string& key)
{
    auto it = t.find(key);
    if (it == t.end())
        throw ParseError("missing key body." + key);
    return it->second;
}

const std::string& scalar(const Value& v, const std::string& what)
{
    if (v.is_array)
        throw ParseError(what + " must be a number, not an array");
    return v.scalar;
}

const std::vector<Value>& pair_items(const Value& v, const std::string& what)
{
    if (!v.is_array || v.items.size() != 2)
        throw ParseError(what + " must be a pair [x, y]");
    return v.items;
}

std::int64_t parse_int(const std::string& s)
{
    Rat r = parse_rat(s);
    if (r.get_den() != 1)
        throw ParseError("expected an integer, got " + s);
    if (!r.get_num().fits_slong_p())
        throw ParseError("integer out of range: " + s);
    return r.get_num().get_si();
}

// one square-free D for the whole document
struct DiscTracker {
    std::optional<Int> D;

    QuadRat operator()(const std::string& s)
    {
        QuadRat q = parse_quad(s);
        if (!q.is_rational()) {
            if (D && *D != q.disc())
                throw ParseError("mixed square roots in one body: sqrt(" + D->get_str() + ") and sqrt(" + q.disc().get_str() + ")");
            D = q.disc();
        }
        return q;
    }
};

}

namespace {

ConvexBody2 build_body(std::string_view text)
{
    std::string seen;
    const Table t = parse_tables(text, seen);
    if (seen.empty())
        throw ParseError("missing [body] table");
    const std::string kind = scalar(need(t, "kind"), "kind");
    DiscTracker quad;
    if (kind == "circle") {
        const auto& c = pair_items(need(t, "center"), "center");
        Rat a = parse_rat(scalar(c[0], "center"));
        Rat b = parse_rat(scalar(c[1], "center"));
        Rat r = parse_rat(scalar(need(t, "radius"), "radius"));
        return Circle(a, b, r);
    }
    if (kind == "polygon") {
        const Value& v = need(t, "vertices");
        if (!v.is_array)
            throw ParseError("vertices must be an array of pairs");
        std::vector<QPoint> pts;
        for (const Value& p : v.items) {
            const auto& xy = pair_items(p, "vertex");
            QuadRat x = quad(scalar(xy[0], "vertex"));
            QuadRat y = quad(scalar(xy[1], "vertex"));
            pts.push_back({x, y});
        }
        return Polygon(std::move(pts));
    }
    if (kind == "segment") {
        const auto& d = pair_items(need(t, "direction"), "direction");
        IntVec2 dir{parse_int(scalar(d[0], "direction")), parse_int(scalar(d[1], "direction"))};
        QuadRat alpha = quad(scalar(need(t, "alpha"), "alpha"));
        QuadRat beta = quad(scalar(need(t, "beta"), "beta"));
        return RaySegment(dir, alpha, beta);
    }
    throw ParseError("unknown body kind '" + kind + "' (expected circle, polygon or segment)");
}

}

ConvexBody2 parse_body_spec(std::string_view text)
{
    try {
        return build_body(text);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid body: ") + e.what());
    }
}

ConvexBody2 load_body_spec(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_body_spec(ss.str());
}

} // namespace cbsg
