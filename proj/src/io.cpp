#include "dicol/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dicol {

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Non-empty lines with '#' comments stripped.
std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        auto tokens = split(raw);
        if (!tokens.empty())
            lines.push_back({number, std::move(tokens)});
        pos = end + 1;
    }
    return lines;
}

int to_int(std::string_view s, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
    return value;
}

void expect_count(const Line& line, std::size_t count, const char* what)
{
    if (line.tokens.size() != count)
        throw ParseError(std::string("expected ") + what, line.number);
}

} // namespace

std::string serialize_digraph(const Digraph& d)
{
    std::ostringstream out;
    out << "digraph " << d.order() << '\n';
    for (auto [u, v] : d.arcs())
        out << u << ' ' << v << '\n';
    return out.str();
}

Digraph parse_digraph(std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError("missing 'digraph <n>' header");
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "digraph")
        throw ParseError("expected 'digraph <n>'", head.number);
    const int n = to_int(head.tokens[1], head.number);
    if (n < 0)
        throw ParseError("negative vertex count", head.number);
    std::vector<Arc> arcs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        expect_count(line, 2, "'<u> <v>'");
        int u = to_int(line.tokens[0], line.number);
        int v = to_int(line.tokens[1], line.number);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex out of range 0.." + std::to_string(n - 1), line.number);
        if (u == v)
            throw ParseError("self-loop at " + std::to_string(u), line.number);
        arcs.emplace_back(u, v);
    }
    return Digraph(n, arcs);
}

std::string serialize_colouring(const Colouring& c)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < c.size(); ++v)
        out << v << ' ' << c.colours[v] << '\n';
    return out.str();
}

Colouring parse_colouring(std::string_view text, int expected_n)
{
    auto lines = content_lines(text);
    std::vector<std::pair<int, int>> entries;
    int largest = -1;
    for (const Line& line : lines) {
        expect_count(line, 2, "'<vertex> <colour>'");
        int v = to_int(line.tokens[0], line.number);
        int c = to_int(line.tokens[1], line.number);
        if (v < 0)
            throw ParseError("negative vertex", line.number);
        if (c < 1)
            throw ParseError("colours start at 1", line.number);
        if (expected_n >= 0 && v >= expected_n)
            throw ParseError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(expected_n - 1),
                             line.number);
        entries.emplace_back(v, c);
        largest = std::max(largest, v);
    }
    const int n = expected_n >= 0 ? expected_n : largest + 1;
    std::vector<int> raw(n, 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto [v, c] = entries[i];
        if (raw[v])
            throw ParseError("vertex " + std::to_string(v) + " coloured twice", lines[i].number);
        raw[v] = c;
    }
    for (int v = 0; v < n; ++v)
        if (!raw[v])
            throw ParseError("vertex " + std::to_string(v) + " has no colour");
    return Colouring::normalized(std::move(raw));
}

std::string serialize_decomposition(const TreeDecomposition& td)
{
    std::ostringstream out;
    out << "td " << td.node_count() << ' ' << td.width << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "bag " << i;
        for (Vertex v : td.bags[i])
            out << ' ' << v;
        out << '\n';
    }
    for (auto [a, b] : td.edges)
        out << "tedge " << a << ' ' << b << '\n';
    return out.str();
}

TreeDecomposition parse_decomposition(std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError("missing 'td <nodes> <width>' header");
    const Line& head = lines.front();
    if (head.tokens.size() != 3 || head.tokens[0] != "td")
        throw ParseError("expected 'td <nodes> <width>'", head.number);
    const int nodes = to_int(head.tokens[1], head.number);
    const int width = to_int(head.tokens[2], head.number);
    if (nodes < 0)
        throw ParseError("negative node count", head.number);
    TreeDecomposition td;
    td.bags.resize(nodes);
    std::vector<char> seen(nodes, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] == "bag") {
            if (line.tokens.size() < 2)
                throw ParseError("expected 'bag <node> <vertices...>'", line.number);
            int node = to_int(line.tokens[1], line.number);
            if (node < 0 || node >= nodes)
                throw ParseError("node out of range", line.number);
            if (seen[node])
                throw ParseError("bag " + std::to_string(node) + " given twice", line.number);
            seen[node] = 1;
            for (std::size_t t = 2; t < line.tokens.size(); ++t)
                td.bags[node].push_back(to_int(line.tokens[t], line.number));
            std::sort(td.bags[node].begin(), td.bags[node].end());
        } else if (line.tokens[0] == "tedge") {
            expect_count(line, 3, "'tedge <a> <b>'");
            int a = to_int(line.tokens[1], line.number);
            int b = to_int(line.tokens[2], line.number);
            if (a < 0 || b < 0 || a >= nodes || b >= nodes)
                throw ParseError("node out of range", line.number);
            td.edges.emplace_back(a, b);
        } else {
            throw ParseError("unknown record '" + std::string(line.tokens[0]) + "'", line.number);
        }
    }
    td.refresh_width();
    if (td.width != width && nodes > 0)
        throw ParseError("declared width " + std::to_string(width) + " but bags give " + std::to_string(td.width),
                         head.number);
    return td;
}

std::string serialize_certificate(const FamilyCertificate& cert)
{
    std::ostringstream out;
    out << "family=" << cert.family << '\n';
    for (const auto& [key, value] : cert.params)
        out << "param." << key << '=' << value << '\n';
    out << "vertices=" << cert.vertices << '\n';
    auto optional = [&](const char* key, const std::optional<int>& value) {
        if (value)
            out << key << '=' << *value << '\n';
    };
    optional("omega", cert.omega);
    optional("delta_b", cert.delta_b);
    optional("chi", cert.chi);
    optional("chi_lower", cert.chi_lower);
    optional("chi_upper", cert.chi_upper);
    out << "structure=";
    for (std::size_t i = 0; i < cert.structure.size(); ++i)
        out << (i ? "," : "") << cert.structure[i];
    out << '\n';
    return out.str();
}

FamilyCertificate parse_certificate(std::string_view text)
{
    FamilyCertificate cert;
    bool has_family = false;
    int number = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++number;
        std::string_view line = raw;
        bool comment = false;
        while (!line.empty() && (line.front() == '#' || line.front() == ' ' || line.front() == '\t')) {
            comment |= line.front() == '#';
            line.remove_prefix(1);
        }
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.remove_suffix(1);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            if (comment)
                continue;
            throw ParseError("expected 'key=value'", number);
        }
        std::string key(line.substr(0, eq));
        std::string value(line.substr(eq + 1));
        if (key == "family") {
            cert.family = value;
            has_family = true;
        } else if (key.rfind("param.", 0) == 0) {
            cert.params[key.substr(6)] = value;
        } else if (key == "vertices") {
            cert.vertices = to_int(value, number);
        } else if (key == "omega") {
            cert.omega = to_int(value, number);
        } else if (key == "delta_b") {
            cert.delta_b = to_int(value, number);
        } else if (key == "chi") {
            cert.chi = to_int(value, number);
        } else if (key == "chi_lower") {
            cert.chi_lower = to_int(value, number);
        } else if (key == "chi_upper") {
            cert.chi_upper = to_int(value, number);
        } else if (key == "structure") {
            cert.structure.clear();
            std::size_t pos = 0;
            while (pos < value.size()) {
                auto comma = value.find(',', pos);
                if (comma == std::string::npos)
                    comma = value.size();
                if (comma > pos)
                    cert.structure.push_back(value.substr(pos, comma - pos));
                pos = comma + 1;
            }
        } else if (!comment) {
            throw ParseError("unknown key '" + key + "'", number);
        }
    }
    if (!has_family)
        throw ParseError("certificate has no family line");
    return cert;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

} // namespace dicol
