#include "ddp/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace ddp {
namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool parse_int(const std::string& token, int& out) {
    if (token.empty()) return false;
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    try {
        out = std::stoi(token);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int order = -1;
    std::vector<std::pair<int, int>> edge_pairs;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(strip_comment(line));
        std::string a, b;
        if (!(tokens >> a)) continue;  // blank or comment-only line
        if (order < 0) {
            if (!parse_int(a, order) || order < 1)
                throw ParseError("expected positive order on first line", line_no);
            if (tokens >> b) throw ParseError("unexpected token after order", line_no);
            continue;
        }
        if (!(tokens >> b)) throw ParseError("expected \"u v\" pair", line_no);
        int u = 0, v = 0;
        if (!parse_int(a, u) || !parse_int(b, v))
            throw ParseError("malformed vertex index", line_no);
        std::string extra;
        if (tokens >> extra) throw ParseError("unexpected token after edge", line_no);
        if (u >= order || v >= order)
            throw ParseError("vertex index out of range", line_no);
        edge_pairs.emplace_back(u, v);
    }
    if (order < 0) throw ParseError("empty input", line_no);
    Graph g(order);
    try {
        for (auto [u, v] : edge_pairs) g.add_edge(u, v);
    } catch (const ParameterOutOfRange& e) {
        throw ParseError(e.what());
    }
    return g;
}

Graph parse_graph6(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c == '\n' || c == '\r') break;
        s += c;
    }
    if (s.empty()) throw ParseError("empty graph6 input", 1, 0);
    size_t pos = 0;
    if (s[0] == '~') throw ParseError("graph6 orders above 62 are not supported", 1, 0);
    int n = s[0] - 63;
    if (n < 1 || n > 62) throw ParseError("invalid graph6 order byte", 1, 0);
    ++pos;
    Graph g(n);
    int bits_needed = n * (n - 1) / 2;
    int bit = 0;
    int cur = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                if (pos >= s.size())
                    throw ParseError("graph6 body too short", 1, static_cast<int>(pos));
                int c = s[pos] - 63;
                if (c < 0 || c > 63)
                    throw ParseError("invalid graph6 byte", 1, static_cast<int>(pos));
                cur = c;
                have = 6;
                ++pos;
            }
            if (cur & (1 << (have - 1))) g.add_edge(i, j);
            --have;
            ++bit;
        }
    }
    (void)bits_needed;
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 body", 1, static_cast<int>(pos));
    return g;
}

std::string serialize_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw OrderTooLarge("graph6 orders above 62 are not supported");
    std::string out(1, static_cast<char>(n + 63));
    int cur = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out += static_cast<char>(cur + 63);
                cur = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out += static_cast<char>((cur << (6 - have)) + 63);
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::Graph6) return serialize_graph6(g);
    std::ostringstream out;
    out << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

GraphFormat detect_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(strip_comment(line));
        std::string first;
        if (!(tokens >> first)) continue;
        int n = 0;
        return parse_int(first, n) ? GraphFormat::EdgeList : GraphFormat::Graph6;
    }
    return GraphFormat::EdgeList;
}

}  // namespace ddp
