#include "subcomp/graph6.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace subcomp {

std::string graph6_encode(const graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int total = g.n * (g.n - 1) / 2;
    int group = 0, filled = 0;
    for (int k = 0; k < total; ++k) {
        auto [i, j] = pair_from_index(k);
        group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(group + 63));
            group = 0;
            filled = 0;
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

graph graph6_decode(const std::string& s) {
    if (s.empty()) throw malformed_input_error("graph6: empty string");
    unsigned char head = static_cast<unsigned char>(s[0]);
    if (head == 126)
        throw resource_limit_error("graph6: extended header '~' (order > 62) not supported");
    if (head < 63 || head > 125)
        throw malformed_input_error(std::string("graph6: invalid header byte '") + s[0] + "'");
    int n = head - 63;
    int total = n * (n - 1) / 2;
    std::size_t body = (total + 5) / 6;
    if (s.size() != 1 + body)
        throw malformed_input_error("graph6: \"" + s + "\" has " + std::to_string(s.size() - 1) +
                                    " body bytes, expected " + std::to_string(body) +
                                    " for order " + std::to_string(n));
    graph g(n);
    for (std::size_t b = 0; b < body; ++b) {
        unsigned char c = static_cast<unsigned char>(s[1 + b]);
        if (c < 63 || c > 126)
            throw malformed_input_error(std::string("graph6: invalid body byte '") + s[1 + b] +
                                        "' in \"" + s + "\"");
        int group = c - 63;
        for (int t = 0; t < 6; ++t) {
            int k = static_cast<int>(b) * 6 + t;
            int bit = group >> (5 - t) & 1;
            if (k >= total) {
                if (bit)
                    throw malformed_input_error("graph6: nonzero padding bits in \"" + s + "\"");
                continue;
            }
            if (bit) {
                auto [i, j] = pair_from_index(k);
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

graph parse_edge_list(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ';' || c == ',') c = ' ';
    std::istringstream in(cleaned);
    long n = -1;
    if (!(in >> n)) throw malformed_input_error("edge list: missing order");
    if (n < 0 || n > max_order)
        throw malformed_input_error("edge list: order " + std::to_string(n) + " out of range [0, " +
                                    std::to_string(max_order) + "]");
    graph g(static_cast<int>(n));
    long u, v;
    while (in >> u) {
        if (!(in >> v)) throw malformed_input_error("edge list: dangling endpoint " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw malformed_input_error("edge list: endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range for order " + std::to_string(n));
        if (u == v) throw malformed_input_error("edge list: loop at vertex " + std::to_string(u));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) {
        std::string tok;
        in.clear();
        in >> tok;
        throw malformed_input_error("edge list: unexpected token \"" + tok + "\"");
    }
    return g;
}

graph parse_graph_text(const std::string& text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw malformed_input_error("empty graph input");
    std::size_t end = text.find_first_of("\r\n", start);
    std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (std::isdigit(static_cast<unsigned char>(line[0]))) return parse_edge_list(text);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
    return graph6_decode(line);
}

} // namespace subcomp
