#include "cowkit/io.hpp"

#include <charconv>
#include <sstream>

namespace cowkit {

std::string emit_graph6(const Graph& g) {
    long n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw DomainError("graph too large for the supported graph6 size forms");
    }
    int bits = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph parse_graph6(std::string_view line) {
    size_t at = 0;
    auto need = [&](size_t count) {
        if (line.size() - at < count) throw ParseError("truncated graph6 input", line.size());
    };
    auto byte = [&]() {
        unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", at);
        ++at;
        return static_cast<int>(c - 63);
    };
    need(1);
    long n;
    int first = byte();
    if (first < 63) {
        n = first;
    } else {
        need(3);
        int a = byte(), b = byte(), c = byte();
        if (a == 63) throw ParseError("unsupported graph6 size form", 1);
        n = (static_cast<long>(a) << 12) | (b << 6) | c;
    }
    if (n > 4096) throw ParseError("vertex count above the supported dense-representation size", 0);
    GraphBuilder g(static_cast<int>(n));
    long pair_bits = n * (n - 1) / 2;
    need(static_cast<size_t>((pair_bits + 5) / 6));
    int bits = 0, acc = 0;
    size_t acc_at = at;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                acc_at = at;
                acc = byte();
                bits = 6;
            }
            if (acc & (1 << (bits - 1))) g.add_edge(i, j);
            --bits;
        }
    if (bits && (acc & ((1 << bits) - 1))) throw ParseError("nonzero padding bits", acc_at);
    if (at != line.size()) throw ParseError("trailing garbage after graph6 data", at);
    return g.build();
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<long, long>> edges;
    long declared_n = -1, max_index = -1;
    size_t line_no = 0, offset = 0;
    bool first_content_line = true;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view sv = raw;
        if (auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
        std::istringstream ls{std::string(sv)};
        std::string a, b, extra;
        if (!(ls >> a)) {
            offset += raw.size() + 1;
            continue;
        }
        auto parse_index = [&](const std::string& tok) {
            long value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || p != tok.data() + tok.size() || value < 0)
                throw ParseError("bad vertex index '" + tok + "' on line " + std::to_string(line_no),
                                 offset);
            return value;
        };
        if (first_content_line && a == "n") {
            if (!(ls >> b) || (ls >> extra))
                throw ParseError("malformed size header on line " + std::to_string(line_no), offset);
            declared_n = parse_index(b);
            first_content_line = false;
            offset += raw.size() + 1;
            continue;
        }
        first_content_line = false;
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("expected 'u v' on line " + std::to_string(line_no), offset);
        long u = parse_index(a), v = parse_index(b);
        if (u == v)
            throw ParseError("self-loop " + std::to_string(u) + " on line " + std::to_string(line_no),
                             offset);
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u, v);
        offset += raw.size() + 1;
    }
    long n = declared_n >= 0 ? declared_n : max_index + 1;
    if (max_index >= n)
        throw ParseError("vertex " + std::to_string(max_index) + " outside declared size " +
                             std::to_string(n),
                         0);
    if (n > 4096) throw ParseError("vertex count above the supported dense-representation size", 0);
    GraphBuilder g(static_cast<int>(n));
    for (auto [u, v] : edges)
        if (!g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g.build();
}

Graph parse_any(std::string_view text) {
    // Trim trailing newline noise.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty input", 0);
    bool single_line = text.find('\n') == std::string_view::npos;
    if (single_line && !text.empty()) {
        bool g6_range = true;
        for (unsigned char c : text)
            if (c < 63 || c > 126) {
                g6_range = false;
                break;
            }
        if (g6_range) return parse_graph6(text);
    }
    return parse_edge_list(text);
}

} // namespace cowkit
