#include "cliquepoly/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquepoly/integer.hpp"

namespace cliquepoly {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

int sextet(char c, std::size_t pos) {
    int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63)
        throw ParseError("graph6: invalid character at offset " + std::to_string(pos));
    return v;
}

std::size_t data_length(int n) {
    auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    return (bits + 5) / 6;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    auto s = trim(text);
    if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
    if (s.empty()) throw ParseError("graph6: empty input");
    if (s.front() == ':' || s.front() == '&') throw ParseError("graph6: sparse6/digraph6 input not supported");

    std::size_t pos = 0;
    long long n = 0;
    if (s[0] != '~') {
        n = sextet(s[0], 0);
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~') throw ParseError("graph6: vertex count exceeds 64");
        if (s.size() < 4) throw ParseError("graph6: truncated size field");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(s[i], i);
        pos = 4;
    }
    if (n > kMaxVertices) throw ParseError("graph6: vertex count " + std::to_string(n) + " exceeds 64");

    const int order = static_cast<int>(n);
    auto body = s.substr(pos);
    if (body.size() != data_length(order))
        throw ParseError("graph6: expected " + std::to_string(data_length(order)) + " data bytes, got " +
                         std::to_string(body.size()));

    Graph::Builder b(order);
    std::size_t bit = 0;
    auto read_bit = [&]() {
        int chunk = sextet(body[bit / 6], pos + bit / 6);
        bool set = (chunk >> (5 - bit % 6)) & 1;
        ++bit;
        return set;
    };
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u)
            if (read_bit()) b.add_edge(u, v);
    while (bit % 6 != 0)
        if (read_bit()) throw ParseError("graph6: nonzero padding bits");
    return b.build();
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::optional<Graph::Builder> builder;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<long long> fields;
        while (!line.empty()) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
            if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
                throw ParseError("edge list: non-integer token on line " + std::to_string(line_no));
            fields.push_back(value);
            line = trim(line.substr(static_cast<std::size_t>(ptr - line.data())));
        }

        if (!builder) {
            if (fields.size() != 1) throw ParseError("edge list: first line must hold the vertex count");
            if (fields[0] < 0 || fields[0] > kMaxVertices)
                throw ParseError("edge list: vertex count must lie in [0, 64]");
            builder.emplace(static_cast<int>(fields[0]));
            continue;
        }
        if (fields.size() != 2) throw ParseError("edge list: expected \"u v\" on line " + std::to_string(line_no));
        auto [u, v] = std::pair{fields[0], fields[1]};
        if (u < 0 || v < 0 || u >= builder->order() || v >= builder->order())
            throw ParseError("edge list: vertex id out of range on line " + std::to_string(line_no));
        if (u == v) throw ParseError("edge list: self-loop on line " + std::to_string(line_no));
        builder->add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!builder) throw ParseError("edge list: empty input");
    return builder->build();
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

} // namespace cliquepoly
