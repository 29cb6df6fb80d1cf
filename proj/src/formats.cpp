#include "gonality/formats.hpp"

#include "gonality/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>

namespace gonality {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::string_view first_line(std::string_view text) {
    text = trim(text);
    return trim(text.substr(0, text.find('\n')));
}

int byte_value(char c) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw MalformedInput("byte " + std::to_string(b) + " outside the printable 63..126 range");
    return b - 63;
}

// N(n) from the nauty formats description.
int read_size(std::string_view& s) {
    if (s.empty())
        throw MalformedInput("missing vertex count");
    auto take = [&](std::size_t bytes) {
        if (s.size() < bytes)
            throw MalformedInput("truncated vertex count");
        long long value = 0;
        for (std::size_t i = 0; i < bytes; ++i)
            value = (value << 6) | byte_value(s[i]);
        s.remove_prefix(bytes);
        return value;
    };
    if (s[0] != '~')
        return static_cast<int>(take(1));
    s.remove_prefix(1);
    if (!s.empty() && s[0] == '~') {
        s.remove_prefix(1);
        auto n = take(6);
        if (n > 1'000'000'000)
            throw MalformedInput("vertex count too large");
        return static_cast<int>(n);
    }
    return static_cast<int>(take(3));
}

void write_size(std::string& out, int n) {
    auto put = [&](long long value, int bytes) {
        for (int i = bytes - 1; i >= 0; --i)
            out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out.push_back('~');
        put(n, 3);
    } else {
        out += "~~";
        put(n, 6);
    }
}

class BitWriter {
public:
    void put(std::uint64_t value, int bits) {
        for (int i = bits - 1; i >= 0; --i)
            bits_.push_back(static_cast<char>((value >> i) & 1U));
    }
    std::size_t size() const { return bits_.size(); }
    void flush_to(std::string& out) const {
        for (std::size_t i = 0; i < bits_.size(); i += 6) {
            int value = 0;
            for (std::size_t j = i; j < i + 6; ++j)
                value = (value << 1) | (j < bits_.size() ? bits_[j] : 0);
            out.push_back(static_cast<char>(value + 63));
        }
    }

private:
    std::vector<char> bits_;
};

int bits_for(int n) {
    int k = 0;
    for (int i = n - 1; i > 0; i >>= 1)
        ++k;
    return k;
}

Multigraph parse_graph6(std::string_view line) {
    if (line.starts_with(kGraph6Header))
        line.remove_prefix(kGraph6Header.size());
    int n = read_size(line);
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (line.size() != (pairs + 5) / 6)
        throw MalformedInput("graph6 body has " + std::to_string(line.size()) + " bytes, expected " +
                             std::to_string((pairs + 5) / 6));
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int value = byte_value(line[bit / 6]);
            if ((value >> (5 - bit % 6)) & 1)
                edges.push_back({i, j});
        }
    for (std::size_t b = bit; b < line.size() * 6; ++b)
        if ((byte_value(line[b / 6]) >> (5 - b % 6)) & 1)
            throw MalformedInput("graph6 padding bits must be zero");
    return Multigraph(n, std::move(edges));
}

Multigraph parse_sparse6(std::string_view line) {
    if (line.starts_with(kSparse6Header))
        line.remove_prefix(kSparse6Header.size());
    if (line.empty() || line[0] != ':')
        throw MalformedInput("sparse6 strings start with ':'");
    line.remove_prefix(1);
    int n = read_size(line);
    const int k = bits_for(n);

    std::vector<char> bits;
    bits.reserve(line.size() * 6);
    for (char c : line) {
        int value = byte_value(c);
        for (int i = 5; i >= 0; --i)
            bits.push_back(static_cast<char>((value >> i) & 1));
    }

    std::vector<Edge> edges;
    long long v = 0;
    std::size_t pos = 0;
    while (pos + 1 + static_cast<std::size_t>(k) <= bits.size()) {
        bool b = bits[pos++];
        long long x = 0;
        for (int i = 0; i < k; ++i)
            x = (x << 1) | bits[pos++];
        if (b)
            ++v;
        if (v >= n || x >= n)
            break;
        if (x > v)
            v = x;
        else
            edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(v)});
    }
    return Multigraph(n, std::move(edges));
}

bool parse_int_line(std::string_view line, long long& a, long long& b) {
    std::istringstream in{std::string(line)};
    std::string extra;
    if (!(in >> a >> b))
        return false;
    return !(in >> extra);
}

Multigraph parse_edgelist(std::string_view text) {
    std::vector<std::pair<long long, long long>> rows;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (line.empty())
            continue;
        long long a = 0, b = 0;
        if (!parse_int_line(line, a, b))
            throw MalformedInput("edge list line " + std::to_string(line_no) +
                                 " is not a pair of integers");
        if (a < 0 || b < 0 || a > 100'000'000 || b > 100'000'000)
            throw MalformedInput("edge list line " + std::to_string(line_no) +
                                 " has an out-of-range value");
        rows.emplace_back(a, b);
    }
    if (rows.empty())
        throw MalformedInput("empty edge list");

    long long max_vertex = -1;
    for (std::size_t i = 1; i < rows.size(); ++i)
        max_vertex = std::max({max_vertex, rows[i].first, rows[i].second});

    // "n m" header: the remaining line count must equal m
    bool header = static_cast<long long>(rows.size() - 1) == rows[0].second &&
                  rows[0].first > max_vertex && rows[0].first >= 1;
    long long n = 0;
    std::vector<Edge> edges;
    for (std::size_t i = header ? 1 : 0; i < rows.size(); ++i) {
        edges.push_back({static_cast<Vertex>(rows[i].first), static_cast<Vertex>(rows[i].second)});
        n = std::max({n, rows[i].first + 1, rows[i].second + 1});
    }
    if (header)
        n = rows[0].first;
    return Multigraph(static_cast<int>(n), std::move(edges));
}

} // namespace

Format parse_format_name(std::string_view name) {
    if (name == "g6" || name == "graph6")
        return Format::Graph6;
    if (name == "s6" || name == "sparse6")
        return Format::Sparse6;
    if (name == "edgelist" || name == "el")
        return Format::EdgeList;
    throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(Format format) {
    switch (format) {
    case Format::Graph6:
        return "g6";
    case Format::Sparse6:
        return "s6";
    case Format::EdgeList:
        return "edgelist";
    }
    return "?";
}

Format detect_format(std::string_view text) {
    auto line = first_line(text);
    if (line.starts_with(kSparse6Header) || line.starts_with(":"))
        return Format::Sparse6;
    if (line.starts_with(kGraph6Header))
        return Format::Graph6;
    long long a = 0, b = 0;
    if (parse_int_line(line, a, b))
        return Format::EdgeList;
    return Format::Graph6;
}

Multigraph parse(std::string_view text, Format format) {
    switch (format) {
    case Format::Graph6:
        return parse_graph6(first_line(text));
    case Format::Sparse6:
        return parse_sparse6(first_line(text));
    case Format::EdgeList:
        return parse_edgelist(text);
    }
    throw InvalidArgument("unknown format");
}

std::string encode(const Multigraph& g, Format format) {
    const int n = g.num_vertices();
    std::string out;
    switch (format) {
    case Format::Graph6: {
        if (!g.is_simple())
            throw NotSimple("graph6 cannot store parallel edges");
        write_size(out, n);
        BitWriter bits;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                bits.put(g.multiplicity(i, j) > 0 ? 1 : 0, 1);
        bits.flush_to(out);
        return out;
    }
    case Format::Sparse6: {
        out.push_back(':');
        write_size(out, n);
        const int k = bits_for(n);
        // edges ordered by larger endpoint, then smaller
        auto edges = g.edges();
        std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return std::pair(a.v, a.u) < std::pair(b.v, b.u);
        });
        BitWriter bits;
        Vertex last = 0;
        for (auto [i, j] : edges) {
            if (j == last) {
                bits.put(0, 1);
                bits.put(static_cast<std::uint64_t>(i), k);
            } else {
                bits.put(1, 1);
                if (j > last + 1) {
                    bits.put(static_cast<std::uint64_t>(j), k);
                    bits.put(0, 1);
                }
                bits.put(static_cast<std::uint64_t>(i), k);
                last = j;
            }
        }
        int pad = static_cast<int>((6 - bits.size() % 6) % 6);
        if (pad > 0) {
            if (k < 6 && pad >= k + 1 && last == n - 2 && n == (1 << k)) {
                bits.put(0, 1);
                bits.put((std::uint64_t{1} << (pad - 1)) - 1, pad - 1);
            } else {
                bits.put((std::uint64_t{1} << pad) - 1, pad);
            }
        }
        bits.flush_to(out);
        return out;
    }
    case Format::EdgeList: {
        out = std::to_string(n) + " " + std::to_string(g.num_edges());
        for (auto [u, v] : g.edges())
            out += "\n" + std::to_string(u) + " " + std::to_string(v);
        return out;
    }
    }
    throw InvalidArgument("unknown format");
}

} // namespace gonality
