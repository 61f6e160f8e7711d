/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/formats.hh>

#include <cstddef>
#include <vector>

using std::pair;
using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace orcount
{
    namespace
    {
        constexpr string_view graph6_header = ">>graph6<<";
        constexpr string_view digraph6_header = ">>digraph6<<";

        auto printable(char c) -> bool
        {
            return c >= 63 && c <= 126;
        }

        // Reads N(n) starting at pos, advancing pos.
        auto read_size(string_view text, size_t & pos) -> int
        {
            if (pos >= text.size())
                throw FormatError("missing vertex count", pos);
            if (! printable(text[pos]))
                throw FormatError("byte outside 63..126", pos);
            if (text[pos] != 126)
                return text[pos++] - 63;

            size_t start = pos;
            if (pos + 1 < text.size() && text[pos + 1] == 126)
                throw SizeLimitError("eight-byte vertex count at byte " + to_string(pos) + " exceeds " + to_string(max_vertices) + " vertices");
            if (pos + 3 >= text.size())
                throw FormatError("truncated vertex count", text.size());
            long n = 0;
            for (size_t i = pos + 1; i <= pos + 3; ++i) {
                if (! printable(text[i]))
                    throw FormatError("byte outside 63..126", i);
                n = (n << 6) | (text[i] - 63);
            }
            pos += 4;
            if (n <= 62)
                throw FormatError("vertex count " + to_string(n) + " must use the one-byte form", start);
            if (n > max_vertices)
                throw SizeLimitError("vertex count " + to_string(n) + " exceeds " + to_string(max_vertices));
            return static_cast<int>(n);
        }

        auto write_size(string & out, int n) -> void
        {
            if (n <= 62)
                out.push_back(static_cast<char>(n + 63));
            else {
                out.push_back(126);
                for (int shift = 12; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
            }
        }

        // Unpacks exactly bit_count bits, six per byte, most significant first.
        auto read_bits(string_view text, size_t pos, size_t bit_count) -> vector<bool>
        {
            size_t byte_count = (bit_count + 5) / 6;
            if (text.size() < pos + byte_count)
                throw FormatError("truncated adjacency data", text.size());
            if (text.size() > pos + byte_count)
                throw FormatError("trailing bytes after adjacency data", pos + byte_count);

            vector<bool> bits;
            bits.reserve(byte_count * 6);
            for (size_t i = 0; i < byte_count; ++i) {
                char c = text[pos + i];
                if (! printable(c))
                    throw FormatError("byte outside 63..126", pos + i);
                int value = c - 63;
                for (int b = 5; b >= 0; --b)
                    bits.push_back((value >> b) & 1);
            }
            for (size_t i = bit_count; i < bits.size(); ++i)
                if (bits[i])
                    throw FormatError("nonzero padding bit", pos + byte_count - 1);
            bits.resize(bit_count);
            return bits;
        }

        auto write_bits(string & out, const vector<bool> & bits) -> void
        {
            for (size_t i = 0; i < bits.size(); i += 6) {
                int value = 0;
                for (size_t b = 0; b < 6; ++b)
                    value = (value << 1) | ((i + b < bits.size() && bits[i + b]) ? 1 : 0);
                out.push_back(static_cast<char>(value + 63));
            }
        }

        auto skip_header(string_view text, string_view header) -> size_t
        {
            return text.starts_with(header) ? header.size() : 0;
        }

        struct Cursor
        {
            string_view text;
            size_t pos = 0;

            auto skip_spaces() -> void
            {
                while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
                    ++pos;
            }

            auto at_end() -> bool
            {
                skip_spaces();
                return pos >= text.size();
            }

            auto number() -> int
            {
                if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
                    throw FormatError("expected a vertex number", pos);
                long value = 0;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                    value = value * 10 + (text[pos] - '0');
                    if (value > max_vertices)
                        throw FormatError("number too large", pos);
                    ++pos;
                }
                return static_cast<int>(value);
            }

            auto expect(char c) -> void
            {
                if (pos >= text.size() || text[pos] != c)
                    throw FormatError(string("expected '") + c + "'", pos);
                ++pos;
            }
        };

        template <typename Add_>
        auto parse_pairs(string_view text, char separator, Add_ && add) -> int
        {
            Cursor cursor{text};
            cursor.skip_spaces();
            int n = cursor.number();
            cursor.expect(':');
            while (! cursor.at_end()) {
                size_t start = cursor.pos;
                int a = cursor.number();
                cursor.expect(separator);
                int b = cursor.number();
                if (a >= n || b >= n)
                    throw FormatError("vertex out of range", start);
                if (a == b)
                    throw FormatError("self-loop", start);
                add(a, b, start);
            }
            return n;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        size_t pos = skip_header(text, graph6_header);
        if (pos < text.size() && text[pos] == '&')
            throw FormatError("digraph6 data where graph6 expected", pos);
        if (pos < text.size() && text[pos] == ':')
            throw FormatError("sparse6 is not supported", pos);
        int n = read_size(text, pos);
        auto bits = read_bits(text, pos, static_cast<size_t>(n) * (n - 1) / 2);

        vector<Edge> edges;
        size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (bits[k++])
                    edges.push_back(Edge{i, j});
        return Graph(n, edges);
    }

    auto emit_graph6(const Graph & g) -> string
    {
        int n = g.size();
        string out;
        write_size(out, n);
        vector<bool> bits;
        bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(g.adjacent(i, j));
        write_bits(out, bits);
        return out;
    }

    auto parse_digraph6(string_view text) -> Digraph
    {
        size_t pos = skip_header(text, digraph6_header);
        if (pos >= text.size() || text[pos] != '&')
            throw FormatError("digraph6 must start with '&'", pos);
        ++pos;
        int n = read_size(text, pos);
        auto bits = read_bits(text, pos, static_cast<size_t>(n) * n);

        Digraph d(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (bits[static_cast<size_t>(i) * n + j]) {
                    if (i == j)
                        throw FormatError("self-loop on vertex " + to_string(i), pos + (static_cast<size_t>(i) * n + j) / 6);
                    d.add_arc(i, j);
                }
        return d;
    }

    auto emit_digraph6(const Digraph & d) -> string
    {
        int n = d.size();
        string out = "&";
        write_size(out, n);
        vector<bool> bits;
        bits.reserve(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                bits.push_back(d.has_arc(i, j));
        write_bits(out, bits);
        return out;
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        vector<Edge> edges;
        int n = parse_pairs(text, '-', [&] (int a, int b, size_t) {
                edges.push_back(Edge{std::min(a, b), std::max(a, b)});
                });
        return Graph(n, edges);
    }

    auto emit_edge_list(const Graph & g) -> string
    {
        string out = to_string(g.size()) + ":";
        for (auto & [u, v] : g.edges())
            out += " " + to_string(u) + "-" + to_string(v);
        return out;
    }

    auto parse_arc_list(string_view text) -> Digraph
    {
        vector<pair<int, int>> arcs;
        int n = parse_pairs(text, '>', [&] (int a, int b, size_t) { arcs.emplace_back(a, b); });
        return Digraph(n, arcs);
    }

    auto emit_arc_list(const Digraph & d) -> string
    {
        string out = to_string(d.size()) + ":";
        for (auto & [u, v] : d.arcs())
            out += " " + to_string(u) + ">" + to_string(v);
        return out;
    }
}
