/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/formats.hh>
#include <orcount/graph_tokens.hh>

#include <charconv>
#include <string>

using std::string;
using std::string_view;

namespace orcount
{
    namespace
    {
        auto all_digits(string_view s) -> bool
        {
            return ! s.empty() && s.find_first_not_of("0123456789") == string_view::npos;
        }

        auto number(string_view s, std::size_t offset) -> long
        {
            long value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw FormatError("expected a number in '" + string(s) + "'", offset);
            return value;
        }

        auto small(long value) -> int
        {
            if (value < 0 || value > max_vertices)
                throw SizeLimitError("size " + std::to_string(value) + " outside 0.." + std::to_string(max_vertices));
            return static_cast<int>(value);
        }
    }

    auto parse_graph_token(string_view token) -> Graph
    {
        if (token.starts_with("turan:")) {
            auto rest = token.substr(6);
            auto comma = rest.find(',');
            if (comma == string_view::npos)
                throw FormatError("turan token needs n,r", 6);
            return turan_graph(small(number(rest.substr(0, comma), 6)), small(number(rest.substr(comma + 1), 7 + comma)));
        }
        if (token.starts_with("K:"))
            return complete_graph(small(number(token.substr(2), 2)));
        if (token.size() >= 2 && token[0] == 'K') {
            auto rest = token.substr(1);
            if (auto comma = rest.find(','); comma != string_view::npos)
                return complete_bipartite_graph(small(number(rest.substr(0, comma), 1)), small(number(rest.substr(comma + 1), 2 + comma)));
            if (all_digits(rest) && rest.size() == 1)
                return complete_graph(rest[0] - '0');
            if (all_digits(rest) && rest.size() == 2)
                return complete_bipartite_graph(rest[0] - '0', rest[1] - '0');
        }
        if (token.size() >= 2 && (token[0] == 'C' || token[0] == 'P') && all_digits(token.substr(1))) {
            int n = small(number(token.substr(1), 1));
            return token[0] == 'C' ? cycle_graph(n) : path_graph(n);
        }
        if (! token.empty() && token[0] >= '0' && token[0] <= '9')
            return parse_edge_list(token);
        return parse_graph6(token);
    }

    auto parse_digraph_token(string_view token) -> Digraph
    {
        if (! token.empty() && token[0] >= '0' && token[0] <= '9')
            return parse_arc_list(token);
        return parse_digraph6(token);
    }

    auto parse_vertex_set(string_view text) -> VertexSet
    {
        VertexSet result = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find(',', pos);
            if (end == string_view::npos)
                end = text.size();
            auto item = text.substr(pos, end - pos);
            auto dash = item.find('-');
            long lo, hi;
            if (dash == string_view::npos)
                lo = hi = number(item, pos);
            else {
                lo = number(item.substr(0, dash), pos);
                hi = number(item.substr(dash + 1), pos + dash + 1);
            }
            if (lo < 0 || hi >= max_vertices || lo > hi)
                throw FormatError("bad vertex range '" + string(item) + "'", pos);
            for (long v = lo; v <= hi; ++v)
                result |= bit(static_cast<int>(v));
            pos = end + 1;
        }
        return result;
    }

    auto parse_range(string_view text) -> std::pair<long, long>
    {
        auto dots = text.find("..");
        if (dots == string_view::npos) {
            long v = number(text, 0);
            return {v, v};
        }
        return {number(text.substr(0, dots), 0), number(text.substr(dots + 2), dots + 2)};
    }
}
