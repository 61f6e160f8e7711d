/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/formats.hh>
#include <orcount/pattern.hh>

#include <algorithm>
#include <charconv>

using std::pair;
using std::span;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace orcount
{
    namespace
    {
        constexpr int pattern_size_limit = 12;

        // Places the given start vertices first, then repeatedly the vertex
        // with most arcs to already placed ones (ties by index).
        auto connectivity_order(const Digraph & p, vector<int> order) -> vector<int>
        {
            int k = p.size();
            VertexSet placed = 0;
            for (int v : order)
                placed |= bit(v);
            while (static_cast<int>(order.size()) < k) {
                int best = -1, best_links = -1;
                for (int v = 0; v < k; ++v) {
                    if (placed & bit(v))
                        continue;
                    int links = set_size((p.out_neighbours(v) | p.in_neighbours(v)) & placed);
                    if (links > best_links) {
                        best = v;
                        best_links = links;
                    }
                }
                order.push_back(best);
                placed |= bit(best);
            }
            return order;
        }

        auto detect_cycle_length(const Digraph & d) -> int
        {
            int k = d.size();
            if (k < 3 || d.arc_count() != k)
                return 0;
            for (int v = 0; v < k; ++v)
                if (set_size(d.out_neighbours(v)) != 1 || set_size(d.in_neighbours(v)) != 1)
                    return 0;
            int v = 0, steps = 0;
            do {
                v = std::countr_zero(d.out_neighbours(v));
                ++steps;
            } while (v != 0);
            return steps == k ? k : 0;
        }

        auto is_transitive_tournament(const Digraph & d) -> bool
        {
            int k = d.size();
            if (k < 2 || ! d.is_oriented() || d.arc_count() != k * (k - 1) / 2)
                return false;
            vector<int> out_degrees;
            for (int v = 0; v < k; ++v)
                out_degrees.push_back(set_size(d.out_neighbours(v)));
            std::sort(out_degrees.begin(), out_degrees.end());
            for (int i = 0; i < k; ++i)
                if (out_degrees[i] != i)
                    return false;
            return true;
        }

        auto parse_int(string_view text) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
                return -1;
            return value;
        }

        auto arc_masks(const Digraph & d, vector<VertexSet> & out, vector<VertexSet> & in) -> void
        {
            out.assign(d.out_rows().begin(), d.out_rows().end());
            in.assign(d.size(), 0);
            for (int v = 0; v < d.size(); ++v)
                for_each_vertex(out[v], [&] (int w) { in[w] |= bit(v); });
        }
    }

    Embedder::Embedder(const Digraph & pattern) :
        _pattern(pattern),
        _arcs(pattern.arcs())
    {
        for (auto & [a, b] : _arcs)
            _pinned_orders.push_back(connectivity_order(_pattern, {a, b}));

        if (_pattern.size() > 0) {
            int first = 0;
            for (int v = 1; v < _pattern.size(); ++v)
                if (set_size(_pattern.out_neighbours(v) | _pattern.in_neighbours(v)) >
                        set_size(_pattern.out_neighbours(first) | _pattern.in_neighbours(first)))
                    first = v;
            _free_order = connectivity_order(_pattern, {first});
        }
    }

    auto Embedder::extend(span<const VertexSet> out, span<const VertexSet> in, int host_size,
            const vector<int> & order, std::size_t depth, vector<int> & image, VertexSet used) const -> bool
    {
        if (depth == order.size())
            return true;

        int x = order[depth];
        VertexSet candidates = first_vertices(host_size) & ~used;
        for (std::size_t i = 0; i < depth; ++i) {
            int y = order[i];
            if (_pattern.has_arc(y, x))
                candidates &= out[image[y]];
            if (_pattern.has_arc(x, y))
                candidates &= in[image[y]];
        }

        bool found = false;
        while (candidates && ! found) {
            int w = std::countr_zero(candidates);
            candidates &= candidates - 1;
            image[x] = w;
            found = extend(out, in, host_size, order, depth + 1, image, used | bit(w));
        }
        return found;
    }

    auto Embedder::contains(span<const VertexSet> out, span<const VertexSet> in, int host_size) const -> bool
    {
        if (_pattern.size() > host_size)
            return false;
        vector<int> image(_pattern.size(), -1);
        return extend(out, in, host_size, _free_order, 0, image, 0);
    }

    auto Embedder::contains_through(span<const VertexSet> out, span<const VertexSet> in, int host_size, int from, int to) const -> bool
    {
        if (_pattern.size() > host_size)
            return false;
        vector<int> image(_pattern.size(), -1);
        for (std::size_t i = 0; i < _arcs.size(); ++i) {
            auto [a, b] = _arcs[i];
            image[a] = from;
            image[b] = to;
            if (extend(out, in, host_size, _pinned_orders[i], 2, image, bit(from) | bit(to)))
                return true;
        }
        return false;
    }

    Pattern::Pattern(Digraph d, PatternShape shape, int parameter, string id) :
        _digraph(std::move(d)),
        _shape(shape),
        _parameter(parameter),
        _id(std::move(id)),
        _embedder(std::make_shared<Embedder>(_digraph))
    {
    }

    auto Pattern::directed_cycle(int length) -> Pattern
    {
        if (length < 3)
            throw DomainError("a directed cycle pattern needs length at least 3");
        if (length > pattern_size_limit)
            throw SizeLimitError("pattern larger than " + to_string(pattern_size_limit) + " vertices");
        Digraph d(length);
        for (int v = 0; v < length; ++v)
            d.add_arc(v, (v + 1) % length);
        return Pattern(std::move(d), PatternShape::directed_cycle, length, "c" + to_string(length));
    }

    auto Pattern::transitive_tournament(int k) -> Pattern
    {
        if (k < 2)
            throw DomainError("a transitive tournament pattern needs at least 2 vertices");
        if (k > pattern_size_limit)
            throw SizeLimitError("pattern larger than " + to_string(pattern_size_limit) + " vertices");
        Digraph d(k);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                d.add_arc(a, b);
        return Pattern(std::move(d), PatternShape::transitive_tournament, k, "tt" + to_string(k));
    }

    auto Pattern::from_digraph(const Digraph & d) -> Pattern
    {
        if (d.size() > pattern_size_limit)
            throw SizeLimitError("pattern larger than " + to_string(pattern_size_limit) + " vertices");
        if (! d.is_oriented())
            throw DomainError("pattern must be an oriented graph (no bidirected pair)");
        if (int length = detect_cycle_length(d))
            return Pattern(d, PatternShape::directed_cycle, length, "c" + to_string(length));
        if (is_transitive_tournament(d))
            return Pattern(d, PatternShape::transitive_tournament, d.size(), "tt" + to_string(d.size()));
        return Pattern(d, PatternShape::generic, 0, emit_digraph6(d));
    }

    auto Pattern::parse(string_view token) -> Pattern
    {
        if (token.starts_with("tt")) {
            int k = parse_int(token.substr(2));
            if (k < 0)
                throw FormatError("bad transitive tournament token '" + string(token) + "'", 2);
            return transitive_tournament(k);
        }
        if (token.starts_with("c")) {
            int length = parse_int(token.substr(1));
            if (length < 0)
                throw FormatError("bad cycle token '" + string(token) + "'", 1);
            return directed_cycle(length);
        }
        if (token.starts_with("&") || token.starts_with(">>digraph6<<"))
            return from_digraph(parse_digraph6(token));
        throw FormatError("unknown pattern token '" + string(token) + "'", 0);
    }

    auto Pattern::reversed() const -> Pattern
    {
        return from_digraph(_digraph.reversed());
    }

    auto Pattern::chromatic_number() const -> int
    {
        auto g = _digraph.underlying_graph();
        int k = g.size();
        if (k == 0)
            return 0;
        for (int colours = 1; colours <= k; ++colours) {
            vector<int> colour(k, 0);
            // odometer over all colourings with vertex 0 fixed to colour 0
            while (true) {
                bool proper = true;
                for (auto & [u, v] : g.edges())
                    if (colour[u] == colour[v]) {
                        proper = false;
                        break;
                    }
                if (proper)
                    return colours;
                int i = 1;
                while (i < k && ++colour[i] == colours)
                    colour[i++] = 0;
                if (i >= k)
                    break;
            }
        }
        return k;
    }

    namespace detail
    {
        namespace
        {
            // Simple path from cur to target with exactly `remaining` arcs,
            // avoiding `visited`.
            auto path_to(span<const VertexSet> out, span<const VertexSet> in, int cur, int target, int remaining, VertexSet visited) -> bool
            {
                if (remaining == 1)
                    return out[cur] & bit(target);
                if (remaining == 2)
                    return out[cur] & in[target] & ~visited;
                VertexSet next = out[cur] & ~visited;
                while (next) {
                    int w = std::countr_zero(next);
                    next &= next - 1;
                    if (path_to(out, in, w, target, remaining - 1, visited | bit(w)))
                        return true;
                }
                return false;
            }
        }

        auto has_cycle_through(span<const VertexSet> out, span<const VertexSet> in, int length, int from, int to) -> bool
        {
            return path_to(out, in, to, from, length - 1, bit(from) | bit(to));
        }

        auto has_cycle(span<const VertexSet> out, span<const VertexSet> in, int n, int length) -> bool
        {
            if (length > n)
                return false;
            // each cycle is found from its smallest vertex
            for (int s = 0; s < n; ++s) {
                VertexSet lower = first_vertices(s + 1);
                VertexSet next = out[s] & ~lower;
                while (next) {
                    int w = std::countr_zero(next);
                    next &= next - 1;
                    if (path_to(out, in, w, s, length - 1, lower | bit(w)))
                        return true;
                }
            }
            return false;
        }

        auto has_tt3_through(span<const VertexSet> out, span<const VertexSet> in, int from, int to) -> bool
        {
            return (out[from] & out[to]) || (out[from] & in[to]) || (in[from] & in[to]);
        }

        auto has_tt3(span<const VertexSet> out, int n) -> bool
        {
            for (int a = 0; a < n; ++a) {
                VertexSet next = out[a];
                while (next) {
                    int b = std::countr_zero(next);
                    next &= next - 1;
                    if (out[a] & out[b])
                        return true;
                }
            }
            return false;
        }

        auto contains_through(span<const VertexSet> out, span<const VertexSet> in, int n, const Pattern & p, int from, int to) -> bool
        {
            switch (p.shape()) {
                case PatternShape::directed_cycle:
                    return p.parameter() <= n && has_cycle_through(out, in, p.parameter(), from, to);
                case PatternShape::transitive_tournament:
                    if (p.parameter() == 3)
                        return n >= 3 && has_tt3_through(out, in, from, to);
                    break;
                case PatternShape::generic:
                    break;
            }
            return p.embedder().contains_through(out, in, n, from, to);
        }

        auto contains(span<const VertexSet> out, span<const VertexSet> in, int n, const Pattern & p) -> bool
        {
            switch (p.shape()) {
                case PatternShape::directed_cycle:
                    return has_cycle(out, in, n, p.parameter());
                case PatternShape::transitive_tournament:
                    if (p.parameter() == 3)
                        return n >= 3 && has_tt3(out, n);
                    break;
                case PatternShape::generic:
                    break;
            }
            return p.embedder().contains(out, in, n);
        }
    }

    auto contains_pattern(const Digraph & d, const Pattern & p) -> bool
    {
        vector<VertexSet> out, in;
        arc_masks(d, out, in);
        return detail::contains(out, in, d.size(), p);
    }

    auto contains_pattern_through(const Digraph & d, const Pattern & p, int from, int to) -> bool
    {
        if (! d.has_arc(from, to))
            throw DomainError("arc " + to_string(from) + ">" + to_string(to) + " is not present");
        vector<VertexSet> out, in;
        arc_masks(d, out, in);
        return detail::contains_through(out, in, d.size(), p, from, to);
    }
}
