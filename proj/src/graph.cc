/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/graph.hh>

#include <algorithm>
#include <string>

using std::pair;
using std::span;
using std::to_string;
using std::vector;

namespace orcount
{
    namespace
    {
        auto check_size(int n) -> void
        {
            if (n < 0 || n > max_vertices)
                throw SizeLimitError("vertex count " + to_string(n) + " outside 0.." + to_string(max_vertices));
        }

        auto check_vertex(int v, int n) -> void
        {
            if (v < 0 || v >= n)
                throw DomainError("vertex " + to_string(v) + " out of range for " + to_string(n) + " vertices");
        }
    }

    Graph::Graph(int size) :
        _size(size)
    {
        check_size(size);
        _rows.assign(size, 0);
    }

    Graph::Graph(int size, span<const Edge> edges) :
        Graph(size)
    {
        for (auto & [u, v] : edges) {
            check_vertex(u, size);
            check_vertex(v, size);
            if (u == v)
                throw DomainError("self-loop at vertex " + to_string(u));
            _rows[u] |= bit(v);
            _rows[v] |= bit(u);
        }
        rebuild_edges();
    }

    auto Graph::from_rows(span<const VertexSet> rows) -> Graph
    {
        Graph result(static_cast<int>(rows.size()));
        for (int v = 0; v < result._size; ++v) {
            if (rows[v] & ~result.all_vertices())
                throw DomainError("neighbour mask of vertex " + to_string(v) + " exceeds vertex count");
            if (rows[v] & bit(v))
                throw DomainError("self-loop at vertex " + to_string(v));
            result._rows[v] = rows[v];
        }
        for (int v = 0; v < result._size; ++v)
            for_each_vertex(result._rows[v], [&] (int w) {
                    if (! (result._rows[w] & bit(v)))
                        throw DomainError("asymmetric adjacency between " + to_string(v) + " and " + to_string(w));
                    });
        result.rebuild_edges();
        return result;
    }

    auto Graph::rebuild_edges() -> void
    {
        _edges.clear();
        for (int u = 0; u < _size; ++u)
            for_each_vertex(_rows[u], [&] (int v) {
                    if (v > u)
                        _edges.push_back(Edge{u, v});
                    });
    }

    auto Graph::min_degree() const -> int
    {
        int result = _size;
        for (int v = 0; v < _size; ++v)
            result = std::min(result, degree(v));
        return result;
    }

    auto Graph::edge_index(int u, int v) const -> int
    {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(_edges.begin(), _edges.end(), Edge{u, v});
        if (it == _edges.end() || *it != Edge{u, v})
            return -1;
        return static_cast<int>(it - _edges.begin());
    }

    auto Graph::without_vertex(int v) const -> Graph
    {
        check_vertex(v, _size);
        vector<VertexSet> rows;
        VertexSet low = bit(v) - 1;
        for (int w = 0; w < _size; ++w) {
            if (w == v)
                continue;
            VertexSet r = _rows[w];
            rows.push_back((r & low) | ((r >> 1) & ~low));
        }
        return from_rows(rows);
    }

    auto Graph::without_edge(int u, int v) const -> Graph
    {
        check_vertex(u, _size);
        check_vertex(v, _size);
        vector<VertexSet> rows(_rows);
        rows[u] &= ~bit(v);
        rows[v] &= ~bit(u);
        return from_rows(rows);
    }

    auto Graph::permuted(span<const int> perm) const -> Graph
    {
        if (static_cast<int>(perm.size()) != _size)
            throw DomainError("permutation length does not match vertex count");
        vector<VertexSet> rows(_size, 0);
        for (int v = 0; v < _size; ++v)
            for_each_vertex(_rows[v], [&] (int w) { rows[perm[v]] |= bit(perm[w]); });
        return from_rows(rows);
    }

    Digraph::Digraph(int size) :
        _size(size)
    {
        check_size(size);
        _out.assign(size, 0);
    }

    Digraph::Digraph(int size, span<const pair<int, int>> arcs) :
        Digraph(size)
    {
        for (auto & [from, to] : arcs)
            add_arc(from, to);
    }

    auto Digraph::add_arc(int from, int to) -> void
    {
        check_vertex(from, _size);
        check_vertex(to, _size);
        if (from == to)
            throw DomainError("self-loop at vertex " + to_string(from));
        _out[from] |= bit(to);
    }

    auto Digraph::in_neighbours(int v) const -> VertexSet
    {
        VertexSet result = 0;
        for (int w = 0; w < _size; ++w)
            if (_out[w] & bit(v))
                result |= bit(w);
        return result;
    }

    auto Digraph::arc_count() const -> int
    {
        int result = 0;
        for (auto r : _out)
            result += set_size(r);
        return result;
    }

    auto Digraph::arcs() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int v = 0; v < _size; ++v)
            for_each_vertex(_out[v], [&] (int w) { result.emplace_back(v, w); });
        return result;
    }

    auto Digraph::is_oriented() const -> bool
    {
        for (int v = 0; v < _size; ++v) {
            bool bidirected = false;
            for_each_vertex(_out[v], [&] (int w) { bidirected = bidirected || (_out[w] & bit(v)); });
            if (bidirected)
                return false;
        }
        return true;
    }

    auto Digraph::reversed() const -> Digraph
    {
        Digraph result(_size);
        for (int v = 0; v < _size; ++v)
            for_each_vertex(_out[v], [&] (int w) { result._out[w] |= bit(v); });
        return result;
    }

    auto Digraph::underlying_graph() const -> Graph
    {
        vector<VertexSet> rows(_size, 0);
        for (int v = 0; v < _size; ++v)
            for_each_vertex(_out[v], [&] (int w) {
                    rows[v] |= bit(w);
                    rows[w] |= bit(v);
                    });
        return Graph::from_rows(rows);
    }

    auto Digraph::permuted(span<const int> perm) const -> Digraph
    {
        if (static_cast<int>(perm.size()) != _size)
            throw DomainError("permutation length does not match vertex count");
        Digraph result(_size);
        for (int v = 0; v < _size; ++v)
            for_each_vertex(_out[v], [&] (int w) { result._out[perm[v]] |= bit(perm[w]); });
        return result;
    }

    auto turan_number(long long n, long long r) -> long long
    {
        if (r <= 0)
            throw DomainError("Turan number needs at least one part");
        if (n < 0)
            throw DomainError("negative vertex count");
        // parts of size q+1 (rem of them) and q; count non-edges inside parts
        long long q = n / r, rem = n % r;
        long long inside = rem * ((q + 1) * q / 2) + (r - rem) * (q * (q - 1) / 2);
        return n * (n - 1) / 2 - inside;
    }

    auto turan_graph(int n, int r) -> Graph
    {
        if (r <= 0)
            throw DomainError("Turan graph needs at least one part");
        check_size(n);
        if (r > n)
            throw DomainError("more parts than vertices");
        vector<int> part(n);
        int q = n / r, rem = n % r, v = 0;
        for (int p = 0; p < r; ++p)
            for (int i = 0; i < q + (p < rem ? 1 : 0); ++i)
                part[v++] = p;
        vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (part[a] != part[b])
                    edges.push_back(Edge{a, b});
        return Graph(n, edges);
    }

    auto within_edges(const Graph & g, VertexSet side) -> int
    {
        int twice = 0;
        VertexSet other = g.all_vertices() & ~side;
        for (int v = 0; v < g.size(); ++v)
            twice += set_size(g.neighbours(v) & ((side & bit(v)) ? side : other));
        return twice / 2;
    }

    auto max_cut(const Graph & g) -> Bipartition
    {
        int n = g.size();
        if (n > max_cut_exact_limit)
            throw SizeLimitError("exact max-cut supports at most " + to_string(max_cut_exact_limit) + " vertices");
        if (n == 0)
            return Bipartition{};

        // Vertex n-1 stays out of the side mask: of a mask and its complement,
        // the smaller one never contains the top vertex. Walk a Gray code over
        // the remaining vertices, updating the count one flip at a time.
        Bipartition best{0, g.edge_count()};
        VertexSet side = 0;
        int within = g.edge_count();
        std::uint64_t steps = std::uint64_t{1} << (n - 1);
        for (std::uint64_t i = 1; i < steps; ++i) {
            int v = std::countr_zero(i);
            VertexSet nbrs = g.neighbours(v);
            VertexSet same = (side & bit(v)) ? side : (g.all_vertices() & ~side);
            VertexSet other = g.all_vertices() & ~same;
            within += set_size(nbrs & other) - set_size(nbrs & same);
            side ^= bit(v);
            if (within < best.within_edges || (within == best.within_edges && side < best.side_mask))
                best = Bipartition{side, within};
        }
        return best;
    }

    auto common_neighbours(const Graph & g, int u, int v) -> VertexSet
    {
        check_vertex(u, g.size());
        check_vertex(v, g.size());
        if (u == v)
            throw DomainError("common neighbours need two distinct vertices");
        return g.neighbours(u) & g.neighbours(v);
    }

    auto complete_graph(int n) -> Graph
    {
        check_size(n);
        vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                edges.push_back(Edge{a, b});
        return Graph(n, edges);
    }

    auto complete_bipartite_graph(int a, int b) -> Graph
    {
        check_size(a + b);
        vector<Edge> edges;
        for (int x = 0; x < a; ++x)
            for (int y = a; y < a + b; ++y)
                edges.push_back(Edge{x, y});
        return Graph(a + b, edges);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw DomainError("a cycle needs at least three vertices");
        check_size(n);
        vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            edges.push_back(Edge{std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
        return Graph(n, edges);
    }

    auto path_graph(int n) -> Graph
    {
        check_size(n);
        vector<Edge> edges;
        for (int v = 0; v + 1 < n; ++v)
            edges.push_back(Edge{v, v + 1});
        return Graph(n, edges);
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        vector<int> colour(g.size(), -1);
        for (int s = 0; s < g.size(); ++s) {
            if (colour[s] != -1)
                continue;
            colour[s] = 0;
            vector<int> stack{s};
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                bool clash = false;
                for_each_vertex(g.neighbours(v), [&] (int w) {
                        if (colour[w] == -1) {
                            colour[w] = 1 - colour[v];
                            stack.push_back(w);
                        }
                        else if (colour[w] == colour[v])
                            clash = true;
                        });
                if (clash)
                    return false;
            }
        }
        return true;
    }
}
