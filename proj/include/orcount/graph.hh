/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/errors.hh>

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace orcount
{
    using VertexSet = std::uint64_t;

    inline constexpr int max_vertices = 64;

    inline constexpr auto bit(int v) -> VertexSet
    {
        return VertexSet{1} << v;
    }

    /// The vertices 0..k-1.
    inline constexpr auto first_vertices(int k) -> VertexSet
    {
        return k >= 64 ? ~VertexSet{0} : bit(k) - 1;
    }

    inline auto set_size(VertexSet s) -> int
    {
        return std::popcount(s);
    }

    /// Calls f(v) for each member of s in increasing order.
    template <typename F_>
    inline auto for_each_vertex(VertexSet s, F_ && f) -> void
    {
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            f(v);
        }
    }

    struct Edge
    {
        int u, v;

        auto operator<=> (const Edge &) const = default;
    };

    /**
     * Simple undirected graph on at most 64 vertices. Edges are kept as pairs
     * (u, v) with u < v in lexicographic order, and edge index i always means
     * the i-th pair of that order.
     */
    class Graph
    {
        private:
            int _size = 0;
            std::vector<VertexSet> _rows;
            std::vector<Edge> _edges;

            auto rebuild_edges() -> void;

        public:
            Graph() = default;
            explicit Graph(int size);
            Graph(int size, std::span<const Edge> edges);

            static auto from_rows(std::span<const VertexSet> rows) -> Graph;

            auto size() const -> int
            {
                return _size;
            }

            auto adjacent(int u, int v) const -> bool
            {
                return _rows[u] & bit(v);
            }

            auto neighbours(int v) const -> VertexSet
            {
                return _rows[v];
            }

            auto degree(int v) const -> int
            {
                return set_size(_rows[v]);
            }

            auto rows() const -> std::span<const VertexSet>
            {
                return _rows;
            }

            auto edges() const -> const std::vector<Edge> &
            {
                return _edges;
            }

            auto edge_count() const -> int
            {
                return static_cast<int>(_edges.size());
            }

            auto all_vertices() const -> VertexSet
            {
                return first_vertices(_size);
            }

            auto min_degree() const -> int;

            /// Index of {u, v} in the canonical edge order, or -1.
            auto edge_index(int u, int v) const -> int;

            /// Drops v and shifts higher labels down by one.
            auto without_vertex(int v) const -> Graph;

            auto without_edge(int u, int v) const -> Graph;

            /// Vertex v of this graph becomes perm[v] in the result.
            auto permuted(std::span<const int> perm) const -> Graph;

            auto operator== (const Graph & other) const -> bool
            {
                return _size == other._size && _rows == other._rows;
            }
    };

    /// General directed graph; both arcs of a pair may be present.
    class Digraph
    {
        private:
            int _size = 0;
            std::vector<VertexSet> _out;

        public:
            Digraph() = default;
            explicit Digraph(int size);
            Digraph(int size, std::span<const std::pair<int, int>> arcs);

            auto size() const -> int
            {
                return _size;
            }

            auto add_arc(int from, int to) -> void;

            auto has_arc(int from, int to) const -> bool
            {
                return _out[from] & bit(to);
            }

            auto out_neighbours(int v) const -> VertexSet
            {
                return _out[v];
            }

            auto in_neighbours(int v) const -> VertexSet;

            auto out_rows() const -> std::span<const VertexSet>
            {
                return _out;
            }

            auto arc_count() const -> int;

            auto arcs() const -> std::vector<std::pair<int, int>>;

            /// True when no pair carries arcs in both directions.
            auto is_oriented() const -> bool;

            auto reversed() const -> Digraph;

            auto underlying_graph() const -> Graph;

            auto permuted(std::span<const int> perm) const -> Digraph;

            auto operator== (const Digraph &) const -> bool = default;
    };

    struct Bipartition
    {
        VertexSet side_mask = 0;
        int within_edges = 0;
    };

    /// Complete r-partite graph with contiguous, balanced parts (larger parts first).
    auto turan_graph(int n, int r) -> Graph;

    auto turan_number(long long n, long long r) -> long long;

    inline constexpr int max_cut_exact_limit = 30;

    /// Bipartition with fewest edges inside parts; ties go to the smallest side mask.
    auto max_cut(const Graph & g) -> Bipartition;

    auto within_edges(const Graph & g, VertexSet side) -> int;

    auto common_neighbours(const Graph & g, int u, int v) -> VertexSet;

    auto complete_graph(int n) -> Graph;
    auto complete_bipartite_graph(int a, int b) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;

    auto is_bipartite(const Graph & g) -> bool;
}
