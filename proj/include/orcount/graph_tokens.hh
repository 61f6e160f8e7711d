/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/graph.hh>

#include <string_view>

namespace orcount
{
    /**
     * Graph from a command-line token:
     *   K4          complete graph (one digit), K:12 for any size
     *   K23, K2,3   complete bipartite K_{2,3} (two digits, or comma form)
     *   C5, P4      cycle, path
     *   turan:n,r   balanced complete r-partite graph
     *   "4: 0-1 1-2" an edge list
     * Anything else is read as graph6.
     */
    auto parse_graph_token(std::string_view token) -> Graph;

    /// Digraph from digraph6 or an arc list such as "3: 0>1 1>2".
    auto parse_digraph_token(std::string_view token) -> Digraph;

    /// Comma-separated vertices and ranges, e.g. "0-4,7,9".
    auto parse_vertex_set(std::string_view text) -> VertexSet;

    /// "a..b" or a single number.
    auto parse_range(std::string_view text) -> std::pair<long, long>;
}
