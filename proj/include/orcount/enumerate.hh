/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/graph.hh>

#include <vector>

namespace orcount
{
    inline constexpr int enumerate_limit = 9;

    /// Largest n handled by filtering all labelled graphs; above it classes
    /// are grown one vertex at a time from the classes on n - 1 vertices.
    inline constexpr int labelled_filter_limit = 6;

    /**
     * One canonical representative per isomorphism class of graphs on n
     * vertices, ordered by edge count descending, then by canonical graph6.
     */
    auto enumerate_graphs(int n) -> std::vector<Graph>;
}
