/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/big_count.hh>
#include <orcount/graph.hh>
#include <orcount/pattern.hh>

#include <string_view>
#include <vector>

namespace orcount
{
    enum class CountAlgorithm
    {
        brute,
        backtrack
    };

    auto parse_count_algorithm(std::string_view name) -> CountAlgorithm;
    auto algorithm_name(CountAlgorithm algorithm) -> std::string_view;

    inline constexpr int brute_edge_limit = 28;
    inline constexpr int backtrack_edge_limit = 40;

    struct CountOptions
    {
        CountAlgorithm algorithm = CountAlgorithm::backtrack;

        /// Threads sharing the prefix tasks.
        int workers = 1;

        /// Number of leading direction bits fixed per task; -1 picks one from
        /// the worker count. The total never depends on this.
        int split_depth = -1;
    };

    /**
     * Number of orientations of g containing no copy of p.
     *
     * brute walks all 2^|E| direction vectors and tests each full digraph.
     * backtrack first sets aside edges that lie in no copy of the underlying
     * graph of p (each doubles the count), then orients the rest in order of
     * decreasing endpoint degree, cutting a branch as soon as the newest arc
     * closes a copy of p among decided arcs.
     */
    auto count_free_orientations(const Graph & g, const Pattern & p, const CountOptions & options = {}) -> BigCount;

    auto count_free_orientations(const Graph & g, const Pattern & p, CountAlgorithm algorithm) -> BigCount;

    /// 2^d(v) times the count of g without v; never below the count of g.
    auto count_upper_bound(const Graph & g, const Pattern & p, int v, const CountOptions & options = {}) -> BigCount;

    /// Edges of g that lie in at least one copy of the underlying graph of p.
    auto constrained_edges(const Graph & g, const Pattern & p) -> std::vector<bool>;
}
