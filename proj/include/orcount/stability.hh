/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/big_count.hh>
#include <orcount/pattern.hh>

#include <string>
#include <vector>

namespace orcount
{
    inline constexpr int default_stability_limit = 6;

    struct StabilityRow
    {
        std::string graph;
        BigCount count;
        int edges = 0;
        int within_edges = 0;
        double allowance = 0.0;
        bool within_allowance = false;
    };

    /**
     * Every class on n vertices whose p-free orientation count reaches
     * 2^floor(n^2/4), with its distance to bipartite (fewest edges inside
     * the parts of any bipartition) against the allowance delta * n^2.
     * Diagnostic only: nothing here is asserted.
     */
    auto stability_scan(int n, const Pattern & p, double delta, int workers = 1, int limit = default_stability_limit) -> std::vector<StabilityRow>;
}
