/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/graph.hh>

#include <string>
#include <vector>

namespace orcount
{
    /**
     * Canonical labelling by colour refinement and individualisation. Every
     * leaf of the search tree is compared and the smallest relabelled
     * adjacency wins; subtrees rooted at twin vertices (same neighbourhood
     * apart from each other) are skipped because swapping twins maps one onto
     * the other.
     *
     * labels[v] is the canonical label of vertex v.
     */
    auto canonical_labelling(const Graph & g) -> std::vector<int>;

    auto canonical_graph(const Graph & g) -> Graph;

    /// graph6 of the canonical graph. Equal exactly when the graphs are isomorphic.
    auto canonical_form(const Graph & g) -> std::string;
}
