/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/graph.hh>

#include <string>
#include <string_view>

namespace orcount
{
    // graph6 and digraph6 as published with nauty. Parsers accept the optional
    // ">>graph6<<" / ">>digraph6<<" header, reject nonzero padding bits, and
    // report malformed input as FormatError carrying the byte offset.

    auto parse_graph6(std::string_view text) -> Graph;
    auto emit_graph6(const Graph & g) -> std::string;

    auto parse_digraph6(std::string_view text) -> Digraph;
    auto emit_digraph6(const Digraph & d) -> std::string;

    // Edge lists look like "4: 0-1 1-2 2-3" for graphs and "3: 0>1 1>2" for
    // digraphs. Emission uses the canonical edge order (arcs sorted by tail, head).

    auto parse_edge_list(std::string_view text) -> Graph;
    auto emit_edge_list(const Graph & g) -> std::string;

    auto parse_arc_list(std::string_view text) -> Digraph;
    auto emit_arc_list(const Digraph & d) -> std::string;
}
