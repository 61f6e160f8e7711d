/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/errors.hh>
#include <orcount/formats.hh>
#include <orcount/graph.hh>
#include <orcount/graph_tokens.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace orcount;

TEST_CASE("turan graphs")
{
    CHECK(turan_graph(4, 2) == complete_bipartite_graph(2, 2));
    CHECK(turan_graph(5, 5) == complete_graph(5));
    CHECK(turan_graph(5, 2).edge_count() == 6);
    CHECK(turan_graph(7, 3).edge_count() == 16);
    CHECK_THROWS_AS(turan_graph(3, 0), DomainError);
    CHECK_THROWS_AS(turan_graph(65, 2), Error);

    for (long long n = 0; n <= 1000000; ++n)
        if (turan_number(n, 2) != n * n / 4)
            FAIL("turan_number(" << n << ", 2)");

    for (int n = 2; n <= 20; ++n)
        CHECK(max_cut(turan_graph(n, 2)).within_edges == 0);
}

TEST_CASE("max cut against every bipartition")
{
    CHECK(max_cut(complete_graph(5)).within_edges == 4);
    CHECK(max_cut(cycle_graph(5)).within_edges == 1);
    CHECK(max_cut(Graph(0)).within_edges == 0);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 10;
        auto g = oracle::random_graph(n, 0.5, rng);
        auto cut = max_cut(g);
        CHECK(cut.within_edges == oracle::max_cut_within(g));
        CHECK(within_edges(g, cut.side_mask) == cut.within_edges);
    }
    CHECK_THROWS_AS(max_cut(Graph(31)), SizeLimitError);
}

TEST_CASE("graph basics")
{
    Graph g(4, std::vector<Edge>{{2, 3}, {0, 1}, {1, 2}});
    CHECK(g.edge_count() == 3);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[2] == Edge{2, 3});
    CHECK(g.edge_index(1, 2) == 1);
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.edge_index(0, 3) == -1);
    CHECK(g.min_degree() == 1);
    CHECK(g.without_vertex(1).edge_count() == 1);
    CHECK(g.without_edge(1, 2).edge_count() == 2);
    CHECK(is_bipartite(g));
    CHECK(! is_bipartite(cycle_graph(5)));
    CHECK(common_neighbours(complete_graph(5), 0, 1) == 0b11100);

    Graph big = complete_graph(64);
    CHECK(big.edge_count() == 64 * 63 / 2);
    CHECK(big.degree(63) == 63);
}

TEST_CASE("graph6 published examples")
{
    CHECK(emit_graph6(complete_graph(3)) == "Bw");
    CHECK(emit_graph6(Graph(0)) == "?");
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
    CHECK(emit_graph6(complete_graph(4)) == "C~");
    CHECK(emit_graph6(path_graph(2)) == "A_");
}

TEST_CASE("graph6 round trip, including the long size form")
{
    std::mt19937_64 rng(3);
    for (int n : {0, 1, 2, 5, 9, 30, 62, 63, 64}) {
        for (int i = 0; i < 5; ++i) {
            auto g = oracle::random_graph(n, 0.3, rng);
            auto text = emit_graph6(g);
            CHECK(parse_graph6(text) == g);
            CHECK(emit_graph6(parse_graph6(text)) == text);
        }
    }
    CHECK(emit_graph6(Graph(63)).substr(0, 4) == "~??~");
}

TEST_CASE("malformed graph6 reports the offset")
{
    auto offset_of = [] (std::string_view text) {
        try {
            parse_graph6(text);
        }
        catch (const FormatError & e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("B") == 1);
    CHECK(offset_of("Bx") == 1);
    CHECK(offset_of("Bww") == 2);
    CHECK(offset_of("B\x01") == 1);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("~??D") >= 0);
}

TEST_CASE("digraph6")
{
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(2, 0);
    auto text = emit_digraph6(d);
    CHECK(text[0] == '&');
    CHECK(parse_digraph6(text) == d);
    CHECK(parse_digraph6(">>digraph6<<" + text) == d);
    CHECK_THROWS_AS(parse_digraph6("&B"), FormatError);

    std::mt19937_64 rng(5);
    for (int n : {1, 4, 17, 63, 64}) {
        Digraph r(n);
        std::bernoulli_distribution arc(0.2);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && arc(rng))
                    r.add_arc(u, v);
        CHECK(parse_digraph6(emit_digraph6(r)) == r);
    }
}

TEST_CASE("edge and arc lists")
{
    CHECK(parse_edge_list("3: 0-1 1-2 0-2") == complete_graph(3));
    CHECK(emit_edge_list(path_graph(3)) == "3: 0-1 1-2");
    CHECK(parse_edge_list("2:") == Graph(2));
    CHECK_THROWS_AS(parse_edge_list("3: 0-3"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3: 0-0"), FormatError);
    auto d = parse_arc_list("3: 2>0 0>1");
    CHECK(d.has_arc(2, 0));
    CHECK(emit_arc_list(d) == "3: 0>1 2>0");
}

TEST_CASE("graph tokens")
{
    CHECK(parse_graph_token("K4") == complete_graph(4));
    CHECK(parse_graph_token("K:12") == complete_graph(12));
    CHECK(parse_graph_token("K23") == complete_bipartite_graph(2, 3));
    CHECK(parse_graph_token("K2,3") == complete_bipartite_graph(2, 3));
    CHECK(parse_graph_token("C5") == cycle_graph(5));
    CHECK(parse_graph_token("P4") == path_graph(4));
    CHECK(parse_graph_token("turan:6,3") == turan_graph(6, 3));
    CHECK(parse_graph_token("3: 0-1") == Graph(3, std::vector<Edge>{{0, 1}}));
    CHECK(parse_graph_token("Bw") == complete_graph(3));
    CHECK(parse_vertex_set("0-2,5") == 0b100111);
    CHECK(parse_range("2..6") == std::pair{2L, 6L});
    CHECK(parse_range("4") == std::pair{4L, 4L});
    CHECK_THROWS(parse_range("6..x"));
}
