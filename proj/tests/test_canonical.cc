/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/canonical.hh>
#include <orcount/enumerate.hh>
#include <orcount/formats.hh>

#include "oracles.hh"

#include <doctest.h>

#include <map>
#include <set>

using namespace orcount;

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + i % 10;
        double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        auto g = oracle::random_graph(n, p, rng);
        auto perm = oracle::random_permutation(n, rng);
        REQUIRE(canonical_form(g) == canonical_form(g.permuted(perm)));
    }
}

TEST_CASE("canonical form separates classes exactly as the permutation oracle does")
{
    for (int n = 1; n <= 5; ++n) {
        std::map<std::vector<bool>, std::string> by_key;
        std::set<std::string> forms;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            std::vector<Edge> edges;
            int i = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++i)
                    if (mask >> i & 1)
                        edges.push_back({u, v});
            Graph g(n, edges);
            auto key = oracle::permutation_min_key(g);
            auto form = canonical_form(g);
            auto [it, fresh] = by_key.emplace(key, form);
            if (! fresh)
                REQUIRE(it->second == form);
            forms.insert(form);
        }
        CHECK(forms.size() == by_key.size());
    }
}

TEST_CASE("canonical labelling is a permutation giving the canonical graph")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_graph(1 + i % 12, 0.4, rng);
        auto labels = canonical_labelling(g);
        std::set<int> distinct(labels.begin(), labels.end());
        CHECK(static_cast<int>(distinct.size()) == g.size());
        CHECK(g.permuted(labels) == canonical_graph(g));
    }
}

TEST_CASE("regular and symmetric graphs")
{
    // vertex-transitive graphs stress the individualisation step
    CHECK(canonical_form(cycle_graph(12)) == canonical_form(cycle_graph(12).permuted(std::vector<int>{3, 5, 7, 9, 11, 1, 0, 2, 4, 6, 8, 10})));
    Graph petersen(10, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
            {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i)
        CHECK(canonical_form(petersen) == canonical_form(petersen.permuted(oracle::random_permutation(10, rng))));
    CHECK(canonical_form(petersen) != canonical_form(complete_bipartite_graph(5, 5)));
}

TEST_CASE("class counts match Burnside")
{
    for (int n = 1; n <= 8; ++n) {
        auto graphs = enumerate_graphs(n);
        CHECK(graphs.size() == oracle::burnside_class_count(n));
    }
}

TEST_CASE("enumeration equals deduplication of every labelled graph")
{
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> forms;
        int pairs = n * (n - 1) / 2;
        std::vector<Edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                all.push_back({u, v});
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < pairs; ++i)
                if (mask >> i & 1)
                    edges.push_back(all[i]);
            forms.insert(canonical_form(Graph(n, edges)));
        }
        std::set<std::string> enumerated;
        for (auto & g : enumerate_graphs(n))
            enumerated.insert(emit_graph6(g));
        CHECK(enumerated == forms);
    }
}

TEST_CASE("enumeration order and representatives")
{
    auto graphs = enumerate_graphs(6);
    for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
        auto a = graphs[i].edge_count(), b = graphs[i + 1].edge_count();
        CHECK(a >= b);
        if (a == b)
            CHECK(emit_graph6(graphs[i]) < emit_graph6(graphs[i + 1]));
    }
    for (auto & g : graphs)
        CHECK(canonical_graph(g) == g);
    CHECK_THROWS(enumerate_graphs(0));
    CHECK_THROWS(enumerate_graphs(10));
}
