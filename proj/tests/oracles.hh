/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

// Reference implementations that share no code with the library beyond the
// Graph and Digraph containers. They are slow on purpose.

#include <orcount/graph.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle
{
    using orcount::Digraph;
    using orcount::Graph;

    inline auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution edge(p);
        std::vector<orcount::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng))
                    edges.push_back({u, v});
        return Graph(n, edges);
    }

    inline auto random_permutation(int n, std::mt19937_64 & rng) -> std::vector<int>
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    }

    /// Random bipartite graph with at most max_edges edges.
    inline auto random_bipartite(std::mt19937_64 & rng, int max_edges) -> Graph
    {
        std::uniform_int_distribution<int> size(2, 9);
        int n = size(rng);
        std::vector<int> side(n);
        for (auto & s : side)
            s = std::uniform_int_distribution<int>(0, 1)(rng);
        std::vector<orcount::Edge> candidates;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (side[u] != side[v])
                    candidates.push_back({u, v});
        std::shuffle(candidates.begin(), candidates.end(), rng);
        int m = std::uniform_int_distribution<int>(0, std::min<int>(max_edges, candidates.size()))(rng);
        candidates.resize(m);
        return Graph(n, candidates);
    }

    /// Injective arc-preserving map from pattern into host, by trying every assignment.
    inline auto contains(const Digraph & host, const Digraph & pattern) -> bool
    {
        int k = pattern.size(), n = host.size();
        if (k > n)
            return false;
        auto arcs = pattern.arcs();
        std::vector<int> image(k, -1);
        std::vector<bool> used(n, false);
        auto place = [&] (auto & self, int i) -> bool {
            if (i == k) {
                for (auto [a, b] : arcs)
                    if (! host.has_arc(image[a], image[b]))
                        return false;
                return true;
            }
            for (int v = 0; v < n; ++v)
                if (! used[v]) {
                    used[v] = true;
                    image[i] = v;
                    bool found = self(self, i + 1);
                    used[v] = false;
                    if (found)
                        return true;
                }
            return false;
        };
        return place(place, 0);
    }

    inline auto directed_cycle(int length) -> Digraph
    {
        Digraph d(length);
        for (int i = 0; i < length; ++i)
            d.add_arc(i, (i + 1) % length);
        return d;
    }

    inline auto transitive_triangle() -> Digraph
    {
        Digraph d(3);
        d.add_arc(0, 1);
        d.add_arc(1, 2);
        d.add_arc(0, 2);
        return d;
    }

    /// Counts pattern-free orientations by listing every orientation.
    inline auto count(const Graph & g, const Digraph & pattern) -> std::uint64_t
    {
        auto edges = g.edges();
        std::uint64_t total = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
            Digraph d(g.size());
            for (std::size_t i = 0; i < edges.size(); ++i) {
                auto [u, v] = edges[i];
                if (mask >> i & 1)
                    d.add_arc(v, u);
                else
                    d.add_arc(u, v);
            }
            if (! contains(d, pattern))
                ++total;
        }
        return total;
    }

    /// Adjacency matrix bits under a relabelling, read row by row above the diagonal.
    inline auto relabelled_key(const Graph & g, const std::vector<int> & perm) -> std::vector<bool>
    {
        int n = g.size();
        std::vector<int> inverse(n);
        for (int v = 0; v < n; ++v)
            inverse[perm[v]] = v;
        std::vector<bool> key;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                key.push_back(g.adjacent(inverse[i], inverse[j]));
        return key;
    }

    /// Lexicographically least relabelled adjacency over all n! permutations.
    inline auto permutation_min_key(const Graph & g) -> std::vector<bool>
    {
        std::vector<int> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<bool> best = relabelled_key(g, perm);
        while (std::next_permutation(perm.begin(), perm.end()))
            best = std::min(best, relabelled_key(g, perm));
        return best;
    }

    /// Number of unlabelled graphs on n vertices by Burnside's lemma over S_n.
    inline auto burnside_class_count(int n) -> std::uint64_t
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t total = 0, factorial = 1;
        for (int i = 2; i <= n; ++i)
            factorial *= i;
        std::vector<std::uint64_t> counts(n * n + 1, 0);
        do {
            std::vector<bool> seen(n * n, false);
            int cycles = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (! seen[u * n + v]) {
                        ++cycles;
                        int a = u, b = v;
                        while (! seen[a * n + b]) {
                            seen[a * n + b] = true;
                            a = perm[a];
                            b = perm[b];
                            if (a > b)
                                std::swap(a, b);
                        }
                    }
            ++counts[cycles];
        } while (std::next_permutation(perm.begin(), perm.end()));
        // sum of 2^(edge cycles) over S_n, at most 9! * 2^36 here
        for (std::size_t c = 0; c < counts.size(); ++c)
            total += counts[c] << c;
        return total / factorial;
    }

    /// Fewest edges inside the parts, over every bipartition.
    inline auto max_cut_within(const Graph & g) -> int
    {
        int n = g.size(), best = g.edge_count();
        for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
            int within = 0;
            for (auto [u, v] : g.edges())
                if ((side >> u & 1) == (side >> v & 1))
                    ++within;
            best = std::min(best, within);
        }
        return best;
    }

    /// C(n, k) from Pascal's triangle in 128-bit integers, fine for n <= 120 or so.
    inline auto pascal(int limit) -> std::vector<std::vector<unsigned __int128>>
    {
        std::vector<std::vector<unsigned __int128>> rows(limit + 1);
        for (int n = 0; n <= limit; ++n) {
            rows[n].assign(n + 1, 1);
            for (int k = 1; k < n; ++k)
                rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
        return rows;
    }

    inline auto to_string(unsigned __int128 value) -> std::string
    {
        if (value == 0)
            return "0";
        std::string digits;
        while (value) {
            digits.push_back('0' + static_cast<int>(value % 10));
            value /= 10;
        }
        return {digits.rbegin(), digits.rend()};
    }

    /**
     * Checks a claimed alternating directed path: distinct vertices, every
     * arc present, sides alternating, starting on the chosen side, 2k arcs.
     */
    inline auto valid_path(const Digraph & d, orcount::VertexSet w1, orcount::VertexSet w2, int k,
            const std::vector<int> & vertices, bool start_in_w2 = false) -> bool
    {
        if (static_cast<int>(vertices.size()) != 2 * k + 1)
            return false;
        std::set<int> distinct(vertices.begin(), vertices.end());
        if (distinct.size() != vertices.size())
            return false;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            bool first_side = (i % 2 == 0) != start_in_w2;
            auto side = first_side ? w1 : w2;
            if (! (side >> vertices[i] & 1))
                return false;
            if (i + 1 < vertices.size() && ! d.has_arc(vertices[i], vertices[i + 1]))
                return false;
        }
        return true;
    }
}
