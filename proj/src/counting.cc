/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/counting.hh>
#include <orcount/parallel.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

using std::span;
using std::string;
using std::string_view;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace orcount
{
    namespace
    {
        auto auto_split_depth(const CountOptions & options, int available) -> int
        {
            int depth = options.split_depth;
            if (depth < 0)
                depth = options.workers <= 1 ? 0 : std::bit_width(static_cast<unsigned>(options.workers)) + 4;
            return std::clamp(depth, 0, available);
        }

        auto sum_tasks(const vector<uint64_t> & partial) -> uint64_t
        {
            return std::accumulate(partial.begin(), partial.end(), uint64_t{0});
        }

        auto count_brute(const Graph & g, const Pattern & p, const CountOptions & options) -> BigCount
        {
            int m = g.edge_count(), n = g.size();
            if (m > brute_edge_limit)
                throw SizeLimitError("brute counter supports at most " + to_string(brute_edge_limit) + " edges, graph has " + to_string(m));

            auto & edges = g.edges();
            int split = auto_split_depth(options, m);
            int low_bits = m - split;
            vector<uint64_t> partial(std::size_t{1} << split, 0);

            parallel_for(partial.size(), options.workers, [&] (std::size_t task) {
                    vector<VertexSet> out(n), in(n);
                    uint64_t count = 0;
                    for (uint64_t low = 0; low < (uint64_t{1} << low_bits); ++low) {
                        uint64_t dirs = (uint64_t{task} << low_bits) | low;
                        std::fill(out.begin(), out.end(), 0);
                        std::fill(in.begin(), in.end(), 0);
                        for (int i = 0; i < m; ++i) {
                            auto [u, v] = edges[i];
                            if ((dirs >> i) & 1)
                                std::swap(u, v);
                            out[u] |= bit(v);
                            in[v] |= bit(u);
                        }
                        if (! detail::contains(out, in, n, p))
                            ++count;
                    }
                    partial[task] = count;
                    });

            return BigCount{sum_tasks(partial)};
        }

        struct Backtracker
        {
            const Pattern & pattern;
            int n;
            const vector<Edge> & order;
            vector<VertexSet> out, in;

            Backtracker(const Pattern & p, int size, const vector<Edge> & o) :
                pattern(p),
                n(size),
                order(o),
                out(size, 0),
                in(size, 0)
            {
            }

            // Adds the arc and reports whether the decided arcs are still free of p.
            auto place(int from, int to) -> bool
            {
                out[from] |= bit(to);
                in[to] |= bit(from);
                return ! detail::contains_through(out, in, n, pattern, from, to);
            }

            auto unplace(int from, int to) -> void
            {
                out[from] &= ~bit(to);
                in[to] &= ~bit(from);
            }

            auto count_from(std::size_t i) -> uint64_t
            {
                if (i == order.size())
                    return 1;
                auto [u, v] = order[i];
                uint64_t total = 0;
                if (place(u, v))
                    total += count_from(i + 1);
                unplace(u, v);
                if (place(v, u))
                    total += count_from(i + 1);
                unplace(v, u);
                return total;
            }

            auto count_with_prefix(uint64_t prefix, int length) -> uint64_t
            {
                bool alive = true;
                for (int i = 0; i < length && alive; ++i) {
                    auto [u, v] = order[i];
                    if ((prefix >> i) & 1)
                        std::swap(u, v);
                    alive = place(u, v);
                }
                return alive ? count_from(length) : 0;
            }
        };

        // Vertices ranked by degree (highest first); an edge is keyed by the
        // worse rank of its endpoints, so copies among top vertices close early.
        auto backtrack_order(const Graph & g, const vector<Edge> & edges) -> vector<Edge>
        {
            vector<int> by_degree(g.size());
            std::iota(by_degree.begin(), by_degree.end(), 0);
            std::stable_sort(by_degree.begin(), by_degree.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });
            vector<int> rank(g.size());
            for (int i = 0; i < g.size(); ++i)
                rank[by_degree[i]] = i;

            vector<Edge> result = edges;
            std::stable_sort(result.begin(), result.end(), [&] (const Edge & a, const Edge & b) {
                    auto key = [&] (const Edge & e) {
                        return std::pair{std::max(rank[e.u], rank[e.v]), std::min(rank[e.u], rank[e.v])};
                    };
                    return key(a) < key(b);
                    });
            return result;
        }

        auto count_backtrack(const Graph & g, const Pattern & p, const CountOptions & options) -> BigCount
        {
            auto constrained = constrained_edges(g, p);
            vector<Edge> active;
            int free_edges = 0;
            for (int i = 0; i < g.edge_count(); ++i) {
                if (constrained[i])
                    active.push_back(g.edges()[i]);
                else
                    ++free_edges;
            }
            if (static_cast<int>(active.size()) > backtrack_edge_limit)
                throw SizeLimitError("backtrack counter supports at most " + to_string(backtrack_edge_limit)
                        + " constrained edges, graph has " + to_string(active.size()));

            auto order = backtrack_order(g, active);
            int split = auto_split_depth(options, static_cast<int>(order.size()));
            vector<uint64_t> partial(std::size_t{1} << split, 0);

            parallel_for(partial.size(), options.workers, [&] (std::size_t task) {
                    Backtracker search(p, g.size(), order);
                    partial[task] = search.count_with_prefix(task, split);
                    });

            BigCount result{sum_tasks(partial)};
            mpz_mul_2exp(result.get_mpz_t(), result.get_mpz_t(), free_edges);
            return result;
        }
    }

    auto parse_count_algorithm(string_view name) -> CountAlgorithm
    {
        if (name == "brute")
            return CountAlgorithm::brute;
        if (name == "backtrack")
            return CountAlgorithm::backtrack;
        throw DomainError("unknown counting algorithm '" + string(name) + "'");
    }

    auto algorithm_name(CountAlgorithm algorithm) -> string_view
    {
        return algorithm == CountAlgorithm::brute ? "brute" : "backtrack";
    }

    auto constrained_edges(const Graph & g, const Pattern & p) -> vector<bool>
    {
        int n = g.size();
        vector<bool> result(g.edge_count(), false);
        if (p.size() > n)
            return result;

        auto rows = g.rows();
        auto underlying = p.digraph().underlying_graph();
        Digraph symmetric(p.size());
        for (auto & [a, b] : underlying.edges()) {
            symmetric.add_arc(a, b);
            symmetric.add_arc(b, a);
        }
        Embedder undirected(symmetric);

        for (int i = 0; i < g.edge_count(); ++i) {
            auto [u, v] = g.edges()[i];
            switch (p.shape()) {
                case PatternShape::directed_cycle:
                    result[i] = detail::has_cycle_through(rows, rows, p.parameter(), u, v);
                    break;
                case PatternShape::transitive_tournament:
                    if (p.parameter() == 3) {
                        result[i] = (rows[u] & rows[v]) != 0;
                        break;
                    }
                    [[fallthrough]];
                case PatternShape::generic:
                    result[i] = undirected.contains_through(rows, rows, n, u, v);
                    break;
            }
        }
        return result;
    }

    auto count_free_orientations(const Graph & g, const Pattern & p, const CountOptions & options) -> BigCount
    {
        switch (options.algorithm) {
            case CountAlgorithm::brute: return count_brute(g, p, options);
            case CountAlgorithm::backtrack: return count_backtrack(g, p, options);
        }
        throw DomainError("unknown counting algorithm");
    }

    auto count_free_orientations(const Graph & g, const Pattern & p, CountAlgorithm algorithm) -> BigCount
    {
        CountOptions options;
        options.algorithm = algorithm;
        return count_free_orientations(g, p, options);
    }

    auto count_upper_bound(const Graph & g, const Pattern & p, int v, const CountOptions & options) -> BigCount
    {
        if (v < 0 || v >= g.size())
            throw DomainError("vertex " + to_string(v) + " out of range");
        BigCount rest = count_free_orientations(g.without_vertex(v), p, options);
        mpz_mul_2exp(rest.get_mpz_t(), rest.get_mpz_t(), g.degree(v));
        return rest;
    }
}
