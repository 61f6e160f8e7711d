/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/counting.hh>
#include <orcount/enumerate.hh>
#include <orcount/formats.hh>
#include <orcount/graph.hh>
#include <orcount/parallel.hh>
#include <orcount/stability.hh>

#include <optional>

using std::optional;
using std::to_string;
using std::vector;

namespace orcount
{
    auto stability_scan(int n, const Pattern & p, double delta, int workers, int limit) -> vector<StabilityRow>
    {
        if (n > limit)
            throw SizeLimitError("stability scan limited to n <= " + to_string(limit));
        if (delta < 0.0)
            throw DomainError("delta must be non-negative");

        auto classes = enumerate_graphs(n);
        long long exponent = turan_number(n, 2);
        BigCount target = power_of_two(exponent);

        vector<optional<StabilityRow>> found(classes.size());
        parallel_for(classes.size(), workers, [&] (std::size_t i) {
                auto & g = classes[i];
                // count <= 2^|E|, so sparser classes cannot qualify
                if (g.edge_count() < exponent)
                    return;
                auto count = count_free_orientations(g, p);
                if (count < target)
                    return;
                StabilityRow row;
                row.graph = emit_graph6(g);
                row.count = count;
                row.edges = g.edge_count();
                row.within_edges = max_cut(g).within_edges;
                row.allowance = delta * n * n;
                row.within_allowance = row.within_edges <= row.allowance;
                found[i] = std::move(row);
                });

        vector<StabilityRow> rows;
        for (auto & r : found)
            if (r)
                rows.push_back(std::move(*r));
        return rows;
    }
}
