/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/canonical.hh>
#include <orcount/enumerate.hh>
#include <orcount/formats.hh>

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

using std::pair;
using std::string;
using std::to_string;
using std::unordered_map;
using std::vector;

namespace orcount
{
    namespace
    {
        using ClassMap = unordered_map<string, Graph>;

        auto add_class(ClassMap & classes, const Graph & g) -> void
        {
            auto labels = canonical_labelling(g);
            auto canon = g.permuted(labels);
            auto key = emit_graph6(canon);
            classes.try_emplace(std::move(key), std::move(canon));
        }

        auto filter_labelled(int n) -> ClassMap
        {
            vector<Edge> pairs;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    pairs.push_back(Edge{u, v});

            ClassMap classes;
            std::uint64_t total = std::uint64_t{1} << pairs.size();
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                vector<Edge> edges;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if (mask & (std::uint64_t{1} << i))
                        edges.push_back(pairs[i]);
                add_class(classes, Graph(n, edges));
            }
            return classes;
        }

        auto augment(const vector<Graph> & parents, int n) -> ClassMap
        {
            ClassMap classes;
            VertexSet subsets = bit(n - 1);
            for (auto & parent : parents) {
                vector<VertexSet> rows(parent.rows().begin(), parent.rows().end());
                rows.push_back(0);
                for (VertexSet s = 0; s < subsets; ++s) {
                    rows[n - 1] = s;
                    for (int v = 0; v < n - 1; ++v)
                        rows[v] = (parent.neighbours(v) & ~bit(n - 1)) | ((s & bit(v)) ? bit(n - 1) : 0);
                    add_class(classes, Graph::from_rows(rows));
                }
            }
            return classes;
        }

        auto sorted(ClassMap && classes) -> vector<Graph>
        {
            vector<pair<string, Graph>> items(std::make_move_iterator(classes.begin()), std::make_move_iterator(classes.end()));
            std::sort(items.begin(), items.end(), [] (const auto & a, const auto & b) {
                    if (a.second.edge_count() != b.second.edge_count())
                        return a.second.edge_count() > b.second.edge_count();
                    return a.first < b.first;
                    });
            vector<Graph> result;
            result.reserve(items.size());
            for (auto & [key, g] : items)
                result.push_back(std::move(g));
            return result;
        }
    }

    auto enumerate_graphs(int n) -> vector<Graph>
    {
        if (n < 1)
            throw DomainError("enumeration needs at least one vertex");
        if (n > enumerate_limit)
            throw SizeLimitError("full enumeration supports at most " + to_string(enumerate_limit) + " vertices");
        if (n <= labelled_filter_limit)
            return sorted(filter_labelled(n));
        return sorted(augment(enumerate_graphs(n - 1), n));
    }
}
