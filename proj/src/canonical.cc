/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/canonical.hh>
#include <orcount/formats.hh>

#include <algorithm>
#include <numeric>

using std::string;
using std::vector;

namespace orcount
{
    namespace
    {
        struct CanonicalSearch
        {
            const Graph & graph;
            int n;

            vector<VertexSet> best_rows;
            vector<int> best_labels;

            explicit CanonicalSearch(const Graph & g) :
                graph(g),
                n(g.size())
            {
            }

            // Ranks vertices by sort keys; returns the number of distinct keys.
            template <typename Key_>
            auto rank_by(vector<int> & colour, const vector<Key_> & keys) -> int
            {
                vector<int> order(n);
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&] (int a, int b) { return keys[a] < keys[b]; });
                int next = -1;
                for (int i = 0; i < n; ++i) {
                    if (i == 0 || keys[order[i]] != keys[order[i - 1]])
                        ++next;
                    colour[order[i]] = next;
                }
                return next + 1;
            }

            // Equitable refinement: split cells by neighbour counts per cell
            // until stable. The old colour leads the key, so cells only split
            // and keep their relative order.
            auto refine(vector<int> & colour, int colours) -> int
            {
                while (true) {
                    vector<VertexSet> cells(colours, 0);
                    for (int v = 0; v < n; ++v)
                        cells[colour[v]] |= bit(v);

                    vector<vector<int>> keys(n, vector<int>(colours + 1));
                    for (int v = 0; v < n; ++v) {
                        keys[v][0] = colour[v];
                        for (int c = 0; c < colours; ++c)
                            keys[v][c + 1] = set_size(graph.neighbours(v) & cells[c]);
                    }

                    int refined = rank_by(colour, keys);
                    if (refined == colours)
                        return colours;
                    colours = refined;
                }
            }

            auto individualise(const vector<int> & colour, int v) -> vector<int>
            {
                vector<int> keys(n), result(n);
                for (int x = 0; x < n; ++x)
                    keys[x] = 2 * colour[x] + ((colour[x] == colour[v] && x != v) ? 1 : 0);
                rank_by(result, keys);
                return result;
            }

            auto leaf(const vector<int> & labels) -> void
            {
                vector<VertexSet> rows(n, 0);
                for (int v = 0; v < n; ++v)
                    for_each_vertex(graph.neighbours(v), [&] (int w) { rows[labels[v]] |= bit(labels[w]); });
                if (best_labels.empty() || rows < best_rows) {
                    best_rows = std::move(rows);
                    best_labels = labels;
                }
            }

            auto twins(int a, int b) const -> bool
            {
                return (graph.neighbours(a) & ~bit(b)) == (graph.neighbours(b) & ~bit(a));
            }

            auto search(vector<int> colour, int colours) -> void
            {
                colours = refine(colour, colours);
                if (colours == n) {
                    leaf(colour);
                    return;
                }

                // first non-singleton cell, by colour index
                vector<int> cell_size(colours, 0);
                for (int v = 0; v < n; ++v)
                    ++cell_size[colour[v]];
                int target = 0;
                while (cell_size[target] == 1)
                    ++target;

                vector<int> explored;
                for (int v = 0; v < n; ++v) {
                    if (colour[v] != target)
                        continue;
                    if (std::any_of(explored.begin(), explored.end(), [&] (int u) { return twins(u, v); }))
                        continue;
                    explored.push_back(v);
                    search(individualise(colour, v), colours + 1);
                }
            }

            auto run() -> vector<int>
            {
                if (n == 0)
                    return {};
                vector<int> colour(n, 0);
                search(colour, 1);
                return best_labels;
            }
        };
    }

    auto canonical_labelling(const Graph & g) -> vector<int>
    {
        return CanonicalSearch(g).run();
    }

    auto canonical_graph(const Graph & g) -> Graph
    {
        return g.permuted(canonical_labelling(g));
    }

    auto canonical_form(const Graph & g) -> string
    {
        return emit_graph6(canonical_graph(g));
    }
}
