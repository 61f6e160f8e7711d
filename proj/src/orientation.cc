/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/orientation.hh>

#include <string>

using std::to_string;
using std::vector;

namespace orcount
{
    Orientation::Orientation(const Graph & base, vector<bool> dirs) :
        _base(&base),
        _dirs(std::move(dirs))
    {
        if (static_cast<int>(_dirs.size()) != base.edge_count())
            throw DomainError("direction vector has " + to_string(_dirs.size()) + " bits but the graph has "
                    + to_string(base.edge_count()) + " edges");
    }

    auto orient(const Graph & base, vector<bool> dirs) -> Orientation
    {
        return Orientation(base, std::move(dirs));
    }

    auto orient(const Graph & base, std::uint64_t dirs) -> Orientation
    {
        int m = base.edge_count();
        if (m > 64)
            throw SizeLimitError("a 64-bit direction mask covers at most 64 edges");
        if (m < 64 && (dirs >> m))
            throw DomainError("direction mask has bits beyond the edge count");
        vector<bool> bits(m);
        for (int i = 0; i < m; ++i)
            bits[i] = (dirs >> i) & 1;
        return Orientation(base, std::move(bits));
    }

    auto to_digraph(const Orientation & o) -> Digraph
    {
        auto & edges = o.base().edges();
        Digraph d(o.base().size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (o.directions()[i])
                d.add_arc(edges[i].v, edges[i].u);
            else
                d.add_arc(edges[i].u, edges[i].v);
        }
        return d;
    }

    auto directions_of(const Graph & base, const Digraph & d) -> vector<bool>
    {
        if (d.size() != base.size() || d.arc_count() != base.edge_count())
            throw DomainError("digraph is not an orientation of the base graph");
        vector<bool> dirs;
        for (auto & [u, v] : base.edges()) {
            bool forward = d.has_arc(u, v), backward = d.has_arc(v, u);
            if (forward == backward)
                throw DomainError("edge " + to_string(u) + "-" + to_string(v) + " is not oriented exactly once");
            dirs.push_back(backward);
        }
        return dirs;
    }
}
