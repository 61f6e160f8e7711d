/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/graph.hh>

#include <cstdint>
#include <vector>

namespace orcount
{
    /**
     * One direction bit per edge of the base graph, indexed in canonical edge
     * order: 0 sends edge (u, v), u < v, from u to v and 1 reverses it. The
     * base graph is referenced, not copied, and must outlive the orientation.
     */
    class Orientation
    {
        private:
            const Graph * _base;
            std::vector<bool> _dirs;

        public:
            Orientation(const Graph & base, std::vector<bool> dirs);

            auto base() const -> const Graph &
            {
                return *_base;
            }

            auto directions() const -> const std::vector<bool> &
            {
                return _dirs;
            }
    };

    auto orient(const Graph & base, std::vector<bool> dirs) -> Orientation;

    /// Low |E| bits of the mask give the directions; needs |E| <= 64.
    auto orient(const Graph & base, std::uint64_t dirs) -> Orientation;

    auto to_digraph(const Orientation & o) -> Digraph;

    /// Reads directions back off a digraph that orients base exactly.
    auto directions_of(const Graph & base, const Digraph & d) -> std::vector<bool>;
}
