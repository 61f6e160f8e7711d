/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/graph.hh>

#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace orcount
{
    enum class PatternShape
    {
        directed_cycle,
        transitive_tournament,
        generic
    };

    class Embedder;

    /**
     * A forbidden oriented graph H. The shape tag selects a fast containment
     * path and always agrees with the digraph: from_digraph() recognises
     * directed cycles and transitive tournaments whatever their labelling.
     */
    class Pattern
    {
        private:
            Digraph _digraph;
            PatternShape _shape = PatternShape::generic;
            int _parameter = 0;
            std::string _id;
            std::shared_ptr<const Embedder> _embedder;

            Pattern(Digraph d, PatternShape shape, int parameter, std::string id);

        public:
            static auto directed_cycle(int length) -> Pattern;
            static auto transitive_tournament(int k) -> Pattern;
            static auto from_digraph(const Digraph & d) -> Pattern;

            /// Accepts c3, c5, ... (any length >= 3), tt2, tt3, ..., or a digraph6 string.
            static auto parse(std::string_view token) -> Pattern;

            auto digraph() const -> const Digraph &
            {
                return _digraph;
            }

            auto shape() const -> PatternShape
            {
                return _shape;
            }

            /// Cycle length or tournament order; zero for generic patterns.
            auto parameter() const -> int
            {
                return _parameter;
            }

            auto id() const -> const std::string &
            {
                return _id;
            }

            auto size() const -> int
            {
                return _digraph.size();
            }

            auto embedder() const -> const Embedder &
            {
                return *_embedder;
            }

            auto reversed() const -> Pattern;

            auto is_odd_cycle() const -> bool
            {
                return _shape == PatternShape::directed_cycle && _parameter % 2 == 1;
            }

            /// Chromatic number of the underlying undirected graph.
            auto chromatic_number() const -> int;
    };

    /**
     * Injective, non-induced embedding search of a small digraph into a host
     * given by out- and in-neighbour masks. Also used with symmetric digraphs
     * to find undirected copies.
     */
    class Embedder
    {
        private:
            Digraph _pattern;
            std::vector<std::pair<int, int>> _arcs;
            std::vector<std::vector<int>> _pinned_orders;
            std::vector<int> _free_order;

            auto extend(std::span<const VertexSet> out, std::span<const VertexSet> in, int host_size,
                    const std::vector<int> & order, std::size_t depth, std::vector<int> & image, VertexSet used) const -> bool;

        public:
            explicit Embedder(const Digraph & pattern);

            auto contains(std::span<const VertexSet> out, std::span<const VertexSet> in, int host_size) const -> bool;

            /// A copy whose image uses the host arc from -> to.
            auto contains_through(std::span<const VertexSet> out, std::span<const VertexSet> in, int host_size, int from, int to) const -> bool;
    };

    /// True iff some injective map sends every arc of p to an arc of d.
    auto contains_pattern(const Digraph & d, const Pattern & p) -> bool;

    /// True iff some copy of p in d uses the arc from -> to (which must be present).
    auto contains_pattern_through(const Digraph & d, const Pattern & p, int from, int to) -> bool;

    namespace detail
    {
        // Mask-level fast paths shared with the counters.
        auto has_cycle_through(std::span<const VertexSet> out, std::span<const VertexSet> in, int length, int from, int to) -> bool;
        auto has_cycle(std::span<const VertexSet> out, std::span<const VertexSet> in, int n, int length) -> bool;
        auto has_tt3_through(std::span<const VertexSet> out, std::span<const VertexSet> in, int from, int to) -> bool;
        auto has_tt3(std::span<const VertexSet> out, int n) -> bool;

        auto contains_through(std::span<const VertexSet> out, std::span<const VertexSet> in, int n, const Pattern & p, int from, int to) -> bool;
        auto contains(std::span<const VertexSet> out, std::span<const VertexSet> in, int n, const Pattern & p) -> bool;
    }
}
