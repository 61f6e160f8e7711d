/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/graph.hh>

#include <cstdint>
#include <vector>

namespace orcount
{
    struct Fraction
    {
        long long numerator = 0;
        long long denominator = 1;
    };

    enum class DensityNormalization
    {
        /// arcs from x1 to x2 over |x1| |x2|
        pairs,
        /// arcs from x1 to x2 over adjacent (x1, x2) pairs, arcs in either direction
        edges
    };

    /// arcs / denominator. A zero denominator (edges mode, no edges) meets every threshold.
    struct Density
    {
        long long arcs = 0;
        long long denominator = 0;

        auto at_least(const Fraction & threshold) const -> bool
        {
            return arcs * threshold.denominator >= threshold.numerator * denominator;
        }

        auto value() const -> double
        {
            return denominator == 0 ? 0.0 : static_cast<double>(arcs) / static_cast<double>(denominator);
        }

        auto operator== (const Density &) const -> bool = default;
    };

    auto directed_density(const Digraph & d, VertexSet from, VertexSet to,
            DensityNormalization normalization = DensityNormalization::pairs) -> Density;

    struct RegularPairSpec
    {
        VertexSet w1 = 0, w2 = 0;
        int k = 1;
        Fraction subset_fraction{1, 20};
        Fraction density_threshold{1, 10};
        DensityNormalization normalization = DensityNormalization::pairs;

        /// Throws DomainError unless w1, w2 are disjoint and each has at least 2k vertices.
        auto validate(int vertex_count) const -> void;

        /// ceil(|w| * subset_fraction), but at least one.
        auto min_subset(VertexSet w) const -> int;
    };

    enum class RegularityStatus
    {
        holds,
        fails,
        undetermined
    };

    struct RegularityVerdict
    {
        RegularityStatus status = RegularityStatus::undetermined;

        // Filled when status is fails: the witnessing subsets and which
        // direction fell short (backward means x2 -> x1).
        VertexSet x1 = 0, x2 = 0;
        bool backward = false;
        Density density;
    };

    inline constexpr int exhaustive_regularity_limit = 24;

    /**
     * Scans every subset pair with |x_i| >= min_subset(w_i). On failure the
     * witness is the first in order of (x1 mask, x2 mask, forward before
     * backward).
     */
    auto is_k_regular_pair_exhaustive(const Digraph & d, const RegularPairSpec & spec) -> RegularityVerdict;

    /// Random subset pairs only; returns fails or undetermined, never holds.
    auto is_k_regular_pair_sampled(const Digraph & d, const RegularPairSpec & spec, int trials, std::uint64_t seed) -> RegularityVerdict;

    struct DirectedPath
    {
        std::vector<int> vertices;

        auto length() const -> int
        {
            return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
        }
    };

    class EmbeddingFailure : public Error
    {
        private:
            DirectedPath _prefix;

        public:
            EmbeddingFailure(const std::string & message, DirectedPath prefix) :
                Error(message),
                _prefix(std::move(prefix))
            {
            }

            auto prefix() const -> const DirectedPath &
            {
                return _prefix;
            }
    };

    enum class PathStart
    {
        w1,
        w2
    };

    /**
     * Builds a directed path with 2k arcs alternating between the two sides.
     * The candidates for the next vertex are the current vertex's out-
     * neighbours on the other side that the path has not used; the one with
     * the most unused out-neighbours back across is taken, and it must have
     * at least min_subset of them. The last vertex only has to be a candidate.
     * Throws EmbeddingFailure with the prefix built so far when stuck.
     */
    auto greedy_path(const Digraph & d, const RegularPairSpec & spec, PathStart start = PathStart::w1) -> DirectedPath;
}
