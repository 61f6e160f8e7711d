/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/regularity.hh>

#include <algorithm>
#include <random>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace orcount
{
    namespace
    {
        auto members(VertexSet s) -> vector<int>
        {
            vector<int> result;
            for_each_vertex(s, [&] (int v) { result.push_back(v); });
            return result;
        }

        auto expand(const vector<int> & universe, std::uint64_t mask) -> VertexSet
        {
            VertexSet result = 0;
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (mask & (std::uint64_t{1} << i))
                    result |= bit(universe[i]);
            return result;
        }

        auto failing(VertexSet x1, VertexSet x2, bool backward, Density density) -> RegularityVerdict
        {
            return RegularityVerdict{RegularityStatus::fails, x1, x2, backward, density};
        }
    }

    auto directed_density(const Digraph & d, VertexSet from, VertexSet to, DensityNormalization normalization) -> Density
    {
        if (! from || ! to)
            throw DomainError("directed density needs two non-empty vertex sets");
        if (from & to)
            throw DomainError("directed density needs disjoint vertex sets");
        if ((from | to) & ~first_vertices(d.size()))
            throw DomainError("vertex set outside the digraph");

        Density result;
        long long adjacent = 0;
        for_each_vertex(from, [&] (int a) {
                result.arcs += set_size(d.out_neighbours(a) & to);
                for_each_vertex(to, [&] (int b) { adjacent += (d.has_arc(a, b) || d.has_arc(b, a)); });
                });
        result.denominator = normalization == DensityNormalization::pairs
            ? static_cast<long long>(set_size(from)) * set_size(to) : adjacent;
        return result;
    }

    auto RegularPairSpec::validate(int vertex_count) const -> void
    {
        if (k < 1)
            throw DomainError("k must be at least 1");
        if (w1 & w2)
            throw DomainError("the two sides of a pair must be disjoint");
        if ((w1 | w2) & ~first_vertices(vertex_count))
            throw DomainError("pair sides mention vertices outside the digraph");
        if (set_size(w1) < 2 * k || set_size(w2) < 2 * k)
            throw DomainError("each side needs at least 2k = " + to_string(2 * k) + " vertices");
        if (subset_fraction.numerator < 0 || subset_fraction.denominator <= 0
                || density_threshold.numerator < 0 || density_threshold.denominator <= 0)
            throw DomainError("fractions must be non-negative with positive denominators");
    }

    auto RegularPairSpec::min_subset(VertexSet w) const -> int
    {
        long long size = set_size(w);
        long long m = (size * subset_fraction.numerator + subset_fraction.denominator - 1) / subset_fraction.denominator;
        return static_cast<int>(std::clamp<long long>(m, 1, std::max<long long>(size, 1)));
    }

    auto is_k_regular_pair_exhaustive(const Digraph & d, const RegularPairSpec & spec) -> RegularityVerdict
    {
        spec.validate(d.size());
        if (set_size(spec.w1) + set_size(spec.w2) > exhaustive_regularity_limit)
            throw SizeLimitError("exhaustive regularity check supports |w1| + |w2| <= " + to_string(exhaustive_regularity_limit));

        auto side1 = members(spec.w1), side2 = members(spec.w2);
        int min1 = spec.min_subset(spec.w1), min2 = spec.min_subset(spec.w2);
        auto & threshold = spec.density_threshold;
        bool by_edges = spec.normalization == DensityNormalization::edges;

        std::size_t subsets2 = std::size_t{1} << side2.size();
        // running sums over x2, built from the sum without the lowest member
        vector<std::uint16_t> forward(subsets2, 0), backward(subsets2, 0), adjacent(subsets2, 0);
        vector<int> to_b(side2.size()), from_b(side2.size()), touching_b(side2.size());
        vector<VertexSet> in2, out2;
        for (int b : side2) {
            in2.push_back(d.in_neighbours(b));
            out2.push_back(d.out_neighbours(b));
        }

        for (std::uint64_t mask1 = 1; mask1 < (std::uint64_t{1} << side1.size()); ++mask1) {
            int size1 = std::popcount(mask1);
            if (size1 < min1)
                continue;
            VertexSet x1 = expand(side1, mask1);
            for (std::size_t j = 0; j < side2.size(); ++j) {
                to_b[j] = set_size(in2[j] & x1);
                from_b[j] = set_size(out2[j] & x1);
                touching_b[j] = set_size((in2[j] | out2[j]) & x1);
            }

            for (std::size_t mask2 = 1; mask2 < subsets2; ++mask2) {
                std::size_t low = std::countr_zero(mask2), rest = mask2 & (mask2 - 1);
                forward[mask2] = forward[rest] + to_b[low];
                backward[mask2] = backward[rest] + from_b[low];
                adjacent[mask2] = adjacent[rest] + touching_b[low];

                int size2 = std::popcount(mask2);
                if (size2 < min2)
                    continue;
                long long denominator = by_edges ? adjacent[mask2] : static_cast<long long>(size1) * size2;
                Density there{forward[mask2], denominator}, back{backward[mask2], denominator};
                if (! there.at_least(threshold))
                    return failing(x1, expand(side2, mask2), false, there);
                if (! back.at_least(threshold))
                    return failing(x1, expand(side2, mask2), true, back);
            }
        }
        RegularityVerdict verdict;
        verdict.status = RegularityStatus::holds;
        return verdict;
    }

    auto is_k_regular_pair_sampled(const Digraph & d, const RegularPairSpec & spec, int trials, std::uint64_t seed) -> RegularityVerdict
    {
        spec.validate(d.size());
        if (trials < 0)
            throw DomainError("trial count must be non-negative");

        std::mt19937_64 rng(seed);
        auto side1 = members(spec.w1), side2 = members(spec.w2);
        int min1 = spec.min_subset(spec.w1), min2 = spec.min_subset(spec.w2);

        auto draw = [&] (vector<int> & side, int minimum) -> VertexSet {
            std::uniform_int_distribution<int> size_dist(minimum, static_cast<int>(side.size()));
            int size = size_dist(rng);
            std::shuffle(side.begin(), side.end(), rng);
            VertexSet result = 0;
            for (int i = 0; i < size; ++i)
                result |= bit(side[i]);
            return result;
        };

        for (int trial = 0; trial < trials; ++trial) {
            VertexSet x1 = draw(side1, min1), x2 = draw(side2, min2);
            auto there = directed_density(d, x1, x2, spec.normalization);
            if (! there.at_least(spec.density_threshold))
                return failing(x1, x2, false, there);
            auto back = directed_density(d, x2, x1, spec.normalization);
            if (! back.at_least(spec.density_threshold))
                return failing(x1, x2, true, back);
        }
        return RegularityVerdict{};
    }

    auto greedy_path(const Digraph & d, const RegularPairSpec & spec, PathStart start) -> DirectedPath
    {
        spec.validate(d.size());

        VertexSet sides[2] = {spec.w1, spec.w2};
        if (start == PathStart::w2)
            std::swap(sides[0], sides[1]);
        int needed[2] = {spec.min_subset(sides[0]), spec.min_subset(sides[1])};
        VertexSet used[2] = {0, 0};

        DirectedPath path;
        VertexSet candidates = sides[0];
        int vertices = 2 * spec.k + 1;
        for (int step = 0; step < vertices; ++step) {
            int here = step % 2, there = 1 - here;
            int chosen = -1;
            if (step + 1 == vertices)
                chosen = candidates ? std::countr_zero(candidates) : -1;
            else {
                int best_fresh = -1;
                for_each_vertex(candidates, [&] (int v) {
                        int fresh = set_size(d.out_neighbours(v) & sides[there] & ~used[there]);
                        if (fresh > best_fresh) {
                            best_fresh = fresh;
                            chosen = v;
                        }
                        });
                if (best_fresh < needed[there])
                    chosen = -1;
            }

            if (chosen == -1)
                throw EmbeddingFailure("greedy embedding stuck after " + to_string(path.vertices.size())
                        + " vertices of " + to_string(vertices), path);

            path.vertices.push_back(chosen);
            used[here] |= bit(chosen);
            candidates = d.out_neighbours(chosen) & sides[there] & ~used[there];
        }
        return path;
    }
}
