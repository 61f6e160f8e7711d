/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/errors.hh>
#include <orcount/regularity.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace orcount;

namespace
{
    auto bidirected_pair(int a, int b) -> Digraph
    {
        Digraph d(a + b);
        for (int x = 0; x < a; ++x)
            for (int y = a; y < a + b; ++y) {
                d.add_arc(x, y);
                d.add_arc(y, x);
            }
        return d;
    }

    auto random_pair(int a, int b, double p, std::mt19937_64 & rng) -> Digraph
    {
        Digraph d(a + b);
        std::bernoulli_distribution arc(p);
        for (int x = 0; x < a; ++x)
            for (int y = a; y < a + b; ++y) {
                if (arc(rng))
                    d.add_arc(x, y);
                if (arc(rng))
                    d.add_arc(y, x);
            }
        return d;
    }

    auto spec_for(int a, int b, int k) -> RegularPairSpec
    {
        RegularPairSpec spec;
        spec.w1 = first_vertices(a);
        spec.w2 = first_vertices(a + b) & ~first_vertices(a);
        spec.k = k;
        return spec;
    }

    auto subsets_of(VertexSet w, int min_size) -> std::vector<VertexSet>
    {
        std::vector<int> members;
        for_each_vertex(w, [&] (int v) { members.push_back(v); });
        std::vector<VertexSet> result;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << members.size()); ++m) {
            VertexSet s = 0;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (m >> i & 1)
                    s |= bit(members[i]);
            if (set_size(s) >= min_size)
                result.push_back(s);
        }
        return result;
    }

    // Direct arc counting over every subset pair, with rational comparison in integers.
    auto regular_by_hand(const Digraph & d, const RegularPairSpec & spec) -> bool
    {
        auto dense = [&] (VertexSet from, VertexSet to) {
            long long arcs = 0;
            for_each_vertex(from, [&] (int u) {
                for_each_vertex(to, [&] (int v) { arcs += d.has_arc(u, v); });
            });
            long long pairs = set_size(from) * set_size(to);
            return arcs * spec.density_threshold.denominator >= spec.density_threshold.numerator * pairs;
        };
        for (auto x1 : subsets_of(spec.w1, spec.min_subset(spec.w1)))
            for (auto x2 : subsets_of(spec.w2, spec.min_subset(spec.w2)))
                if (! dense(x1, x2) || ! dense(x2, x1))
                    return false;
        return true;
    }
}

TEST_CASE("directed density")
{
    auto d = bidirected_pair(2, 3);
    CHECK(directed_density(d, 0b11, 0b11100).value() == 1.0);
    CHECK(directed_density(d, 0b11100, 0b11).value() == 1.0);

    Digraph empty(4);
    CHECK(directed_density(empty, 0b11, 0b1100).arcs == 0);

    Digraph one(3);
    one.add_arc(0, 1);
    auto forward = directed_density(one, 0b1, 0b110);
    CHECK(forward.arcs == 1);
    CHECK(forward.denominator == 2);
    CHECK(directed_density(one, 0b110, 0b1).arcs == 0);

    CHECK(directed_density(one, 0b1, 0b110, DensityNormalization::edges).denominator == 1);
    CHECK(directed_density(empty, 0b1, 0b10, DensityNormalization::edges).at_least({1, 10}));

    CHECK_THROWS_AS(directed_density(one, 0, 0b10), DomainError);
    CHECK_THROWS_AS(directed_density(one, 0b11, 0b10), DomainError);
}

TEST_CASE("density never rises when arcs are removed")
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        auto d = random_pair(5, 5, 0.6, rng);
        VertexSet x1 = 0b10111, x2 = 0b1101100000;
        auto before = directed_density(d, x1, x2);
        auto arcs = d.arcs();
        if (arcs.empty())
            continue;
        auto [u, v] = arcs[i % arcs.size()];
        Digraph fewer(d.size());
        for (auto [a, b] : arcs)
            if (a != u || b != v)
                fewer.add_arc(a, b);
        auto after = directed_density(fewer, x1, x2);
        CHECK(after.arcs * before.denominator <= before.arcs * after.denominator);
    }
}

TEST_CASE("exhaustive verdicts")
{
    for (int k = 1; k <= 3; ++k)
        CHECK(is_k_regular_pair_exhaustive(bidirected_pair(2 * k, 2 * k + 1), spec_for(2 * k, 2 * k + 1, k)).status == RegularityStatus::holds);

    Digraph one_way(8);
    for (int x = 0; x < 4; ++x)
        for (int y = 4; y < 8; ++y)
            one_way.add_arc(x, y);
    auto v = is_k_regular_pair_exhaustive(one_way, spec_for(4, 4, 1));
    CHECK(v.status == RegularityStatus::fails);
    CHECK(v.backward);
    CHECK(v.density.arcs == 0);

    CHECK_THROWS_AS(is_k_regular_pair_exhaustive(bidirected_pair(13, 12), spec_for(13, 12, 1)), SizeLimitError);
    CHECK_THROWS_AS(is_k_regular_pair_exhaustive(bidirected_pair(1, 4), spec_for(1, 4, 1)), DomainError);
}

TEST_CASE("exhaustive verdicts agree with direct counting and witnesses recount")
{
    std::mt19937_64 rng(17);
    int holds = 0;
    for (int i = 0; i < 300; ++i) {
        int a = 2 + i % 5, b = 2 + (i / 5) % 5;
        double p = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
        auto d = random_pair(a, b, p, rng);
        auto spec = spec_for(a, b, 1);
        if (i % 3 == 0)
            spec.subset_fraction = {1, 2};
        auto verdict = is_k_regular_pair_exhaustive(d, spec);
        CHECK((verdict.status == RegularityStatus::holds) == regular_by_hand(d, spec));
        if (verdict.status == RegularityStatus::holds)
            ++holds;
        else {
            REQUIRE(verdict.status == RegularityStatus::fails);
            CHECK(set_size(verdict.x1) >= spec.min_subset(spec.w1));
            CHECK(set_size(verdict.x2) >= spec.min_subset(spec.w2));
            auto density = verdict.backward ? directed_density(d, verdict.x2, verdict.x1) : directed_density(d, verdict.x1, verdict.x2);
            CHECK(density == verdict.density);
            CHECK(! density.at_least(spec.density_threshold));
        }
    }
    CHECK(holds > 0);
}

TEST_CASE("random orientation of K_{10,10}")
{
    std::mt19937_64 rng(10);
    Digraph d(20);
    std::bernoulli_distribution coin(0.5);
    for (int x = 0; x < 10; ++x)
        for (int y = 10; y < 20; ++y)
            coin(rng) ? d.add_arc(x, y) : d.add_arc(y, x);
    auto spec = spec_for(10, 10, 1);
    auto verdict = is_k_regular_pair_exhaustive(d, spec);
    REQUIRE(verdict.status == RegularityStatus::fails);
    auto density = verdict.backward ? directed_density(d, verdict.x2, verdict.x1) : directed_density(d, verdict.x1, verdict.x2);
    CHECK(! density.at_least(spec.density_threshold));
}

TEST_CASE("sampled mode is one-sided")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        auto d = random_pair(6, 6, i % 2 ? 1.0 : 0.7, rng);
        auto spec = spec_for(6, 6, 1);
        auto sampled = is_k_regular_pair_sampled(d, spec, 200, i);
        CHECK(sampled.status != RegularityStatus::holds);
        if (sampled.status == RegularityStatus::fails)
            CHECK(is_k_regular_pair_exhaustive(d, spec).status == RegularityStatus::fails);
        CHECK(is_k_regular_pair_sampled(d, spec, 200, i).x1 == sampled.x1);
    }
}

TEST_CASE("greedy path on complete pairs")
{
    for (int k = 1; k <= 4; ++k) {
        auto d = bidirected_pair(2 * k, 2 * k);
        auto spec = spec_for(2 * k, 2 * k, k);
        auto path = greedy_path(d, spec);
        CHECK(path.length() == 2 * k);
        CHECK(oracle::valid_path(d, spec.w1, spec.w2, k, path.vertices));
        auto other = greedy_path(d, spec, PathStart::w2);
        CHECK(oracle::valid_path(d, spec.w1, spec.w2, k, other.vertices, true));
    }
}

TEST_CASE("greedy path with k = 1 on a sparse pair")
{
    Digraph d(4);
    d.add_arc(0, 2);
    d.add_arc(2, 1);
    d.add_arc(1, 3);
    d.add_arc(3, 0);
    RegularPairSpec spec;
    spec.w1 = 0b0011;
    spec.w2 = 0b1100;
    auto path = greedy_path(d, spec);
    CHECK(oracle::valid_path(d, spec.w1, spec.w2, 1, path.vertices));
}

TEST_CASE("greedy path failure carries the prefix")
{
    Digraph d(4);
    d.add_arc(0, 2);
    RegularPairSpec spec;
    spec.w1 = 0b0011;
    spec.w2 = 0b1100;
    try {
        greedy_path(d, spec);
        FAIL("expected an embedding failure");
    }
    catch (const EmbeddingFailure & e) {
        CHECK(e.prefix().vertices.size() <= 2);
    }
}

TEST_CASE("every returned path validates")
{
    std::mt19937_64 rng(31);
    int found = 0;
    for (int i = 0; i < 200; ++i) {
        int k = 1 + i % 3;
        auto d = random_pair(2 * k + 4, 2 * k + 3, 0.6, rng);
        auto spec = spec_for(2 * k + 4, 2 * k + 3, k);
        try {
            auto path = greedy_path(d, spec);
            CHECK(oracle::valid_path(d, spec.w1, spec.w2, k, path.vertices));
            ++found;
        }
        catch (const EmbeddingFailure &) {
        }
    }
    CHECK(found > 0);
}
