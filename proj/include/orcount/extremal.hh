/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/big_count.hh>
#include <orcount/counting.hh>
#include <orcount/pattern.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orcount
{
    /// Largest n searched without an explicit wall-time budget.
    inline constexpr int default_extremal_limit = 7;

    struct SearchOptions
    {
        int workers = 1;
        CountAlgorithm algorithm = CountAlgorithm::backtrack;

        /// Wall-time cap in seconds; zero means none. Required above default_extremal_limit.
        double budget_seconds = 0.0;

        /// Skip G when 2^mindeg(G) * D(n-1, H) < best. D(n-1, H) is taken from
        /// previous_value, or solved first when absent.
        bool degree_prune = false;
        std::optional<BigCount> previous_value;

        /// Recount this many pruned classes (chosen with audit_seed) and
        /// confirm each stays below the bound it was pruned against.
        int audit_samples = 0;
        std::uint64_t audit_seed = 0;

        /// Recount every witness with the brute counter (backtrack above brute range).
        bool recount_witnesses = true;
    };

    struct SearchReport
    {
        int n = 0;
        std::string pattern;
        BigCount d_value;
        std::vector<std::string> witnesses;
        std::uint64_t graphs_examined = 0;
        std::uint64_t graphs_pruned = 0;
        std::uint64_t pruned_by_degree = 0;
        std::uint64_t audited = 0;
        double wall_time = 0.0;
        bool exact = true;

        auto operator== (const SearchReport &) const -> bool = default;
    };

    class BudgetExceeded : public Error
    {
        private:
            SearchReport _partial;

        public:
            explicit BudgetExceeded(SearchReport partial);

            /// Best value and witnesses found before the abort, marked inexact.
            auto partial() const -> const SearchReport &
            {
                return _partial;
            }
    };

    /**
     * D(n, p): the largest number of p-free orientations over all graphs on n
     * vertices. Classes are visited in layers of equal edge count, highest
     * first; a class with m edges is skipped when 2^m < best, with best frozen
     * at the start of its layer so statistics do not depend on scheduling.
     * The search is seeded with the count of the balanced complete bipartite
     * graph. Throws VerificationFailure if the result falls below the Turan
     * lower bound or a witness fails to recount.
     */
    auto solve_extremal(int n, const Pattern & p, const SearchOptions & options = {}) -> SearchReport;

    enum class Verdict
    {
        equals,
        exceeds,
        below
    };

    auto verdict_name(Verdict v) -> const char *;

    struct TheoremRow
    {
        int n = 0;
        BigCount d_value;
        BigCount turan_bound;
        Verdict verdict = Verdict::equals;
        bool turan_witness = false;
        SearchReport report;
    };

    /**
     * Compares D(n, p) with 2^floor(n^2/4) for each n in [first, last],
     * chaining each value into the next search's degree prune. A "below" row
     * is a contradiction and throws VerificationFailure.
     */
    auto verify_theorem(const Pattern & p, int first, int last, const SearchOptions & options = {}) -> std::vector<TheoremRow>;

    /// Canonical graph6 of the balanced complete bipartite graph on n vertices.
    auto turan_witness_form(int n) -> std::string;
}
