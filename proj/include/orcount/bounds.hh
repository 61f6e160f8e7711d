/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/big_count.hh>

#include <optional>
#include <string>
#include <vector>

namespace orcount
{
    auto binomial(unsigned long n, unsigned long k) -> BigCount;

    /// sum_{i <= t} C(n, i)
    auto binomial_tail(unsigned long n, unsigned long t) -> BigCount;

    inline constexpr unsigned long bounds_parameter_limit = 5000;

    struct InequalityRow
    {
        std::vector<long> parameters;
        double left_log2 = 0.0;
        double right_log2 = 0.0;
        bool holds = false;
    };

    /**
     * Outcome of checking one inequality over a parameter range. Verdicts are
     * exact integer comparisons; the log2 columns and slack are for display.
     */
    struct InequalityReport
    {
        std::string name;
        long first = 0, last = 0;
        std::vector<std::vector<long>> failures;
        std::uint64_t checked = 0;

        /// Smallest right_log2 - left_log2 seen, and where.
        double min_slack_log2 = 0.0;
        std::vector<long> min_slack_at;

        /// check_049: least N with the inequality holding from N through last.
        std::optional<long> threshold;

        /// check_case2 sweeps: smallest over d of (largest passing t) / d.
        std::optional<std::pair<long, long>> critical_ratio;

        std::vector<InequalityRow> rows;

        auto holds() const -> bool
        {
            return failures.empty();
        }
    };

    /// binomial_tail(e, floor(e/10)) <= 2^(e/2) for e in [first, last].
    auto check_tail_half(long first, long last, bool keep_rows = false) -> InequalityReport;

    /// 2 * binomial_tail(N, floor(N/10)) <= 2^(0.49 N) for N in [first, last].
    auto check_049(long first, long last, bool keep_rows = false) -> InequalityReport;

    /// C(d, t) * 4^t * 3^(d - t) <= 4^(0.99 d)
    auto check_case2(long d, long t) -> bool;

    /// check_case2 for every d in [first, last] and t <= d * numerator / denominator.
    auto check_case2_sweep(long first, long last, long numerator = 1, long denominator = 100, bool keep_rows = false) -> InequalityReport;

    /// floor(n/2) - 1 + floor((n-1)^2 / 4) < floor(n^2 / 4)
    auto check_degree_factor(long n) -> bool;

    auto check_degree_factor_range(long first, long last, bool keep_rows = false) -> InequalityReport;
}
