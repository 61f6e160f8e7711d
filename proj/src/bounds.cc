/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/bounds.hh>
#include <orcount/errors.hh>

#include <limits>

using std::string;
using std::to_string;
using std::vector;

namespace orcount
{
    namespace
    {
        auto check_range(long first, long last, long lowest, long highest, const string & what) -> void
        {
            if (first < lowest || last > highest || first > last)
                throw DomainError(what + " range " + to_string(first) + ".." + to_string(last)
                        + " outside " + to_string(lowest) + ".." + to_string(highest));
        }

        struct ReportBuilder
        {
            InequalityReport report;
            bool keep_rows;

            ReportBuilder(string name, long first, long last, bool keep) :
                keep_rows(keep)
            {
                report.name = std::move(name);
                report.first = first;
                report.last = last;
                report.min_slack_log2 = std::numeric_limits<double>::infinity();
            }

            auto add(vector<long> parameters, double left_log2, double right_log2, bool holds) -> void
            {
                ++report.checked;
                double slack = right_log2 - left_log2;
                if (slack < report.min_slack_log2) {
                    report.min_slack_log2 = slack;
                    report.min_slack_at = parameters;
                }
                if (! holds)
                    report.failures.push_back(parameters);
                if (keep_rows)
                    report.rows.push_back(InequalityRow{std::move(parameters), left_log2, right_log2, holds});
            }
        };

        // Running value of C(n, i) stepped through i.
        auto next_binomial_term(BigCount & term, unsigned long n, unsigned long i) -> void
        {
            // C(n, i + 1) = C(n, i) * (n - i) / (i + 1), always exact
            term *= (n - i);
            mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), i + 1);
        }

        auto case2_left(long d, long t) -> BigCount
        {
            BigCount left = binomial(d, t), power;
            mpz_ui_pow_ui(power.get_mpz_t(), 4, t);
            left *= power;
            mpz_ui_pow_ui(power.get_mpz_t(), 3, d - t);
            left *= power;
            return left;
        }
    }

    auto binomial(unsigned long n, unsigned long k) -> BigCount
    {
        if (k > n)
            throw DomainError("binomial(" + to_string(n) + ", " + to_string(k) + ") needs k <= n");
        BigCount result;
        mpz_bin_uiui(result.get_mpz_t(), n, k);
        return result;
    }

    auto binomial_tail(unsigned long n, unsigned long t) -> BigCount
    {
        if (t > n)
            throw DomainError("binomial_tail(" + to_string(n) + ", " + to_string(t) + ") needs t <= n");
        BigCount term = 1, sum = 1;
        for (unsigned long i = 0; i < t; ++i) {
            next_binomial_term(term, n, i);
            sum += term;
        }
        return sum;
    }

    auto check_tail_half(long first, long last, bool keep_rows) -> InequalityReport
    {
        check_range(first, last, 1, bounds_parameter_limit, "tail-half");
        ReportBuilder builder("tail_half", first, last, keep_rows);
        for (long e = first; e <= last; ++e) {
            auto left = binomial_tail(e, e / 10);
            builder.add({e}, approx_log2(left), e / 2.0, at_most_power_of_two(left, e, 2));
        }
        return builder.report;
    }

    auto check_049(long first, long last, bool keep_rows) -> InequalityReport
    {
        check_range(first, last, 1, bounds_parameter_limit, "0.49");
        ReportBuilder builder("case1_049", first, last, keep_rows);
        vector<bool> holds;
        for (long big_n = first; big_n <= last; ++big_n) {
            BigCount left = 2 * binomial_tail(big_n, big_n / 10);
            bool ok = at_most_power_of_two(left, 49 * big_n, 100);
            holds.push_back(ok);
            builder.add({big_n}, approx_log2(left), 0.49 * big_n, ok);
        }
        long threshold = last + 1;
        while (threshold > first && holds[threshold - 1 - first])
            --threshold;
        if (threshold <= last)
            builder.report.threshold = threshold;
        return std::move(builder.report);
    }

    auto check_case2(long d, long t) -> bool
    {
        if (t < 0 || d < t || d > static_cast<long>(bounds_parameter_limit))
            throw DomainError("check_case2 needs 0 <= t <= d <= " + to_string(bounds_parameter_limit));
        return at_most_power_of_two(case2_left(d, t), 198 * d, 100);
    }

    auto check_case2_sweep(long first, long last, long numerator, long denominator, bool keep_rows) -> InequalityReport
    {
        check_range(first, last, 0, bounds_parameter_limit, "case-2");
        if (numerator < 0 || denominator <= 0)
            throw DomainError("case-2 sweep needs a non-negative ratio");
        ReportBuilder builder("case2", first, last, keep_rows);
        std::optional<std::pair<long, long>> critical;

        for (long d = first; d <= last; ++d) {
            long cut = d * numerator / denominator;
            if (cut > d)
                cut = d;
            BigCount left = case2_left(d, 0);
            long t = 0;
            bool still_passing = true;
            long largest_passing = -1;
            // Steps through t past the sweep cut until the first failure, so
            // the largest passing t for this d is known too.
            while (t <= d) {
                bool ok = at_most_power_of_two(left, 198 * d, 100);
                if (t <= cut)
                    builder.add({d, t}, approx_log2(left), 1.98 * d, ok);
                if (ok && still_passing)
                    largest_passing = t;
                else
                    still_passing = false;
                if (! still_passing && t >= cut)
                    break;
                // left(t + 1) = left(t) * 4 (d - t) / (3 (t + 1))
                left *= 4 * (d - t);
                mpz_divexact_ui(left.get_mpz_t(), left.get_mpz_t(), 3 * (t + 1));
                ++t;
            }
            if (d > 0 && (! critical || largest_passing * critical->second < critical->first * d))
                critical = std::pair{largest_passing, d};
        }
        builder.report.critical_ratio = critical;
        return std::move(builder.report);
    }

    auto check_degree_factor(long n) -> bool
    {
        if (n < 2)
            throw DomainError("degree factor check needs n >= 2");
        long long big_n = n;
        return big_n / 2 - 1 + (big_n - 1) * (big_n - 1) / 4 < big_n * big_n / 4;
    }

    auto check_degree_factor_range(long first, long last, bool keep_rows) -> InequalityReport
    {
        check_range(first, last, 2, std::numeric_limits<int>::max(), "degree-factor");
        ReportBuilder builder("degree_factor", first, last, keep_rows);
        for (long n = first; n <= last; ++n) {
            long long big_n = n;
            double left = static_cast<double>(big_n / 2 - 1 + (big_n - 1) * (big_n - 1) / 4);
            double right = static_cast<double>(big_n * big_n / 4);
            builder.add({n}, left, right, check_degree_factor(n));
        }
        return builder.report;
    }
}
