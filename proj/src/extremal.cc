/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/canonical.hh>
#include <orcount/enumerate.hh>
#include <orcount/extremal.hh>
#include <orcount/formats.hh>
#include <orcount/parallel.hh>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

using std::chrono::duration;
using std::chrono::steady_clock;

namespace orcount
{
    namespace
    {
        enum class Outcome
        {
            unvisited,
            counted,
            pruned_by_edges,
            pruned_by_degree
        };

        struct OutOfTime
        {
        };

        auto seconds_since(steady_clock::time_point start) -> double
        {
            return duration<double>(steady_clock::now() - start).count();
        }

        auto shifted(BigCount value, unsigned long bits) -> BigCount
        {
            mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), bits);
            return value;
        }

        auto recount(const Graph & g, const Pattern & p) -> BigCount
        {
            CountOptions options;
            if (g.edge_count() <= 24)
                options.algorithm = CountAlgorithm::brute;
            else
                options.split_depth = 3;
            return count_free_orientations(g, p, options);
        }
    }

    BudgetExceeded::BudgetExceeded(SearchReport partial) :
        Error("wall-time budget exceeded for n = " + to_string(partial.n) + " after "
                + to_string(partial.graphs_examined) + " classes; best so far " + to_decimal(partial.d_value)),
        _partial(std::move(partial))
    {
    }

    auto turan_witness_form(int n) -> string
    {
        return canonical_form(turan_graph(n, std::min(n, 2)));
    }

    auto solve_extremal(int n, const Pattern & p, const SearchOptions & options) -> SearchReport
    {
        auto start = steady_clock::now();
        if (n < 1)
            throw DomainError("extremal search needs at least one vertex");
        if (n > default_extremal_limit && options.budget_seconds <= 0.0)
            throw SizeLimitError("n = " + to_string(n) + " is above " + to_string(default_extremal_limit)
                    + " and needs an explicit wall-time budget");
        if (n > enumerate_limit)
            throw SizeLimitError("extremal search supports at most " + to_string(enumerate_limit) + " vertices");

        optional<BigCount> previous = options.previous_value;
        if (options.degree_prune && ! previous && n >= 2) {
            SearchOptions smaller = options;
            smaller.audit_samples = 0;
            smaller.recount_witnesses = false;
            previous = solve_extremal(n - 1, p, smaller).d_value;
        }

        auto classes = enumerate_graphs(n);
        auto turan_form = turan_witness_form(n);

        CountOptions count_options;
        count_options.algorithm = options.algorithm;

        BigCount best = count_free_orientations(turan_graph(n, std::min(n, 2)), p, count_options);
        vector<Outcome> outcome(classes.size(), Outcome::unvisited);
        vector<BigCount> value(classes.size());
        vector<pair<std::size_t, BigCount>> pruned;

        SearchReport report;
        report.n = n;
        report.pattern = p.id();

        auto fill_witnesses = [&] {
            report.d_value = best;
            report.witnesses.clear();
            bool turan_counted = false;
            for (std::size_t i = 0; i < classes.size(); ++i)
                if (outcome[i] == Outcome::counted) {
                    auto form = emit_graph6(classes[i]);
                    turan_counted = turan_counted || form == turan_form;
                    if (value[i] == best)
                        report.witnesses.push_back(std::move(form));
                }
            if (! turan_counted && count_free_orientations(turan_graph(n, std::min(n, 2)), p, count_options) == best)
                report.witnesses.push_back(turan_form);
            std::sort(report.witnesses.begin(), report.witnesses.end());
        };

        try {
            std::size_t layer_start = 0;
            while (layer_start < classes.size()) {
                int edges = classes[layer_start].edge_count();
                std::size_t layer_end = layer_start;
                while (layer_end < classes.size() && classes[layer_end].edge_count() == edges)
                    ++layer_end;

                // best is frozen for the whole layer
                const BigCount layer_best = best;
                if (power_of_two(edges) < layer_best) {
                    for (std::size_t i = layer_start; i < classes.size(); ++i) {
                        outcome[i] = Outcome::pruned_by_edges;
                        pruned.emplace_back(i, layer_best);
                    }
                    break;
                }

                parallel_for(layer_end - layer_start, options.workers, [&] (std::size_t offset) {
                        std::size_t i = layer_start + offset;
                        if (options.budget_seconds > 0.0 && seconds_since(start) > options.budget_seconds)
                            throw OutOfTime{};
                        if (previous && shifted(*previous, classes[i].min_degree()) < layer_best) {
                            outcome[i] = Outcome::pruned_by_degree;
                            return;
                        }
                        value[i] = count_free_orientations(classes[i], p, count_options);
                        outcome[i] = Outcome::counted;
                        });

                for (std::size_t i = layer_start; i < layer_end; ++i) {
                    if (outcome[i] == Outcome::counted)
                        best = std::max(best, value[i]);
                    else
                        pruned.emplace_back(i, layer_best);
                }
                layer_start = layer_end;
            }
        }
        catch (const OutOfTime &) {
            for (auto o : outcome)
                report.graphs_examined += (o == Outcome::counted);
            fill_witnesses();
            report.exact = false;
            report.wall_time = seconds_since(start);
            throw BudgetExceeded(report);
        }

        for (auto o : outcome) {
            report.graphs_examined += (o == Outcome::counted);
            report.graphs_pruned += (o == Outcome::pruned_by_edges || o == Outcome::pruned_by_degree);
            report.pruned_by_degree += (o == Outcome::pruned_by_degree);
        }
        fill_witnesses();

        int chromatic = p.chromatic_number();
        if (chromatic >= 3) {
            long long parts = std::min(chromatic - 1, n);
            auto floor_exponent = turan_number(n, parts);
            if (best < power_of_two(floor_exponent))
                throw VerificationFailure("D(" + to_string(n) + ", " + p.id() + ") = " + to_decimal(best)
                        + " is below the Turan lower bound 2^" + to_string(floor_exponent));
        }

        if (options.recount_witnesses)
            for (auto & w : report.witnesses)
                if (recount(parse_graph6(w), p) != best)
                    throw VerificationFailure("witness " + w + " does not recount to " + to_decimal(best));

        if (options.audit_samples > 0 && ! pruned.empty()) {
            vector<std::size_t> order(pruned.size());
            std::iota(order.begin(), order.end(), 0);
            std::mt19937_64 rng(options.audit_seed);
            std::shuffle(order.begin(), order.end(), rng);
            order.resize(std::min<std::size_t>(order.size(), options.audit_samples));
            for (auto k : order) {
                auto & [index, bound] = pruned[k];
                auto actual = count_free_orientations(classes[index], p, count_options);
                if (actual > bound)
                    throw VerificationFailure("pruned class " + emit_graph6(classes[index]) + " has count "
                            + to_decimal(actual) + " above the bound " + to_decimal(bound) + " it was pruned against");
                ++report.audited;
            }
        }

        report.wall_time = seconds_since(start);
        return report;
    }

    auto verdict_name(Verdict v) -> const char *
    {
        switch (v) {
            case Verdict::equals: return "equals";
            case Verdict::exceeds: return "exceeds";
            case Verdict::below: return "below";
        }
        return "?";
    }

    auto verify_theorem(const Pattern & p, int first, int last, const SearchOptions & options) -> vector<TheoremRow>
    {
        if (first < 1 || last < first)
            throw DomainError("bad n range " + to_string(first) + ".." + to_string(last));
        if (p.chromatic_number() < 3)
            throw DomainError("pattern " + p.id() + " has a bipartite underlying graph; the comparison needs chromatic number at least 3");

        vector<TheoremRow> rows;
        SearchOptions step = options;
        for (int n = first; n <= last; ++n) {
            TheoremRow row;
            row.n = n;
            row.report = solve_extremal(n, p, step);
            row.d_value = row.report.d_value;
            row.turan_bound = power_of_two(turan_number(n, 2));
            int c = cmp(row.d_value, row.turan_bound);
            row.verdict = c == 0 ? Verdict::equals : c > 0 ? Verdict::exceeds : Verdict::below;
            auto form = turan_witness_form(n);
            row.turan_witness = std::find(row.report.witnesses.begin(), row.report.witnesses.end(), form) != row.report.witnesses.end();
            if (row.verdict == Verdict::below)
                throw VerificationFailure("D(" + to_string(n) + ", " + p.id() + ") = " + to_decimal(row.d_value)
                        + " is below 2^floor(n^2/4)");
            if (step.degree_prune)
                step.previous_value = row.d_value;
            rows.push_back(std::move(row));
        }
        return rows;
    }
}
