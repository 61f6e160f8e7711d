/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/bounds.hh>
#include <orcount/cache.hh>
#include <orcount/canonical.hh>
#include <orcount/cli.hh>
#include <orcount/counting.hh>
#include <orcount/extremal.hh>
#include <orcount/formats.hh>
#include <orcount/graph_tokens.hh>
#include <orcount/regularity.hh>
#include <orcount/stability.hh>
#include <orcount/version.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

using nlohmann::json;
using std::function;
using std::ostream;
using std::string;
using std::to_string;
using std::vector;

namespace orcount
{
    namespace
    {
        class UsageError : public Error
        {
            public:
                using Error::Error;
        };

        struct Options
        {
            RunConfig config;

            // count
            int bound_vertex = -1;

            // extremal, verify-theorem
            bool degree_prune = false;
            bool no_degree_prune = false;
            int audit = 0;

            // embed-path, regular-pair
            string w1, w2, random_pair, start = "w1", mode = "exhaustive", normalization = "pairs";
            string subset_fraction = "1/20", threshold = "1/10";
            double density = 0.6;
            int k = 1, trials = 1000;
            bool verify_pair = false;

            // stability-scan
            double delta = 0.05;
            int max_n = default_stability_limit;

            // bounds
            string check, range;
            long bn = -1, bk = -1, d = -1, t = -1;
            bool rows = false;

            // convert
            string input, from, to;
        };

        auto list(VertexSet s) -> json
        {
            json result = json::array();
            for_each_vertex(s, [&] (int v) { result.push_back(v); });
            return result;
        }

        auto list_text(VertexSet s) -> string
        {
            string result;
            for_each_vertex(s, [&] (int v) { result += (result.empty() ? "" : ",") + to_string(v); });
            return "{" + result + "}";
        }

        auto parse_fraction(const string & text) -> Fraction
        {
            auto slash = text.find('/');
            try {
                if (slash == string::npos)
                    return Fraction{std::stoll(text), 1};
                return Fraction{std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
            }
            catch (const std::exception &) {
                throw UsageError("bad fraction '" + text + "'");
            }
        }

        auto require_seed(const RunConfig & config, const string & why) -> void
        {
            if (! config.seed_given)
                throw UsageError("--seed is required " + why);
        }

        // Echo of everything that can change a result; workers and format excluded.
        auto config_echo(const Options & o) -> json
        {
            auto & c = o.config;
            json j{{"subcommand", c.subcommand}};
            if (! c.pattern.empty())
                j["pattern"] = c.pattern;
            if (! c.graph.empty())
                j["graph"] = c.graph;
            if (! c.digraph.empty())
                j["digraph"] = c.digraph;
            if (! c.n_range.empty())
                j["n"] = c.n_range;
            if (c.subcommand == "count" || c.subcommand == "extremal" || c.subcommand == "verify-theorem")
                j["algorithm"] = c.algorithm;
            if (c.seed_given)
                j["seed"] = c.seed;
            if (c.budget > 0.0)
                j["budget"] = c.budget;
            return j;
        }

        struct Output
        {
            const Options & options;
            ostream & out;
            ostream & err;

            auto format() const -> const string &
            {
                return options.config.format;
            }

            auto json_mode() const -> bool
            {
                return format() == "json";
            }

            auto emit(const json & result) -> void
            {
                json j{{"engine_version", engine_version}, {"config", config_echo(options)}, {"result", result}};
                out << j.dump(2) << '\n';
            }
        };

        auto parse_pattern(const RunConfig & config)
        {
            if (config.pattern.empty())
                throw UsageError("--pattern is required");
            return Pattern::parse(config.pattern);
        }

        auto parse_n_range(const RunConfig & config) -> std::pair<int, int>
        {
            if (config.n_range.empty())
                throw UsageError("--n is required");
            auto [lo, hi] = parse_range(config.n_range);
            if (lo < 1 || hi < lo || hi > max_vertices)
                throw UsageError("bad --n range '" + config.n_range + "'");
            return {static_cast<int>(lo), static_cast<int>(hi)};
        }

        auto search_options(const Options & o) -> SearchOptions
        {
            SearchOptions s;
            s.workers = o.config.workers;
            s.algorithm = parse_count_algorithm(o.config.algorithm);
            s.budget_seconds = o.config.budget;
            s.audit_samples = o.audit;
            s.audit_seed = o.config.seed;
            if (o.audit > 0)
                require_seed(o.config, "with --audit");
            return s;
        }

        auto report_text(ostream & out, const SearchReport & r) -> void
        {
            out << "D(" << r.n << ", " << r.pattern << ") = " << to_decimal(r.d_value) << (r.exact ? "" : " (inexact: budget exceeded)") << '\n';
            out << "witnesses:";
            for (auto & w : r.witnesses)
                out << ' ' << w;
            out << '\n';
            out << "classes examined " << r.graphs_examined << ", pruned " << r.graphs_pruned
                << " (" << r.pruned_by_degree << " by degree), audited " << r.audited << '\n';
            out << "wall time " << r.wall_time << " s\n";
        }

        auto join(const vector<string> & items, const string & separator) -> string
        {
            string result;
            for (auto & item : items)
                result += (result.empty() ? "" : separator) + item;
            return result;
        }

        auto run_count(const Options & o, Output & output) -> int
        {
            if (o.config.graph.empty())
                throw UsageError("--graph is required");
            auto g = parse_graph_token(o.config.graph);
            auto p = parse_pattern(o.config);
            CountOptions options;
            options.algorithm = parse_count_algorithm(o.config.algorithm);
            options.workers = o.config.workers;
            auto count = count_free_orientations(g, p, options);

            std::optional<BigCount> bound;
            if (o.bound_vertex >= 0)
                bound = count_upper_bound(g, p, o.bound_vertex, options);

            if (output.json_mode()) {
                json result{{"graph", emit_graph6(g)}, {"vertices", g.size()}, {"edges", g.edge_count()}, {"count", to_decimal(count)}};
                if (bound)
                    result["upper_bound"] = json{{"vertex", o.bound_vertex}, {"value", to_decimal(*bound)}};
                output.emit(result);
            }
            else if (output.format() == "csv") {
                output.out << "graph,pattern,algorithm,edges,count" << (bound ? ",bound_vertex,upper_bound" : "") << '\n';
                output.out << emit_graph6(g) << ',' << p.id() << ',' << o.config.algorithm << ',' << g.edge_count() << ',' << to_decimal(count);
                if (bound)
                    output.out << ',' << o.bound_vertex << ',' << to_decimal(*bound);
                output.out << '\n';
            }
            else {
                output.out << to_decimal(count) << '\n';
                if (bound)
                    output.out << "upper bound via vertex " << o.bound_vertex << ": " << to_decimal(*bound) << '\n';
            }
            return exit_ok;
        }

        auto emit_report(Output & output, const SearchReport & report, bool cached) -> void
        {
            if (output.json_mode()) {
                auto result = report_to_json(report);
                result.erase("engine_version");
                result["cached"] = cached;
                output.emit(result);
            }
            else if (output.format() == "csv") {
                output.out << "n,pattern,d_value,exact,graphs_examined,graphs_pruned,witnesses\n";
                output.out << report.n << ',' << report.pattern << ',' << to_decimal(report.d_value) << ','
                    << (report.exact ? "true" : "false") << ',' << report.graphs_examined << ',' << report.graphs_pruned << ','
                    << join(report.witnesses, " ") << '\n';
            }
            else {
                if (cached)
                    output.out << "(from cache)\n";
                report_text(output.out, report);
            }
        }

        auto run_extremal(const Options & o, Output & output) -> int
        {
            auto [lo, hi] = parse_n_range(o.config);
            if (lo != hi)
                throw UsageError("extremal takes a single --n; use verify-theorem for a range");
            auto p = parse_pattern(o.config);
            auto options = search_options(o);
            options.degree_prune = o.degree_prune;

            std::unique_ptr<ResultCache> cache;
            if (! o.config.cache_path.empty()) {
                cache = std::make_unique<ResultCache>(o.config.cache_path);
                auto hit = cache->get(lo, p.id());
                for (auto & issue : cache->issues())
                    output.err << "warning: cache " << issue.message << '\n';
                if (hit) {
                    emit_report(output, *hit, true);
                    return exit_ok;
                }
            }

            try {
                auto report = solve_extremal(lo, p, options);
                if (cache)
                    cache->put(report);
                emit_report(output, report, false);
                return exit_ok;
            }
            catch (const BudgetExceeded & e) {
                if (cache)
                    cache->put(e.partial());
                emit_report(output, e.partial(), false);
                output.err << "error: " << e.what() << '\n';
                return exit_budget;
            }
        }

        auto run_verify_theorem(const Options & o, Output & output) -> int
        {
            auto [lo, hi] = parse_n_range(o.config);
            auto p = parse_pattern(o.config);
            auto options = search_options(o);
            options.degree_prune = ! o.no_degree_prune;
            auto rows = verify_theorem(p, lo, hi, options);

            if (output.json_mode()) {
                json result = json::array();
                for (auto & row : rows)
                    result.push_back(json{
                            {"n", row.n},
                            {"d_value", to_decimal(row.d_value)},
                            {"turan_bound", to_decimal(row.turan_bound)},
                            {"verdict", verdict_name(row.verdict)},
                            {"turan_witness", row.turan_witness},
                            {"witnesses", row.report.witnesses},
                            {"graphs_examined", row.report.graphs_examined},
                            {"graphs_pruned", row.report.graphs_pruned},
                            {"wall_time", row.report.wall_time}});
                output.emit(result);
            }
            else if (output.format() == "csv") {
                output.out << "n,d_value,turan_bound,verdict,turan_witness,witnesses\n";
                for (auto & row : rows)
                    output.out << row.n << ',' << to_decimal(row.d_value) << ',' << to_decimal(row.turan_bound) << ','
                        << verdict_name(row.verdict) << ',' << (row.turan_witness ? "true" : "false") << ','
                        << join(row.report.witnesses, " ") << '\n';
            }
            else {
                output.out << "pattern " << p.id() << '\n';
                output.out << "n\tD(n,H)\t2^floor(n^2/4)\tverdict\tturan_witness\twitnesses\n";
                for (auto & row : rows)
                    output.out << row.n << '\t' << to_decimal(row.d_value) << '\t' << to_decimal(row.turan_bound) << '\t'
                        << verdict_name(row.verdict) << '\t' << (row.turan_witness ? "yes" : "no") << '\t'
                        << join(row.report.witnesses, " ") << '\n';
            }
            return exit_ok;
        }

        struct PairInput
        {
            Digraph digraph;
            RegularPairSpec spec;
        };

        auto random_pair(int a, int b, double density, std::uint64_t seed) -> Digraph
        {
            Digraph d(a + b);
            std::mt19937_64 rng(seed);
            std::bernoulli_distribution arc(density);
            for (int x = 0; x < a; ++x)
                for (int y = a; y < a + b; ++y) {
                    if (arc(rng))
                        d.add_arc(x, y);
                    if (arc(rng))
                        d.add_arc(y, x);
                }
            return d;
        }

        auto pair_input(const Options & o) -> PairInput
        {
            PairInput input;
            if (! o.random_pair.empty()) {
                require_seed(o.config, "with --random-pair");
                auto comma = o.random_pair.find(',');
                if (comma == string::npos)
                    throw UsageError("--random-pair takes a,b");
                int a = std::stoi(o.random_pair.substr(0, comma)), b = std::stoi(o.random_pair.substr(comma + 1));
                if (a < 1 || b < 1 || a + b > max_vertices)
                    throw UsageError("--random-pair sizes out of range");
                if (o.density < 0.0 || o.density > 1.0)
                    throw UsageError("--density must lie in [0, 1]");
                input.digraph = random_pair(a, b, o.density, o.config.seed);
                input.spec.w1 = first_vertices(a);
                input.spec.w2 = first_vertices(a + b) & ~first_vertices(a);
            }
            else if (! o.config.digraph.empty())
                input.digraph = parse_digraph_token(o.config.digraph);
            else
                throw UsageError("--digraph or --random-pair is required");

            if (! o.w1.empty())
                input.spec.w1 = parse_vertex_set(o.w1);
            if (! o.w2.empty())
                input.spec.w2 = parse_vertex_set(o.w2);
            if (! input.spec.w1 || ! input.spec.w2)
                throw UsageError("--w1 and --w2 are required with --digraph");
            input.spec.k = o.k;
            input.spec.subset_fraction = parse_fraction(o.subset_fraction);
            input.spec.density_threshold = parse_fraction(o.threshold);
            if (o.normalization == "edges")
                input.spec.normalization = DensityNormalization::edges;
            else if (o.normalization != "pairs")
                throw UsageError("--normalization must be pairs or edges");
            input.spec.validate(input.digraph.size());
            return input;
        }

        auto verdict_json(const RegularityVerdict & v) -> json
        {
            static const char * names[] = {"holds", "fails", "undetermined"};
            json j{{"status", names[static_cast<int>(v.status)]}};
            if (v.status == RegularityStatus::fails)
                j["witness"] = json{{"x1", list(v.x1)}, {"x2", list(v.x2)}, {"direction", v.backward ? "x2->x1" : "x1->x2"},
                    {"arcs", v.density.arcs}, {"denominator", v.density.denominator}};
            return j;
        }

        auto verdict_text(const RegularityVerdict & v) -> string
        {
            switch (v.status) {
                case RegularityStatus::holds: return "holds";
                case RegularityStatus::undetermined: return "undetermined";
                case RegularityStatus::fails:
                    return "fails: x1 = " + list_text(v.x1) + ", x2 = " + list_text(v.x2) + ", direction "
                        + (v.backward ? "x2->x1" : "x1->x2") + ", density " + to_string(v.density.arcs) + "/" + to_string(v.density.denominator);
            }
            return "?";
        }

        auto run_embed_path(const Options & o, Output & output) -> int
        {
            auto input = pair_input(o);
            if (o.start != "w1" && o.start != "w2")
                throw UsageError("--start must be w1 or w2");

            std::optional<RegularityVerdict> checked;
            if (o.verify_pair)
                checked = is_k_regular_pair_exhaustive(input.digraph, input.spec);

            try {
                auto path = greedy_path(input.digraph, input.spec, o.start == "w1" ? PathStart::w1 : PathStart::w2);
                if (output.json_mode()) {
                    json result{{"vertices", path.vertices}, {"length", path.length()}, {"digraph", emit_digraph6(input.digraph)}};
                    if (checked)
                        result["pair"] = verdict_json(*checked);
                    output.emit(result);
                }
                else if (output.format() == "csv") {
                    output.out << "step,vertex\n";
                    for (std::size_t i = 0; i < path.vertices.size(); ++i)
                        output.out << i << ',' << path.vertices[i] << '\n';
                }
                else {
                    if (checked)
                        output.out << "pair: " << verdict_text(*checked) << '\n';
                    output.out << "path of length " << path.length() << ":";
                    for (int v : path.vertices)
                        output.out << ' ' << v;
                    output.out << '\n';
                }
                return exit_ok;
            }
            catch (const EmbeddingFailure & e) {
                if (output.json_mode())
                    output.emit(json{{"embedding_failure", e.what()}, {"prefix", e.prefix().vertices}});
                else {
                    output.out << "stuck prefix:";
                    for (int v : e.prefix().vertices)
                        output.out << ' ' << v;
                    output.out << '\n';
                }
                output.err << "error: " << e.what() << '\n';
                return exit_verification_failure;
            }
        }

        auto run_regular_pair(const Options & o, Output & output) -> int
        {
            auto input = pair_input(o);
            RegularityVerdict verdict;
            if (o.mode == "exhaustive")
                verdict = is_k_regular_pair_exhaustive(input.digraph, input.spec);
            else if (o.mode == "sampled") {
                require_seed(o.config, "in sampled mode");
                verdict = is_k_regular_pair_sampled(input.digraph, input.spec, o.trials, o.config.seed);
            }
            else
                throw UsageError("--mode must be exhaustive or sampled");

            if (output.json_mode())
                output.emit(verdict_json(verdict));
            else if (output.format() == "csv") {
                output.out << "status,x1,x2,direction,arcs,denominator\n";
                output.out << verdict_json(verdict)["status"].get<string>() << ',' << list_text(verdict.x1) << ','
                    << list_text(verdict.x2) << ',' << (verdict.backward ? "x2->x1" : "x1->x2") << ','
                    << verdict.density.arcs << ',' << verdict.density.denominator << '\n';
            }
            else
                output.out << verdict_text(verdict) << '\n';
            return exit_ok;
        }

        auto run_maxcut(const Options & o, Output & output) -> int
        {
            if (o.config.graph.empty())
                throw UsageError("--graph is required");
            auto g = parse_graph_token(o.config.graph);
            auto cut = max_cut(g);
            VertexSet other = g.all_vertices() & ~cut.side_mask;
            if (output.json_mode())
                output.emit(json{{"graph", emit_graph6(g)}, {"within_edges", cut.within_edges}, {"side_mask", cut.side_mask},
                        {"v1", list(cut.side_mask)}, {"v2", list(other)}});
            else if (output.format() == "csv")
                output.out << "graph,within_edges,side_mask\n" << emit_graph6(g) << ',' << cut.within_edges << ',' << cut.side_mask << '\n';
            else
                output.out << "within-part edges " << cut.within_edges << ", V1 = " << list_text(cut.side_mask)
                    << ", V2 = " << list_text(other) << '\n';
            return exit_ok;
        }

        auto run_stability_scan(const Options & o, Output & output) -> int
        {
            auto [lo, hi] = parse_n_range(o.config);
            if (lo != hi)
                throw UsageError("stability-scan takes a single --n");
            auto p = parse_pattern(o.config);
            auto rows = stability_scan(lo, p, o.delta, o.config.workers, o.max_n);

            if (output.json_mode()) {
                json result = json::array();
                for (auto & r : rows)
                    result.push_back(json{{"graph", r.graph}, {"count", to_decimal(r.count)}, {"edges", r.edges},
                            {"within_edges", r.within_edges}, {"allowance", r.allowance}, {"within_allowance", r.within_allowance}});
                output.emit(result);
            }
            else {
                bool csv = output.format() == "csv";
                output.out << (csv ? "graph,count,edges,within_edges,allowance,within_allowance\n"
                        : "graph\tcount\tedges\twithin\tdelta*n^2\twithin<=delta*n^2\n");
                char sep = csv ? ',' : '\t';
                for (auto & r : rows)
                    output.out << r.graph << sep << to_decimal(r.count) << sep << r.edges << sep << r.within_edges << sep
                        << r.allowance << sep << (r.within_allowance ? "yes" : "no") << '\n';
            }
            return exit_ok;
        }

        auto inequality_json(const InequalityReport & r) -> json
        {
            json j{{"name", r.name}, {"first", r.first}, {"last", r.last}, {"checked", r.checked}, {"holds", r.holds()},
                {"failures", r.failures}, {"min_slack_log2", r.min_slack_log2}, {"min_slack_at", r.min_slack_at}};
            if (r.threshold)
                j["threshold"] = *r.threshold;
            if (r.critical_ratio)
                j["critical_ratio"] = json{{"t", r.critical_ratio->first}, {"d", r.critical_ratio->second}};
            return j;
        }

        auto run_bounds(const Options & o, Output & output) -> int
        {
            const string & check = o.check;
            if (check == "binomial" || check == "tail") {
                if (o.bn < 0 || o.bk < 0)
                    throw UsageError("--n-value and --k are required for " + check);
                auto value = check == "binomial" ? binomial(o.bn, o.bk) : binomial_tail(o.bn, o.bk);
                if (output.json_mode())
                    output.emit(json{{"check", check}, {"n", o.bn}, {"k", o.bk}, {"value", to_decimal(value)}});
                else
                    output.out << to_decimal(value) << '\n';
                return exit_ok;
            }

            if (check == "case2" && o.d >= 0 && o.t >= 0) {
                bool holds = check_case2(o.d, o.t);
                if (output.json_mode())
                    output.emit(json{{"check", check}, {"d", o.d}, {"t", o.t}, {"holds", holds}});
                else
                    output.out << (holds ? "holds" : "fails") << '\n';
                return holds ? exit_ok : exit_verification_failure;
            }

            bool keep_rows = o.rows || output.format() == "csv";
            auto range = [&] (long lo, long hi) {
                return o.range.empty() ? std::pair{lo, hi} : parse_range(o.range);
            };

            InequalityReport report;
            bool asserted = true;
            if (check == "tail-half") {
                auto [lo, hi] = range(1, 2000);
                report = check_tail_half(lo, hi, keep_rows);
            }
            else if (check == "case1") {
                auto [lo, hi] = range(1, 5000);
                report = check_049(lo, hi, keep_rows);
                asserted = false;
            }
            else if (check == "case2") {
                auto [lo, hi] = range(100, 2000);
                report = check_case2_sweep(lo, hi, 1, 100, keep_rows);
            }
            else if (check == "degree-factor") {
                auto [lo, hi] = range(2, 1000000);
                report = check_degree_factor_range(lo, hi, keep_rows);
            }
            else
                throw UsageError("--check must be one of tail-half, case1, case2, degree-factor, binomial, tail");

            if (output.json_mode())
                output.emit(inequality_json(report));
            else if (output.format() == "csv") {
                output.out << "parameter,left_log2,right_log2,verdict\n";
                for (auto & row : report.rows) {
                    vector<string> parts;
                    for (long p : row.parameters)
                        parts.push_back(to_string(p));
                    output.out << join(parts, ":") << ',' << row.left_log2 << ',' << row.right_log2 << ','
                        << (row.holds ? "holds" : "fails") << '\n';
                }
            }
            else {
                output.out << report.name << " over " << report.first << ".." << report.last << ": " << report.checked
                    << " checked, " << report.failures.size() << " failures\n";
                output.out << "least slack " << report.min_slack_log2 << " bits at";
                for (long p : report.min_slack_at)
                    output.out << ' ' << p;
                output.out << '\n';
                if (report.threshold)
                    output.out << "holds for every N from " << *report.threshold << " to " << report.last << '\n';
                if (report.critical_ratio)
                    output.out << "largest t/d passing for every d: " << report.critical_ratio->first << "/" << report.critical_ratio->second << '\n';
                if (o.rows) {
                    output.out << "parameter\tleft_log2\tright_log2\tverdict\n";
                    for (auto & row : report.rows) {
                        for (std::size_t i = 0; i < row.parameters.size(); ++i)
                            output.out << (i ? ":" : "") << row.parameters[i];
                        output.out << '\t' << row.left_log2 << '\t' << row.right_log2 << '\t' << (row.holds ? "holds" : "fails") << '\n';
                    }
                }
            }
            return (asserted && ! report.holds()) ? exit_verification_failure : exit_ok;
        }

        struct AnyGraph
        {
            bool directed = false;
            Graph graph;
            Digraph digraph;
        };

        auto read_as(const string & format, const string & line) -> AnyGraph
        {
            AnyGraph g;
            if (format == "graph6")
                g.graph = parse_graph6(line);
            else if (format == "digraph6") {
                g.directed = true;
                g.digraph = parse_digraph6(line);
            }
            else if (format == "edge-list") {
                if (line.find('>') != string::npos) {
                    g.directed = true;
                    g.digraph = parse_arc_list(line);
                }
                else
                    g.graph = parse_edge_list(line);
            }
            else
                throw UsageError("unknown format '" + format + "'");
            return g;
        }

        auto write_as(const string & format, const AnyGraph & g) -> string
        {
            if (format == "graph6") {
                if (! g.directed)
                    return emit_graph6(g.graph);
                auto & d = g.digraph;
                if (! (d.reversed() == d))
                    throw DomainError("digraph has unpaired arcs and cannot be written as graph6");
                return emit_graph6(d.underlying_graph());
            }
            if (format == "digraph6") {
                if (g.directed)
                    return emit_digraph6(g.digraph);
                Digraph d(g.graph.size());
                for (auto & [u, v] : g.graph.edges()) {
                    d.add_arc(u, v);
                    d.add_arc(v, u);
                }
                return emit_digraph6(d);
            }
            if (format == "edge-list")
                return g.directed ? emit_arc_list(g.digraph) : emit_edge_list(g.graph);
            throw UsageError("unknown format '" + format + "'");
        }

        auto run_convert(const Options & o, Output & output) -> int
        {
            for (auto * f : {&o.from, &o.to})
                if (*f != "graph6" && *f != "digraph6" && *f != "edge-list")
                    throw UsageError("formats are graph6, digraph6 and edge-list");
            if (o.input.empty())
                throw UsageError("--input is required");

            std::ifstream file;
            std::istream * in = &std::cin;
            if (o.input != "-") {
                file.open(o.input);
                if (! file)
                    throw UsageError("cannot open input file " + o.input);
                in = &file;
            }

            string line;
            std::size_t number = 0, converted = 0, warnings = 0;
            json lines = json::array();
            while (std::getline(*in, line)) {
                ++number;
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (line.empty())
                    continue;
                try {
                    auto text = write_as(o.to, read_as(o.from, line));
                    if (output.json_mode())
                        lines.push_back(text);
                    else
                        output.out << text << '\n';
                    ++converted;
                }
                catch (const Error & e) {
                    ++warnings;
                    output.err << "line " << number << ": " << e.what() << '\n';
                }
            }
            if (output.json_mode())
                output.emit(json{{"lines", lines}, {"converted", converted}, {"warnings", warnings}});
            output.err << "converted " << converted << " lines, " << warnings << " warnings\n";
            return exit_ok;
        }

        struct Subcommand
        {
            string name;
            string description;
            string examples;
            function<int (const Options &, Output &)> handler;
        };

        auto subcommands() -> vector<Subcommand>
        {
            return {
                {"count", "Count orientations of a graph that contain no copy of a pattern",
                    "  orcount count --graph K4 --pattern c3 --algo brute\n  orcount count --graph turan:6,2 --pattern c5 --bound-vertex 0", run_count},
                {"extremal", "Compute D(n, H), the maximum count over all graphs on n vertices",
                    "  orcount extremal --n 5 --pattern c3\n  orcount extremal --n 6 --pattern tt3 --audit 100 --seed 1 --format json", run_extremal},
                {"verify-theorem", "Compare D(n, H) with 2^floor(n^2/4) over a range of n",
                    "  orcount verify-theorem --pattern tt3 --n 2..6\n  orcount verify-theorem --pattern c3 --n 3..7 --workers 4", run_verify_theorem},
                {"embed-path", "Greedily embed a directed path of length 2k alternating across a pair",
                    "  orcount embed-path --random-pair 20,20 --density 0.6 --seed 7 --k 3\n  orcount embed-path --digraph '4: 0>2 2>1 1>3 3>0' --w1 0,1 --w2 2,3 --k 1", run_embed_path},
                {"regular-pair", "Test whether a pair of vertex sets is k-regular",
                    "  orcount regular-pair --random-pair 8,8 --density 1 --seed 1 --k 2\n  orcount regular-pair --random-pair 20,20 --seed 3 --mode sampled --trials 500", run_regular_pair},
                {"maxcut", "Exact minimum number of edges inside the parts of a bipartition",
                    "  orcount maxcut --graph K5", run_maxcut},
                {"stability-scan", "Distance to bipartite for every graph with at least 2^floor(n^2/4) free orientations",
                    "  orcount stability-scan --n 4 --pattern c3 --delta 0.2", run_stability_scan},
                {"bounds", "Exact checks of the binomial estimates",
                    "  orcount bounds --check tail-half --range 1..2000\n  orcount bounds --check case1\n  orcount bounds --check case2 --d 1000 --t 10\n  orcount bounds --check binomial --n-value 10 --k 3", run_bounds},
                {"convert", "Convert between graph6, digraph6 and edge lists, one graph per line",
                    "  orcount convert --input graphs.txt --from edge-list --to graph6", run_convert},
            };
        }

        auto build_app(Options & o, const vector<Subcommand> & commands) -> std::unique_ptr<CLI::App>
        {
            auto app = std::make_unique<CLI::App>("Exact counting of forbidden-pattern-free orientations", "orcount");
            app->require_subcommand(1);
            app->set_version_flag("--version", engine_version);

            for (auto & c : commands) {
                auto * sub = app->add_subcommand(c.name, c.description);
                sub->footer("Examples:\n" + c.examples);
                sub->add_option("--format", o.config.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
                const string & name = c.name;

                auto add_graph = [&] { sub->add_option("--graph", o.config.graph, "Graph: K4, K23, C5, P4, turan:n,r, an edge list or graph6"); };
                auto add_pattern = [&] { sub->add_option("--pattern", o.config.pattern, "Forbidden pattern: c3, c5, ..., tt3, or digraph6"); };
                auto add_workers = [&] { sub->add_option("--workers", o.config.workers, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str(); };
                auto add_seed = [&] { sub->add_option("--seed", o.config.seed, "Random seed"); };
                auto add_algo = [&] {
                    sub->add_option("--algo", o.config.algorithm, "Counting algorithm")->check(CLI::IsMember({"brute", "backtrack"}))->capture_default_str();
                };
                auto add_search = [&] {
                    sub->add_option("--n", o.config.n_range, "Vertex count, or a..b for a range");
                    add_pattern();
                    add_workers();
                    add_algo();
                    add_seed();
                    sub->add_option("--budget", o.config.budget, "Wall-time budget in seconds (required above n = 7)");
                    sub->add_option("--audit", o.audit, "Recount this many pruned classes (needs --seed)");
                };
                auto add_pair = [&] {
                    sub->add_option("--digraph", o.config.digraph, "Digraph as digraph6 or an arc list like '3: 0>1 1>2'");
                    sub->add_option("--random-pair", o.random_pair, "Random pair a,b: sides 0..a-1 and a..a+b-1 (needs --seed)");
                    sub->add_option("--density", o.density, "Arc probability for --random-pair")->capture_default_str();
                    add_seed();
                    sub->add_option("--w1", o.w1, "First side, e.g. 0-4,7");
                    sub->add_option("--w2", o.w2, "Second side");
                    sub->add_option("--k", o.k, "Half the path length")->capture_default_str();
                    sub->add_option("--subset-fraction", o.subset_fraction, "Smallest subset as a fraction of its side")->capture_default_str();
                    sub->add_option("--threshold", o.threshold, "Least directed density required")->capture_default_str();
                    sub->add_option("--normalization", o.normalization, "Density denominator: pairs or edges")->capture_default_str();
                };

                if (name == "count") {
                    add_graph();
                    add_pattern();
                    add_algo();
                    add_workers();
                    sub->add_option("--bound-vertex", o.bound_vertex, "Also print 2^d(v) times the count without v");
                }
                else if (name == "extremal") {
                    add_search();
                    sub->add_option("--cache", o.config.cache_path, "Append-only result cache (JSON lines)");
                    sub->add_flag("--degree-prune", o.degree_prune, "Skip classes whose minimum degree rules them out");
                }
                else if (name == "verify-theorem") {
                    add_search();
                    sub->add_flag("--no-degree-prune", o.no_degree_prune, "Disable the minimum-degree prune");
                }
                else if (name == "embed-path") {
                    add_pair();
                    sub->add_option("--start", o.start, "Side holding the first vertex: w1 or w2")->capture_default_str();
                    sub->add_flag("--verify-pair", o.verify_pair, "Run the exhaustive regularity check first");
                }
                else if (name == "regular-pair") {
                    add_pair();
                    sub->add_option("--mode", o.mode, "exhaustive or sampled")->capture_default_str();
                    sub->add_option("--trials", o.trials, "Samples in sampled mode")->capture_default_str();
                }
                else if (name == "maxcut")
                    add_graph();
                else if (name == "stability-scan") {
                    sub->add_option("--n", o.config.n_range, "Vertex count");
                    add_pattern();
                    add_workers();
                    sub->add_option("--delta", o.delta, "Allowance delta; rows compare within-part edges with delta * n^2")->capture_default_str();
                    sub->add_option("--max-n", o.max_n, "Raise the vertex limit")->capture_default_str();
                }
                else if (name == "bounds") {
                    sub->add_option("--check", o.check, "tail-half, case1, case2, degree-factor, binomial or tail")->required();
                    sub->add_option("--range", o.range, "Parameter range a..b");
                    sub->add_option("--n-value", o.bn, "n for binomial and tail");
                    sub->add_option("--k", o.bk, "k (or t) for binomial and tail");
                    sub->add_option("--d", o.d, "Common-neighbour count for a single case2 check");
                    sub->add_option("--t", o.t, "Cut parameter for a single case2 check");
                    sub->add_flag("--rows", o.rows, "Print every row");
                }
                else if (name == "convert") {
                    sub->add_option("--input", o.input, "Input file, or - for standard input");
                    sub->add_option("--from", o.from, "graph6, digraph6 or edge-list");
                    sub->add_option("--to", o.to, "graph6, digraph6 or edge-list");
                }
            }
            return app;
        }

        auto error_json(const string & kind, const string & message, int code) -> string
        {
            return json{{"error", json{{"type", kind}, {"message", message}, {"exit_code", code}}}}.dump();
        }
    }

    auto subcommand_help() -> vector<SubcommandHelp>
    {
        Options o;
        auto commands = subcommands();
        auto app = build_app(o, commands);
        vector<SubcommandHelp> result;
        for (auto * sub : app->get_subcommands({})) {
            SubcommandHelp h;
            h.name = sub->get_name();
            h.help = sub->help();
            for (auto * opt : sub->get_options())
                for (auto & name : opt->get_lnames())
                    h.flags.push_back("--" + name);
            result.push_back(std::move(h));
        }
        return result;
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        Options o;
        auto commands = subcommands();
        auto app = build_app(o, commands);

        bool json_requested = false;
        for (std::size_t i = 0; i + 1 < args.size(); ++i)
            if (args[i] == "--format" && args[i + 1] == "json")
                json_requested = true;

        auto fail = [&] (const string & kind, const string & message, int code) {
            if (json_requested)
                out << error_json(kind, message, code) << '\n';
            err << "error: " << message << '\n';
            return code;
        };

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app->parse(reversed);
        }
        catch (const CLI::CallForHelp & e) {
            return app->exit(e, out, err);
        }
        catch (const CLI::CallForVersion & e) {
            return app->exit(e, out, err);
        }
        catch (const CLI::ParseError & e) {
            return fail("usage", e.what(), exit_usage);
        }

        const Subcommand * chosen = nullptr;
        for (auto & c : commands)
            if (app->got_subcommand(c.name))
                chosen = &c;
        o.config.subcommand = chosen->name;
        auto * seed = app->get_subcommand(chosen->name)->get_option_no_throw("--seed");
        o.config.seed_given = seed && seed->count() > 0;

        Output output{o, out, err};
        try {
            return chosen->handler(o, output);
        }
        catch (const BudgetExceeded & e) {
            return fail("budget", e.what(), exit_budget);
        }
        catch (const VerificationFailure & e) {
            return fail("verification", e.what(), exit_verification_failure);
        }
        catch (const UsageError & e) {
            return fail("usage", e.what(), exit_usage);
        }
        catch (const Error & e) {
            return fail("input", e.what(), exit_usage);
        }
        catch (const std::exception & e) {
            return fail("input", e.what(), exit_usage);
        }
    }
}
