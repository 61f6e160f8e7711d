/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/cache.hh>
#include <orcount/version.hh>

#include <fstream>

using nlohmann::json;
using std::optional;
using std::string;
using std::to_string;

namespace orcount
{
    auto report_to_json(const SearchReport & report) -> json
    {
        return json{
            {"n", report.n},
            {"pattern", report.pattern},
            {"d_value", to_decimal(report.d_value)},
            {"witnesses", report.witnesses},
            {"exact", report.exact},
            {"engine_version", engine_version},
            {"graphs_examined", report.graphs_examined},
            {"graphs_pruned", report.graphs_pruned},
            {"pruned_by_degree", report.pruned_by_degree},
            {"audited", report.audited},
            {"wall_time", report.wall_time}
        };
    }

    auto report_from_json(const json & j) -> SearchReport
    {
        try {
            SearchReport report;
            report.n = j.at("n").get<int>();
            report.pattern = j.at("pattern").get<string>();
            report.d_value = from_decimal(j.at("d_value").get<string>());
            report.witnesses = j.at("witnesses").get<std::vector<string>>();
            report.exact = j.at("exact").get<bool>();
            report.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
            report.graphs_pruned = j.at("graphs_pruned").get<std::uint64_t>();
            report.pruned_by_degree = j.value("pruned_by_degree", std::uint64_t{0});
            report.audited = j.value("audited", std::uint64_t{0});
            report.wall_time = j.at("wall_time").get<double>();
            return report;
        }
        catch (const json::exception & e) {
            throw FormatError(string("bad report record: ") + e.what(), 0);
        }
    }

    ResultCache::ResultCache(std::filesystem::path path) :
        _path(std::move(path))
    {
    }

    auto ResultCache::put(const SearchReport & report) -> void
    {
        std::ofstream out(_path, std::ios::app);
        if (! out)
            throw Error("cannot open cache file " + _path.string() + " for appending");
        out << report_to_json(report).dump() << '\n';
        if (! out)
            throw Error("write to cache file " + _path.string() + " failed");
    }

    auto ResultCache::get(int n, const string & pattern) -> optional<SearchReport>
    {
        _issues.clear();
        std::ifstream in(_path);
        if (! in)
            return std::nullopt;

        optional<SearchReport> found;
        string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (line.empty())
                continue;
            try {
                auto report = report_from_json(json::parse(line));
                if (report.n == n && report.pattern == pattern && report.exact)
                    found = std::move(report);
            }
            catch (const std::exception & e) {
                _issues.push_back(CacheIssue{number, "line " + to_string(number) + ": " + e.what()});
            }
        }
        return found;
    }
}
