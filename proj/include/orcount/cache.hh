/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <orcount/extremal.hh>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace orcount
{
    auto report_to_json(const SearchReport & report) -> nlohmann::json;

    /// Throws FormatError (offset 0) when a field is missing or mistyped.
    auto report_from_json(const nlohmann::json & j) -> SearchReport;

    struct CacheIssue
    {
        std::size_t line = 0;
        std::string message;
    };

    /**
     * Append-only JSON-lines store of search reports, one object per line.
     * Lookups return the last exact record for (n, pattern); inexact records
     * are kept for the record but never served, and unreadable lines are
     * skipped and listed in issues().
     */
    class ResultCache
    {
        private:
            std::filesystem::path _path;
            std::vector<CacheIssue> _issues;

        public:
            explicit ResultCache(std::filesystem::path path);

            auto put(const SearchReport & report) -> void;

            auto get(int n, const std::string & pattern) -> std::optional<SearchReport>;

            /// Problems seen by the most recent get().
            auto issues() const -> const std::vector<CacheIssue> &
            {
                return _issues;
            }
    };
}
