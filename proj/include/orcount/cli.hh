/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace orcount
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_verification_failure = 1;
    inline constexpr int exit_usage = 2;
    inline constexpr int exit_budget = 3;

    /// Everything a run was asked to do; the result-affecting part is echoed into json output.
    struct RunConfig
    {
        std::string subcommand;
        std::string pattern;
        std::string graph;
        std::string digraph;
        std::string n_range;
        std::string algorithm = "backtrack";
        int workers = 1;
        std::uint64_t seed = 0;
        bool seed_given = false;
        std::string cache_path;
        std::string format = "text";
        double budget = 0.0;
    };

    /// Runs one command line (without the program name); returns the exit code.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    struct SubcommandHelp
    {
        std::string name;
        std::string help;
        std::vector<std::string> flags;
    };

    /// Help text and accepted long flags of every subcommand.
    auto subcommand_help() -> std::vector<SubcommandHelp>;
}
