/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

namespace orcount
{
    inline constexpr const char * engine_version = "orcount 1.0.0";
}
