/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orcount
{
    /// Exact non-negative counts. Never saturates.
    using BigCount = mpz_class;

    auto power_of_two(unsigned long exponent) -> BigCount;

    auto to_decimal(const BigCount & value) -> std::string;

    /// Parses a non-negative decimal string; throws FormatError on anything else.
    auto from_decimal(std::string_view text) -> BigCount;

    /// Decides value <= 2^(numerator / denominator) exactly, by comparing
    /// value^denominator against 2^numerator. Bit lengths settle most cases
    /// without forming the power.
    auto at_most_power_of_two(const BigCount & value, unsigned long numerator, unsigned long denominator) -> bool;

    /// Base-2 logarithm for display only. Returns -infinity for zero.
    auto approx_log2(const BigCount & value) -> double;
}
