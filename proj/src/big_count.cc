/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <orcount/big_count.hh>
#include <orcount/errors.hh>

#include <cmath>
#include <limits>

using std::string;
using std::string_view;

namespace orcount
{
    auto power_of_two(unsigned long exponent) -> BigCount
    {
        BigCount result;
        mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
        return result;
    }

    auto to_decimal(const BigCount & value) -> string
    {
        return value.get_str(10);
    }

    auto from_decimal(string_view text) -> BigCount
    {
        if (text.empty())
            throw FormatError("empty decimal string", 0);
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                throw FormatError("expected a decimal digit", i);
        return BigCount{string(text), 10};
    }

    auto at_most_power_of_two(const BigCount & value, unsigned long numerator, unsigned long denominator) -> bool
    {
        if (denominator == 0)
            throw DomainError("zero denominator in exponent");
        if (sgn(value) < 0)
            throw DomainError("negative value");
        if (sgn(value) == 0)
            return true;

        // 2^(bits - 1) <= value < 2^bits
        unsigned long bits = mpz_sizeinbase(value.get_mpz_t(), 2);
        if (denominator * bits <= numerator)
            return true;
        if (denominator * (bits - 1) > numerator)
            return false;

        BigCount power;
        mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), denominator);
        unsigned long power_bits = mpz_sizeinbase(power.get_mpz_t(), 2);
        if (power_bits <= numerator)
            return true;
        return power_bits == numerator + 1 && mpz_scan1(power.get_mpz_t(), 0) == numerator;
    }

    auto approx_log2(const BigCount & value) -> double
    {
        if (sgn(value) == 0)
            return -std::numeric_limits<double>::infinity();
        long exponent = 0;
        double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
        return std::log2(mantissa) + static_cast<double>(exponent);
    }
}
