/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orcount
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    // Input exceeds the hard limit of the requested algorithm.
    class SizeLimitError : public Error
    {
        public:
            using Error::Error;
    };

    // Argument outside the mathematical domain of an operation.
    class DomainError : public Error
    {
        public:
            using Error::Error;
    };

    class FormatError : public Error
    {
        private:
            std::size_t _offset;

        public:
            FormatError(const std::string & message, std::size_t offset) :
                Error(message + " at byte " + std::to_string(offset)),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t
            {
                return _offset;
            }
    };

    // A check the engine is meant to certify came out false.
    class VerificationFailure : public Error
    {
        public:
            using Error::Error;
    };
}
