#ifndef HH_ERROR_HPP
#define HH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hh {

// Root of every error the library throws.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset)
    {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// log of a non-positive number, division by ~0, and the like.
class DomainError : public Error
{
public:
    using Error::Error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

// An operation's convexity hypothesis is not met by the supplied profile.
class HypothesisError : public Error
{
public:
    using Error::Error;
};

class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

class SearchError : public Error
{
public:
    using Error::Error;
};

} // namespace hh

#endif
