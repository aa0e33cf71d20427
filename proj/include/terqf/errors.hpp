#ifndef TERQF_ERRORS_HPP
#define TERQF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace terqf {

/// Malformed textual input (form strings, flags, data files).
class ParseError : public std::runtime_error
{
    public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-positive form,
/// invalid discriminant, unknown configuration, ...).
class PreconditionError : public std::invalid_argument
{
    public:
    using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not. Always a bug or a wrong
/// declaration (e.g. a form declared idoneal that is not).
class InconsistencyError : public std::logic_error
{
    public:
    using std::logic_error::logic_error;
};

}  // namespace terqf

#endif
