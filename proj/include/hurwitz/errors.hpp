#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad partition, k out of range, ...).
class invalid_argument : public error {
public:
    using error::error;
};

/// A request exceeds the hard resource bounds of an enumeration path.
class resource_limit : public error {
public:
    using error::error;
};

/// An internal identity that must hold (a theorem) did not. Always a bug.
class verification_failure : public error {
public:
    using error::error;
};

/// An exact linear system had no unique solution.
class singular_system : public error {
public:
    using error::error;
};

class inconsistent_system : public error {
public:
    using error::error;
};

namespace detail {

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw invalid_argument(what);
}

inline void ensure(bool cond, const std::string& what)
{
    if (!cond)
        throw verification_failure(what);
}

} // namespace detail

} // namespace hurwitz
