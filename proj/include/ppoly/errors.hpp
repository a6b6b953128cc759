#ifndef PPOLY_ERRORS_HPP
#define PPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppoly {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class domain_error : public error {
public:
    using error::error;
};

/// Malformed textual input (sequence files, rationals, recurrence JSON).
class parse_error : public error {
public:
    using error::error;
};

/// Interval enclosures stayed too wide to decide a comparison.
class precision_exhausted : public error {
public:
    using error::error;
};

/// The H search left the configured range.
class search_exceeded : public error {
public:
    using error::error;
};

/// J(eps) scan still sees violations close to its cap.
class cap_exceeded : public error {
public:
    using error::error;
};

/// Recurrence extension hit p_S(n) = 0.
class leading_zero : public error {
public:
    explicit leading_zero(std::size_t n)
        : error("leading coefficient vanishes at n = " + std::to_string(n)), index(n)
    {
    }
    std::size_t index;
};

/// Recurrence extension produced a non-integral term.
class non_integral : public error {
public:
    explicit non_integral(std::size_t n)
        : error("extension leaves the integers at n = " + std::to_string(n)), index(n)
    {
    }
    std::size_t index;
};

} // namespace ppoly

#endif // PPOLY_ERRORS_HPP
