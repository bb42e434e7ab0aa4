#ifndef HARMSUM_ERROR_HPP
#define HARMSUM_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace harmsum {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mathematical domain violations: zero denominators, summand poles,
/// evaluation of an expression where a coefficient is undefined.
class domain_error : public error {
public:
    using error::error;
};

/// Division of exact scalars or polynomials by zero.
class division_by_zero : public domain_error {
public:
    division_by_zero() : domain_error("division by zero") {}
    explicit division_by_zero(const std::string& what) : domain_error(what) {}
};

/// A summand 1/(x+k)^l is undefined inside the summation range.
class pole_error : public domain_error {
public:
    pole_error(const std::string& x_text, std::uint64_t k)
        : domain_error("pole in summation range: x + k = 0 at k = " + std::to_string(k) +
                       " (x = " + x_text + ")"),
          offending_k(k) {}
    std::uint64_t offending_k;
};

/// Polynomial evaluation with an indeterminate left unassigned.
class unbound_variable : public domain_error {
public:
    explicit unbound_variable(const std::string& name)
        : domain_error("unbound indeterminate: " + name), variable(name) {}
    std::string variable;
};

/// Request beyond the registry's configured derivation cap, or outside the
/// hand-coded closed-form range.
class cap_error : public error {
public:
    using error::error;
};

/// A derived formula failed its oracle check; carries the witness point.
class verification_error : public error {
public:
    verification_error(const std::string& what, const std::string& x_text, std::uint64_t n)
        : error(what), witness_x(x_text), witness_n(n) {}
    std::string witness_x;
    std::uint64_t witness_n;
};

/// Registry integrity violation: two verified but non-equal formulas for one key.
class integrity_error : public error {
public:
    using error::error;
};

/// Malformed textual input (rational literals, polynomial strings, journal lines).
class parse_error : public error {
public:
    using error::error;
};

} // namespace harmsum

#endif
