#pragma once

#include <stdexcept>
#include <string>

namespace walkmom {

// A computed value broke an invariant that is mathematically guaranteed to
// hold (for example a reduced denominator escaping its proven divisor bound).
// This always indicates a bug in the arithmetic itself, never bad input;
// callers must abort the run instead of continuing with poisoned data.
class arithmetic_integrity_error : public std::logic_error {
public:
    explicit arithmetic_integrity_error(const std::string& what)
        : std::logic_error(what) {}
};

// A rational cannot be reduced modulo m because its denominator shares a
// factor with m; "x mod m" is undefined for that input.
class non_integral_residue : public std::runtime_error {
public:
    explicit non_integral_residue(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace walkmom
