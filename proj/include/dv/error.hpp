#pragma once

#include <stdexcept>
#include <string>

namespace dv {

// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file (bad token, ragged row, ...). Carries a line number
// when one is known.
struct parse_error : error {
    explicit parse_error(const std::string& msg, long line = 0)
        : error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line_number(line) {}
    long line_number;
};

// A caller violated a documented precondition (wrong alphabet, index out of
// range, profile outside the regime a solver handles, ...).
struct domain_error : error {
    using error::error;
};

// An input or internal value violates a structural invariant that should
// hold by construction (duplicate rows, a structural claim of a solver
// failing, a kernel bound exceeded, ...).
struct contract_error : error {
    using error::error;
};

}  // namespace dv
