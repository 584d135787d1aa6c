#pragma once

#include <stdexcept>
#include <string>

namespace gclh {

// Base for all domain errors so callers can catch the library as a whole.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// d_out * d_in != 0 when forming homology of a would-be complex.
struct CompositionNonzero : Error {
    explicit CompositionNonzero(const std::string& msg) : Error(msg) {}
};

// A map does not send cycles into cycles (or boundaries into boundaries),
// so it induces nothing on homology.
struct NotChainCompatible : Error {
    explicit NotChainCompatible(const std::string& msg) : Error(msg) {}
};

// A localization or colon-ideal scan exceeded its shift bound without the
// required pair of agreeing steps.
struct StabilizationFailure : Error {
    explicit StabilizationFailure(const std::string& msg) : Error(msg) {}
};

// grade(I, M) requested with IM = M.
struct GradeUndefined : Error {
    explicit GradeUndefined(const std::string& msg) : Error(msg) {}
};

// A direct or inverse system did not stabilize within the configured number
// of stages. Partial stage data stays with the thrower's LimitSystem.
struct UnstabilizedLimit : Error {
    explicit UnstabilizedLimit(const std::string& msg) : Error(msg) {}
};

// Malformed user input (instance files, CLI arguments, report streams).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

struct ParseError : InputError {
    int line = 0;
    int column = 0;
    ParseError(int line_, int col_, const std::string& msg)
        : InputError("line " + std::to_string(line_) + ", column " +
                     std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

}  // namespace gclh
