#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cupcap {

// Every failure mode raised by the library. Codes are stable so callers
// (and tests) can dispatch without string matching.
enum class ErrorCode {
    DuplicatePoint,
    VerticalPair,
    CollinearTriple,
    CollinearThroughS,
    TooShort,
    NotXSorted,
    NotMonotone,
    TooSmall,
    TooLarge,
    PreconditionViolated,
    NoSharedPoint,
    NotFound,
    BoundNotMet,
    NotFree,
    ContractViolation,
    ResolutionFailure,
    InternalFailure,
    DegenerateSetup,
    Exhausted,
    ParseError,
    UnknownOverlay,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Input validation failure; indices refer to the caller's point sequence.
class ValidationError : public Error {
public:
    ValidationError(ErrorCode code, const std::string& what, std::size_t i, std::size_t j,
                    std::size_t k = static_cast<std::size_t>(-1))
        : Error(code, what), i_(i), j_(j), k_(k) {}

    std::size_t index_a() const { return i_; }
    std::size_t index_b() const { return j_; }
    std::size_t index_c() const { return k_; }

private:
    std::size_t i_, j_, k_;
};

class ChainError : public Error {
public:
    ChainError(ErrorCode code, const std::string& what, std::size_t triple_index = 0)
        : Error(code, what), triple_index_(triple_index) {}

    // Index of the first point of the offending consecutive triple.
    std::size_t triple_index() const { return triple_index_; }

private:
    std::size_t triple_index_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(ErrorCode::ParseError, what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace cupcap
