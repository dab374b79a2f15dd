#pragma once

#include <stdexcept>
#include <string>

namespace lpt {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations: bad ids, overlapping sets, malformed inputs.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// An exact routine was asked to exceed its configured limit.
struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string& what) : Error(what) {}
};

// Path enumeration produced more results than the configured cap.
struct EnumerationOverflow : SizeLimitError {
    explicit EnumerationOverflow(const std::string& what) : SizeLimitError(what) {}
};

// A pipeline was run on a graph outside its class; carries a printable witness.
struct ClassMembershipError : Error {
    std::string witness;
    ClassMembershipError(const std::string& what, std::string witness_)
        : Error(what), witness(std::move(witness_)) {}
};

// A guaranteed object could not be found: either a bug or a broken premise.
struct InternalContradictionError : Error {
    explicit InternalContradictionError(const std::string& what) : Error(what) {}
};

// A refinement hypothesis failed re-verification; names hypothesis + witness.
struct HypothesisError : InvalidArgument {
    std::string hypothesis;
    HypothesisError(std::string hypothesis_, const std::string& detail)
        : InvalidArgument("hypothesis '" + hypothesis_ + "' violated: " + detail),
          hypothesis(std::move(hypothesis_)) {}
};

// Malformed input file; line is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace lpt
