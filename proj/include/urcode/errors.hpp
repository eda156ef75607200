#pragma once

#include <stdexcept>
#include <string>

namespace urcode {

// Base for all failures that correspond to domain conditions (as opposed to
// programming errors, which use the standard logic_error family).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModelMismatch : DomainError {
    ModelMismatch() : DomainError("operands belong to different models") {}
};

struct NotMember : DomainError {
    explicit NotMember(const std::string& what) : DomainError(what) {}
};

struct Underflow : DomainError {
    Underflow() : DomainError("subtraction underflow: subtrahend exceeds minuend") {}
};

struct DivisionByZero : DomainError {
    DivisionByZero() : DomainError("division by zero") {}
};

struct NotIntegerValued : DomainError {
    NotIntegerValued() : DomainError("polynomial has a non-integral forward difference") {}
};

struct PreconditionViolated : DomainError {
    explicit PreconditionViolated(const std::string& what) : DomainError(what) {}
};

struct NotAPair : DomainError {
    NotAPair() : DomainError("value is not in the range of the pairing function") {}
};

struct NotASequence : DomainError {
    NotASequence() : DomainError("value does not satisfy the sequence predicate") {}
};

struct IndexOutOfRange : DomainError {
    IndexOutOfRange() : DomainError("projection index exceeds sequence length") {}
};

struct EmptyString : DomainError {
    EmptyString() : DomainError("operation requires a non-empty string") {}
};

struct InvalidUrString : DomainError {
    explicit InvalidUrString(const std::string& what) : DomainError(what) {}
};

struct Malformed : DomainError {
    explicit Malformed(const std::string& what) : DomainError(what) {}
};

struct UnsupportedModel : DomainError {
    explicit UnsupportedModel(const std::string& what) : DomainError(what) {}
};

struct OutOfBounds : DomainError {
    OutOfBounds() : DomainError("cut position exceeds the normal form") {}
};

struct DegreeTooLow : DomainError {
    DegreeTooLow() : DomainError("substitution target must have degree at least 1") {}
};

struct DomainViolation : DomainError {
    explicit DomainViolation(const std::string& what) : DomainError(what) {}
};

struct BaseMismatch : DomainError {
    BaseMismatch() : DomainError("partitions do not share a base word") {}
};

struct NotApplicable : DomainError {
    explicit NotApplicable(const std::string& what) : DomainError(what) {}
};

// Parse failure with position information (0-based offset into the input).
struct ParseError : DomainError {
    std::size_t position;
    std::string expected;

    ParseError(std::size_t pos, std::string what_expected)
        : DomainError("parse error at position " + std::to_string(pos) +
                      ": expected " + what_expected),
          position(pos),
          expected(std::move(what_expected)) {}
};

}  // namespace urcode
