#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace povs {

// Error classes are grouped by how the command line reports them:
// input errors (parse, sort, mode), precondition violations, and internal
// invariant breaches.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t position, const std::string& message)
        : InputError("parse error at " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class SortError : public InputError {
public:
    using InputError::InputError;
};

class ModeError : public InputError {
public:
    using InputError::InputError;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class QuantifiedInputError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class CaptureError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class UnboundVariableError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotGroundError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotConjunctionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class FreeVariableError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ArityError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotFunctionalError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

class InfiniteResidualError : public InvariantError {
public:
    using InvariantError::InvariantError;
};

} // namespace povs
