#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexirev {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula text. Carries the byte offset plus 1-based line/column.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column);

    /// The message without the position prefix.
    const std::string& detail() const noexcept { return detail_; }
    std::size_t offset() const noexcept { return offset_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string detail_;
    std::size_t offset_;
    std::size_t line_;
    std::size_t column_;
};

/// A formula mentions a variable the model does not assign.
class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Two models (or a model and a sequence) are over incompatible alphabets.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// An enumeration or conjunction budget was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A Horn-only procedure received a clause with two or more positive literals.
class NotHorn : public Error {
public:
    using Error::Error;
};

/// The DPLL step budget ran out before a verdict was reached.
class StepBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed DIMACS input.
class DimacsError : public Error {
public:
    DimacsError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace lexirev
