#pragma once

#include <stdexcept>
#include <string>

namespace fspace {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input record; message carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DuplicateIdError : public Error {
public:
    explicit DuplicateIdError(const std::string& id)
        : Error("duplicate document id \"" + id + "\""), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

// Statistics requested from an empty co-occurrence table (N = 0).
class UndefinedStatisticsError : public Error {
public:
    UndefinedStatisticsError()
        : Error("co-occurrence statistics undefined: no labeled term occurrences (N = 0)") {}
};

// The co-relevancy matrix carries no signal (every cell zero).
class EmptySignalError : public Error {
public:
    EmptySignalError()
        : Error("co-relevancy matrix has no nonzero cells; cannot build a factor space") {}
};

// A document or query whose embedding collapses to (near) zero.
class UnembeddableError : public Error {
public:
    explicit UnembeddableError(const std::string& what) : Error(what) {}
};

class UnknownTermError : public Error {
public:
    explicit UnknownTermError(const std::string& term)
        : Error("term \"" + term + "\" is not in the vocabulary") {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

// Stored bytes do not match their recorded fingerprint.
class IntegrityError : public Error {
public:
    explicit IntegrityError(const std::string& what) : Error(what) {}
};

class VersionError : public Error {
public:
    VersionError(int found, int expected)
        : Error("bundle format version " + std::to_string(found) +
                " not readable by this build (expects version " +
                std::to_string(expected) + ")") {}
};

// A loaded structure violates one of its documented invariants.
class InvariantViolationError : public Error {
public:
    explicit InvariantViolationError(const std::string& what) : Error(what) {}
};

}  // namespace fspace
