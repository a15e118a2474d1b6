#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freeword {

// Base for all library errors. `kind` is a stable machine-readable tag used
// by the CLI when emitting error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error("syntax", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownSymbolError : public Error {
public:
    explicit UnknownSymbolError(const std::string& name)
        : Error("unknown_symbol", "unknown symbol '" + name + "'") {}
};

class ReservedSymbolError : public Error {
public:
    explicit ReservedSymbolError(const std::string& name)
        : Error("reserved_symbol", "symbol name '" + name + "' is reserved") {}
};

class EmptyLanguageError : public Error {
public:
    explicit EmptyLanguageError(const std::string& message)
        : Error("empty_language", message) {}
};

class NoConvergenceError : public Error {
public:
    NoConvergenceError(int iterations, double residual)
        : Error("no_convergence",
                "iteration did not converge after " + std::to_string(iterations) +
                    " steps (residual " + std::to_string(residual) + ")"),
          iterations_(iterations), residual_(residual) {}

    int iterations() const { return iterations_; }
    double residual() const { return residual_; }

private:
    int iterations_;
    double residual_;
};

// The Perron vector came out with a non-positive component; the input matrix
// was not irreducible. Caller bug: the graph constructions guarantee strong
// connectivity.
class NonPositiveEigenvectorError : public Error {
public:
    NonPositiveEigenvectorError()
        : Error("non_positive_eigenvector",
                "Perron eigenvector has a non-positive component; matrix is reducible") {}
};

class MaxLengthExceededError : public Error {
public:
    explicit MaxLengthExceededError(int max_length)
        : Error("max_length_exceeded",
                "walk reached max length " + std::to_string(max_length) +
                    " without satisfying the stop condition") {}
};

class MaxAttemptsExceededError : public Error {
public:
    MaxAttemptsExceededError(int attempts, const std::string& diagnostics)
        : Error("max_attempts_exceeded",
                "gave up after " + std::to_string(attempts) + " attempts; " + diagnostics) {}
};

class WordRejectedError : public Error {
public:
    WordRejectedError(int index, int position, const std::string& detail)
        : Error("word_rejected",
                "word " + std::to_string(index) + " rejected at position " +
                    std::to_string(position) + ": " + detail),
          index_(index), position_(position) {}

    int index() const { return index_; }
    int position() const { return position_; }

private:
    int index_;
    int position_;
};

class UncompletableTailError : public Error {
public:
    UncompletableTailError()
        : Error("uncompletable_tail",
                "trailing segment cannot be completed to an accepted word") {}
};

class ZeroProbabilityEdgeError : public Error {
public:
    explicit ZeroProbabilityEdgeError(int edge)
        : Error("zero_probability_edge",
                "walk uses edge " + std::to_string(edge) + " with probability 0") {}
};

// Bad input that is not a syntax error: schema violations, invalid options,
// inconsistent weights.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("domain", message) {}
};

}  // namespace freeword
