#pragma once

#include <stdexcept>
#include <string>

namespace qhc {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched lengths or matrix dimensions between operands.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Index or subsystem number outside its admissible range.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

// A domain invariant failed (normalization, Hermiticity, positivity, ...).
// The message names the violated invariant and the magnitude of the violation.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Operation requires a bipartite (or tripartite) map and got something else.
class UnsupportedPartitionError : public Error {
public:
    explicit UnsupportedPartitionError(const std::string& what) : Error(what) {}
};

// Kronecker-structured operation invoked with a non-row-major index map.
class ConventionMismatchError : public Error {
public:
    explicit ConventionMismatchError(const std::string& what) : Error(what) {}
};

// Invalid argument value (empty keep-set, zero sample count, ...).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

// Measurement requested for an observable the sampler cannot handle.
class UnsupportedObservableError : public Error {
public:
    explicit UnsupportedObservableError(const std::string& what) : Error(what) {}
};

// Malformed input file: bad JSON or a schema the loaders do not recognize.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Missing or unreadable file, failed write.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace qhc
