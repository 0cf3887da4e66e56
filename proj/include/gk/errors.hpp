#ifndef GK_ERRORS_HPP
#define GK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gk {

// Base class for all library errors.  Every subclass corresponds to a distinct
// failure mode named in the operation contracts, so callers (and the CLI) can
// map error classes to exit codes without string matching.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic input exceeds the supported magnitude (or a primality verdict
// cannot be certified deterministically).
class Overflow : public Error {
public:
    explicit Overflow(const std::string& what) : Error(what) {}
};

// gcd precondition violated in order computations.
class NotCoprime : public Error {
public:
    explicit NotCoprime(const std::string& what) : Error(what) {}
};

// Argument outside the documented domain (e.g. a zero range bound).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Graph construction / query errors.
class SelfLoop : public Error {
public:
    explicit SelfLoop(const std::string& what) : Error(what) {}
};
class VertexNotFound : public Error {
public:
    explicit VertexNotFound(const std::string& what) : Error(what) {}
};

// Family builders.
class UnsupportedFamily : public Error {
public:
    explicit UnsupportedFamily(const std::string& what) : Error(what) {}
};
class FullGraphUnknown : public Error {
public:
    explicit FullGraphUnknown(const std::string& what) : Error(what) {}
};

// Catalog lookups.
class NotFound : public Error {
public:
    explicit NotFound(const std::string& what) : Error(what) {}
};

// Extension replay.
class AmbiguousPrime : public Error {
public:
    explicit AmbiguousPrime(const std::string& what) : Error(what) {}
};
class Conflict : public Error {
public:
    explicit Conflict(const std::string& what) : Error(what) {}
};
class NotIntegral : public Error {
public:
    explicit NotIntegral(const std::string& what) : Error(what) {}
};
class Negative : public Error {
public:
    explicit Negative(const std::string& what) : Error(what) {}
};
class NotIsomorphic : public Error {
public:
    explicit NotIsomorphic(const std::string& what) : Error(what) {}
};

// Recogniser.
class MissingFact : public Error {
public:
    explicit MissingFact(const std::string& what) : Error(what) {}
};
class UnsupportedTarget : public Error {
public:
    explicit UnsupportedTarget(const std::string& what) : Error(what) {}
};

// CLI / serialization.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace gk

#endif // GK_ERRORS_HPP
