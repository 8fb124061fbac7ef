#ifndef TRICYCLIC_ERROR_HPP
#define TRICYCLIC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tricyclic {

// Every library failure derives from Error. The CLI maps DomainError and its
// subclasses to exit code 1; ContractViolation signals a caller bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : DomainError(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class ConnectivityError : public DomainError {
public:
    ConnectivityError(int u, int v)
        : DomainError("graph is disconnected: vertices " + std::to_string(u) + " and " +
                      std::to_string(v) + " are mutually unreachable"),
          u_(u), v_(v) {}

    int u() const { return u_; }
    int v() const { return v_; }

private:
    int u_;
    int v_;
};

class UnsupportedSizeError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParameterError : public DomainError {
public:
    using DomainError::DomainError;
};

class PartitionError : public DomainError {
public:
    using DomainError::DomainError;
};

class ClassificationError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class ResourceGuardError : public Error {
public:
    using Error::Error;
};

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tricyclic

#endif // TRICYCLIC_ERROR_HPP
