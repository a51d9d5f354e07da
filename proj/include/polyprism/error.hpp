#pragma once

#include <stdexcept>
#include <string>

namespace polyprism {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& msg) : Error("invalid parameter: " + msg) {}
};

/// Eigensolver did not converge; carries the last measured residual.
class NumericFailure : public Error {
public:
    NumericFailure(const std::string& msg, double residual)
        : Error("numeric failure: " + msg), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class StructureError : public Error {
public:
    explicit StructureError(const std::string& msg) : Error("structure error: " + msg) {}
};

class UnreachableVertex : public Error {
public:
    explicit UnreachableVertex(const std::string& msg) : Error("unreachable vertex: " + msg) {}
};

class RankAnomaly : public Error {
public:
    explicit RankAnomaly(const std::string& msg) : Error("rank anomaly: " + msg) {}
};

/// Two exact routes that must agree did not.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& msg) : Error("consistency error: " + msg) {}
};

}  // namespace polyprism
