#ifndef AXTK_ERRORS_HPP
#define AXTK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace axtk {

/// Base class for every error the toolkit raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// fields
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};
class DescriptorMismatch : public Error {
public:
    explicit DescriptorMismatch(const std::string& what) : Error(what) {}
};
class PoleAtSpecialization : public Error {
public:
    explicit PoleAtSpecialization(const std::string& what) : Error(what) {}
};
class ZeroInput : public Error {
public:
    explicit ZeroInput(const std::string& what) : Error(what) {}
};
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};
class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& what) : Error(what) {}
};

// io
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};
class SchemaError : public Error {
public:
    SchemaError(const std::string& what, const std::string& path)
        : Error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// algebra
class NotIdempotent : public Error {
public:
    explicit NotIdempotent(const std::string& what = "element is not idempotent") : Error(what) {}
};
class NotSemisimple : public Error {
public:
    explicit NotSemisimple(const std::string& what) : Error(what) {}
};
class SpectrumOutsideFusionSet : public Error {
public:
    explicit SpectrumOutsideFusionSet(const std::string& what) : Error(what) {}
};
class DecompositionUnavailable : public Error {
public:
    explicit DecompositionUnavailable(const std::string& what) : Error(what) {}
};
class SubspaceNotClosed : public Error {
public:
    explicit SubspaceNotClosed(const std::string& what) : Error(what) {}
};
class AxisCheckFailed : public Error {
public:
    explicit AxisCheckFailed(const std::string& what) : Error(what) {}
};

// axet
class NotTwoGenerated : public Error {
public:
    explicit NotTwoGenerated(const std::string& what) : Error(what) {}
};
class NoWitness : public Error {
public:
    explicit NoWitness(const std::string& what) : Error(what) {}
};

}  // namespace axtk

#endif
