#pragma once
#include <stdexcept>
#include <string>

namespace diffschub {

// Error taxonomy. Every failure mode that callers are expected to handle gets
// its own type; anything else is a plain std::runtime_error and means a bug.

struct MalformedWord : std::runtime_error {
    explicit MalformedWord(const std::string& m) : std::runtime_error(m) {}
};

struct NotGrassmannian : std::runtime_error {
    explicit NotGrassmannian(const std::string& m) : std::runtime_error(m) {}
};

struct NonRecoverable : std::runtime_error {
    explicit NonRecoverable(const std::string& m) : std::runtime_error(m) {}
};

struct SizeMismatch : std::runtime_error {
    explicit SizeMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct NotSymmetric : std::runtime_error {
    explicit NotSymmetric(const std::string& m) : std::runtime_error(m) {}
};

struct NotSchurPositiveDecomposable : std::runtime_error {
    explicit NotSchurPositiveDecomposable(const std::string& m) : std::runtime_error(m) {}
};

struct NotInSpan : std::runtime_error {
    explicit NotInSpan(const std::string& m) : std::runtime_error(m) {}
};

struct InternalInconsistency : std::runtime_error {
    explicit InternalInconsistency(const std::string& m) : std::runtime_error(m) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

struct VersionMismatch : std::runtime_error {
    explicit VersionMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct ConflictError : std::runtime_error {
    explicit ConflictError(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& m, std::size_t at)
        : std::runtime_error(m + " (at offset " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

}  // namespace diffschub
