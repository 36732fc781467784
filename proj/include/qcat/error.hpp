#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcat {

/// Distinct codes for rejected input; the CLI maps every one of them to exit code 3.
enum class ErrorCode {
    MalformedRational,
    OutOfRange,
    ShapeMismatch,
    NotAPoset,
    NotAVCategory,
    GridNotClosed,
    NotMonotone,
    MalformedTNorm,
    MalformedDocument,
    UnknownSuite,
    CapExceeded,
    NotPosetBased,
    UnsupportedTensor,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedRational: return "malformed-rational";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::ShapeMismatch: return "shape-mismatch";
    case ErrorCode::NotAPoset: return "not-a-poset";
    case ErrorCode::NotAVCategory: return "not-a-vcategory";
    case ErrorCode::GridNotClosed: return "grid-not-closed";
    case ErrorCode::NotMonotone: return "not-monotone";
    case ErrorCode::MalformedTNorm: return "malformed-tnorm";
    case ErrorCode::MalformedDocument: return "malformed-document";
    case ErrorCode::UnknownSuite: return "unknown-suite";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::NotPosetBased: return "not-poset-based";
    case ErrorCode::UnsupportedTensor: return "unsupported-tensor";
    }
    return "unknown";
}

class InputError : public std::invalid_argument {
public:
    InputError(ErrorCode code, const std::string& what)
        : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

} // namespace qcat
