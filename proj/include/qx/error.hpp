#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qx {

enum class Errc {
    ShapeMismatch,
    CompositionNonzero,
    NotMono,
    OutOfRange,
    InvalidInput,
    NotSplitInstance,
    UniverseTooLarge,
    OutOfUniverse,
    PreconditionViolated,
    InvalidChainMap,
    NotCofibration,
    Format,
};

std::string_view to_string(Errc code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::CompositionNonzero: return "CompositionNonzero";
    case Errc::NotMono: return "NotMono";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotSplitInstance: return "NotSplitInstance";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
    case Errc::OutOfUniverse: return "OutOfUniverse";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InvalidChainMap: return "InvalidChainMap";
    case Errc::NotCofibration: return "NotCofibration";
    case Errc::Format: return "Format";
    }
    return "Unknown";
}

}  // namespace qx
