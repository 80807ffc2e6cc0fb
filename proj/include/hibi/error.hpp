#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hibi {

enum class ErrorKind {
    EmptyInput,
    NotALattice,
    NotDistributive,
    NotComparable,
    CapExceeded,
    NotPlanar,
    NotJMPair,
    ZeroInput,
    NotGroebner,
    InconsistentProfile,
    ConditionViolated,
    DegreeTooSmall,
    OracleMismatch,
    UnrecognizedShape,
    BadInput,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::NotJMPair: return "NotJMPair";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotGroebner: return "NotGroebner";
    case ErrorKind::InconsistentProfile: return "InconsistentProfile";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::UnrecognizedShape: return "UnrecognizedShape";
    case ErrorKind::BadInput: return "BadInput";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // OracleMismatch and NotGroebner mean the mathematics disagreed; the rest are bad input.
    bool is_mismatch() const noexcept {
        return kind_ == ErrorKind::OracleMismatch || kind_ == ErrorKind::NotGroebner;
    }

private:
    ErrorKind kind_;
};

}  // namespace hibi
