#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gnr {

enum class ErrorKind {
    // table shape / input
    MalformedTable,
    OrderCapExceeded,
    // monoid
    NotAssociative,
    BadIdentity,
    // near-ring
    AddNotGroup,
    MulNotAssociative,
    NotRightDistributive,
    // grading
    ComponentNotNormal,
    DecompositionNotUnique,
    DecompositionNotTotal,
    ComponentsDontCommute,
    NotMultiplicative,
    MonoidMismatch,
    // primality preconditions
    NotProper,
    NotGraded,
    NotIdeal,
    // enumeration
    EnumerationBudgetExceeded,
    // homomorphisms and quotients
    HomNotAdditive,
    HomNotMultiplicative,
    ImageNotIdeal,
    QuotientGradingInvalid,
    // harness / documents
    UnknownTheoremId,
    ParseError,
};

inline std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::MalformedTable: return "MalformedTable";
        case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::BadIdentity: return "BadIdentity";
        case ErrorKind::AddNotGroup: return "AddNotGroup";
        case ErrorKind::MulNotAssociative: return "MulNotAssociative";
        case ErrorKind::NotRightDistributive: return "NotRightDistributive";
        case ErrorKind::ComponentNotNormal: return "ComponentNotNormal";
        case ErrorKind::DecompositionNotUnique: return "DecompositionNotUnique";
        case ErrorKind::DecompositionNotTotal: return "DecompositionNotTotal";
        case ErrorKind::ComponentsDontCommute: return "ComponentsDontCommute";
        case ErrorKind::NotMultiplicative: return "NotMultiplicative";
        case ErrorKind::MonoidMismatch: return "MonoidMismatch";
        case ErrorKind::NotProper: return "NotProper";
        case ErrorKind::NotGraded: return "NotGraded";
        case ErrorKind::NotIdeal: return "NotIdeal";
        case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case ErrorKind::HomNotAdditive: return "NotAdditive";
        case ErrorKind::HomNotMultiplicative: return "NotMultiplicative";
        case ErrorKind::ImageNotIdeal: return "ImageNotIdeal";
        case ErrorKind::QuotientGradingInvalid: return "QuotientGradingInvalid";
        case ErrorKind::UnknownTheoremId: return "UnknownTheoremId";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure the library reports. The witness carries the element (or
/// grade) indices that demonstrate the violation, in the order documented at
/// the throw site.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, std::vector<unsigned> witness = {})
        : std::runtime_error(compose(kind, message, witness)), kind_(kind), witness_(std::move(witness)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<unsigned>& witness() const noexcept { return witness_; }

private:
    static std::string compose(ErrorKind kind, const std::string& message, const std::vector<unsigned>& w) {
        std::string s(to_string(kind));
        if (!message.empty()) s += ": " + message;
        if (!w.empty()) {
            s += " [witness";
            for (unsigned x : w) s += ' ' + std::to_string(x);
            s += ']';
        }
        return s;
    }

    ErrorKind kind_;
    std::vector<unsigned> witness_;
};

}  // namespace gnr
