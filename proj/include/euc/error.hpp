#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace euc {

enum class ErrorKind {
    // formula language
    UnknownPredicate,
    ArityMismatch,
    SortClash,
    DanglingSeparator,
    TrailingInput,
    Unprintable,
    // theory files and registry
    SyntaxError,
    DuplicateLabel,
    MissingLabel,
    KindMismatch,
    UnknownItem,
    ForwardReference,
    // proof structure
    UnbalancedBlocks,
    BadCaseIndex,
    MissingJustificationOnFirstStep,
    HypothesisMismatch,
    FinalLineMismatch,
    // step checks
    NoInstantiation,
    MissingHypothesis,
    StaleWitness,
    MissingBody,
    NotDerivable,
    NoContradiction,
    DisjunctionUnavailable,
    MissingCase,
    CaseGoalMismatch,
    IndexOutOfOrder,
    // semantics
    UnassignedVariable,
    UnsupportedPredicate,
    NoSamplesFound,
    MissingWitnessConstructor,
    DegenerateConfiguration,
    IrrationalWitnessInExactMode,
    SearchExhausted,
    // io
    MissingProofFile,
    IoError,
    // export
    RejectedProof,
    BadDocument,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SortClash: return "SortClash";
    case ErrorKind::DanglingSeparator: return "DanglingSeparator";
    case ErrorKind::TrailingInput: return "TrailingInput";
    case ErrorKind::Unprintable: return "Unprintable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::UnknownItem: return "UnknownItem";
    case ErrorKind::ForwardReference: return "ForwardReference";
    case ErrorKind::UnbalancedBlocks: return "UnbalancedBlocks";
    case ErrorKind::BadCaseIndex: return "BadCaseIndex";
    case ErrorKind::MissingJustificationOnFirstStep: return "MissingJustificationOnFirstStep";
    case ErrorKind::HypothesisMismatch: return "HypothesisMismatch";
    case ErrorKind::FinalLineMismatch: return "FinalLineMismatch";
    case ErrorKind::NoInstantiation: return "NoInstantiation";
    case ErrorKind::MissingHypothesis: return "MissingHypothesis";
    case ErrorKind::StaleWitness: return "StaleWitness";
    case ErrorKind::MissingBody: return "MissingBody";
    case ErrorKind::NotDerivable: return "NotDerivable";
    case ErrorKind::NoContradiction: return "NoContradiction";
    case ErrorKind::DisjunctionUnavailable: return "DisjunctionUnavailable";
    case ErrorKind::MissingCase: return "MissingCase";
    case ErrorKind::CaseGoalMismatch: return "CaseGoalMismatch";
    case ErrorKind::IndexOutOfOrder: return "IndexOutOfOrder";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::UnsupportedPredicate: return "UnsupportedPredicate";
    case ErrorKind::NoSamplesFound: return "NoSamplesFound";
    case ErrorKind::MissingWitnessConstructor: return "MissingWitnessConstructor";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::IrrationalWitnessInExactMode: return "IrrationalWitnessInExactMode";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::MissingProofFile: return "MissingProofFile";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::RejectedProof: return "RejectedProof";
    case ErrorKind::BadDocument: return "BadDocument";
    }
    return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a kind and,
/// where one exists, the 1-based source line it refers to (0 = none).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, int line = 0)
        : std::runtime_error(message), kind_(kind), line_(line) {}

    ErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    ErrorKind kind_;
    int line_;
};

} // namespace euc
