#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lrs {

enum class ErrorKind {
    EmptyInstance,
    ParseError,
    NonIncreasingIndices,
    IndexOutOfRange,
    RepeatedRunSymbol,
    DimensionMismatch,
    InstanceTooLarge,
    AlphabetTooLarge,
    ParameterOutOfRange,
    NoSolutionFound,
    NotCubic,
    OddVertexCount,
    InvalidSolution,
    GraphTooLarge,
    NotIndependent,
    HeterogeneousInstances,
    InvalidN,
    RejectionLimitExceeded,
    ParameterError,
    IoError,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::EmptyInstance: return "EmptyInstance";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonIncreasingIndices: return "NonIncreasingIndices";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::RepeatedRunSymbol: return "RepeatedRunSymbol";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NoSolutionFound: return "NoSolutionFound";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::OddVertexCount: return "OddVertexCount";
    case ErrorKind::InvalidSolution: return "InvalidSolution";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::HeterogeneousInstances: return "HeterogeneousInstances";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::RejectionLimitExceeded: return "RejectionLimitExceeded";
    case ErrorKind::ParameterError: return "ParameterError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

/// Errors that mean "the input is fine but exceeds a hard resource cap".
inline bool is_limit(ErrorKind kind) {
    return kind == ErrorKind::InstanceTooLarge || kind == ErrorKind::AlphabetTooLarge ||
           kind == ErrorKind::GraphTooLarge || kind == ErrorKind::RejectionLimitExceeded;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> where = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), where_(where) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Offending position, line or symbol, when the error names one.
    std::optional<std::size_t> where() const noexcept { return where_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> where_;
};

} // namespace lrs
