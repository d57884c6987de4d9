#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "mv2/numeric.hpp"

namespace mv2 {

/// A documented precondition of an operation does not hold for the given
/// input (as opposed to malformed input, which throws std::invalid_argument).
/// `kind` is a stable machine-readable tag; `witness`, when present, is a
/// covector certifying the failure.
class precondition_error : public std::runtime_error {
public:
    precondition_error(std::string kind, std::string message,
                       std::optional<IntVector> witness = std::nullopt)
        : std::runtime_error(message), kind_(std::move(kind)), witness_(std::move(witness)) {}

    const std::string& kind() const { return kind_; }
    const std::optional<IntVector>& witness() const { return witness_; }

private:
    std::string kind_;
    std::optional<IntVector> witness_;
};

}  // namespace mv2
