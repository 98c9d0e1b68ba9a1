#pragma once

#include <stdexcept>
#include <string>

namespace mcdm {

// Every failure the library can raise, named so callers can branch on the
// exact condition instead of parsing messages.
enum class ErrorCode {
    EmptyMatrix,
    RaggedRows,
    DuplicateLabel,
    NonPositiveEntry,
    ConstantColumn,
    ZeroCriteria,
    NonFiniteScore,
    LengthMismatch,
    InvalidWeights,
    DegeneratePV,
    DegenerateDistances,
    ZeroMinScore,
    MixedRankingMethods,
    MixedAlternativeSets,
    ParseError,
    UnknownDirectionToken,
    WriteFailure,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

    // Problems with the user-supplied matrix or file, as opposed to failures
    // arising while computing or writing results.
    bool is_input_error() const;

  private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace mcdm
