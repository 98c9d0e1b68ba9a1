#include "mcdm/errors.hpp"

namespace mcdm {

bool Error::is_input_error() const {
    switch (code_) {
        case ErrorCode::EmptyMatrix:
        case ErrorCode::RaggedRows:
        case ErrorCode::DuplicateLabel:
        case ErrorCode::NonPositiveEntry:
        case ErrorCode::ConstantColumn:
        case ErrorCode::ZeroCriteria:
        case ErrorCode::ParseError:
        case ErrorCode::UnknownDirectionToken:
            return true;
        default:
            return false;
    }
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyMatrix: return "EmptyMatrix";
        case ErrorCode::RaggedRows: return "RaggedRows";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorCode::ConstantColumn: return "ConstantColumn";
        case ErrorCode::ZeroCriteria: return "ZeroCriteria";
        case ErrorCode::NonFiniteScore: return "NonFiniteScore";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidWeights: return "InvalidWeights";
        case ErrorCode::DegeneratePV: return "DegeneratePV";
        case ErrorCode::DegenerateDistances: return "DegenerateDistances";
        case ErrorCode::ZeroMinScore: return "ZeroMinScore";
        case ErrorCode::MixedRankingMethods: return "MixedRankingMethods";
        case ErrorCode::MixedAlternativeSets: return "MixedAlternativeSets";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownDirectionToken: return "UnknownDirectionToken";
        case ErrorCode::WriteFailure: return "WriteFailure";
    }
    return "UnknownError";
}

}  // namespace mcdm
