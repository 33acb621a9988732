#include "gsk/error.hpp"

namespace gsk {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DescriptorMismatch: return "descriptor mismatch";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::UnknownEmbedding: return "unknown embedding";
    case ErrorCode::InvalidSampleCount: return "invalid sample count";
    case ErrorCode::CocycleCheckFailed: return "cocycle check failed";
    case ErrorCode::WrongFactorGroup: return "wrong factor group";
    case ErrorCode::SingularChart: return "singular chart";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::NotClosed: return "action leaves the analytic class";
    case ErrorCode::DomainTruncation: return "domain truncation";
    case ErrorCode::NotSeparable: return "non-separable input";
    case ErrorCode::IncompatibleEmbedding: return "incompatible embedding";
    case ErrorCode::EmptyGrid: return "empty grid";
    case ErrorCode::Inadmissible: return "inadmissible window";
    case ErrorCode::MarginalUndefined: return "marginal undefined";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::NoRealization: return "no matrix realization";
  }
  return "unknown error";
}

}  // namespace gsk
