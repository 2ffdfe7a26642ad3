#include "incompat/error.hpp"

namespace incompat {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_dimension: return "invalid dimension";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::shape: return "shape error";
    case ErrorCode::value: return "value error";
    case ErrorCode::bounds: return "bounds error";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::no_kernel: return "no kernel";
    case ErrorCode::invalid_state: return "invalid state";
    case ErrorCode::not_unitary: return "not unitary";
    case ErrorCode::too_large: return "too large";
    }
    return "unknown error";
}

}  // namespace incompat
