#pragma once

#include <stdexcept>
#include <string>

namespace incompat {

enum class ErrorCode {
    invalid_dimension,
    invalid_argument,
    parse,
    shape,
    value,
    bounds,
    domain,
    no_kernel,
    invalid_state,
    not_unitary,
    too_large,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library; the code distinguishes the failure
// class so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace incompat
