#pragma once

#include <stdexcept>
#include <string>

namespace fibgap {

enum class ErrorCode {
    invalid_argument,
    not_a_factor,
    special_word,
    incomplete_cancellation,
};

/// Domain failure raised by every operation in the library. The code is what
/// the C API and the CLI map onto status values and exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace fibgap
