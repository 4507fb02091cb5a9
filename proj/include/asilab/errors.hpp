#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace asilab {

enum class ErrorKind {
    hypothesis_violated,  // caller promise broken (not k-colorable, not a matching, ...)
    budget_exhausted,     // fuel or time budget ran out
    malformed_input,      // bad document, bad parameters
    scale_too_small,      // witness scale below an algorithm's requirement
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string diagnostics = {})
        : std::runtime_error(message), kind_(kind), diagnostics_(std::move(diagnostics)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& diagnostics() const { return diagnostics_; }

    // CLI contract: 0 success, 1 hypothesis violation, 2 budget, 3 malformed.
    int exit_code() const {
        switch (kind_) {
            case ErrorKind::hypothesis_violated:
            case ErrorKind::scale_too_small: return 1;
            case ErrorKind::budget_exhausted: return 2;
            case ErrorKind::malformed_input: return 3;
        }
        return 1;
    }

private:
    ErrorKind kind_;
    std::string diagnostics_;
};

[[noreturn]] inline void fail_hypothesis(const std::string& msg, std::string diag = {}) {
    throw Error(ErrorKind::hypothesis_violated, msg, std::move(diag));
}
[[noreturn]] inline void fail_budget(const std::string& msg, std::string diag = {}) {
    throw Error(ErrorKind::budget_exhausted, msg, std::move(diag));
}
[[noreturn]] inline void fail_input(const std::string& msg) {
    throw Error(ErrorKind::malformed_input, msg);
}
[[noreturn]] inline void fail_scale(const std::string& msg) {
    throw Error(ErrorKind::scale_too_small, msg);
}

}  // namespace asilab
