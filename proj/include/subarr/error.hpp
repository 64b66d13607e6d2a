#ifndef SUBARR_ERROR_HPP
#define SUBARR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace subarr {

// Error taxonomy mirrors the CLI exit codes: input = 1, cap = 2,
// consistency/verification = 3.
enum class ErrorKind {
    Input,
    Cap,
    Consistency,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void input_error(const std::string& msg) {
    throw Error(ErrorKind::Input, msg);
}

[[noreturn]] inline void cap_error(const std::string& msg) {
    throw Error(ErrorKind::Cap, msg);
}

[[noreturn]] inline void consistency_error(const std::string& msg) {
    throw Error(ErrorKind::Consistency, msg);
}

} // namespace subarr

#endif
