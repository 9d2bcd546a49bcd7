#pragma once

#include <stdexcept>
#include <string>

namespace blockdef {

// Error categories map onto CLI exit codes: input errors exit 2,
// budget/cap overruns exit 3, violated internal contracts exit 4.
enum class ErrorCategory { Input = 2, Budget = 3, Internal = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), cat_(cat), code_(std::move(code)) {}

    ErrorCategory category() const { return cat_; }
    const std::string& code() const { return code_; }

private:
    ErrorCategory cat_;
    std::string code_;
};

inline Error input_error(const std::string& code, const std::string& msg) {
    return Error(ErrorCategory::Input, code, msg);
}
inline Error budget_error(const std::string& code, const std::string& msg) {
    return Error(ErrorCategory::Budget, code, msg);
}
inline Error internal_error(const std::string& code, const std::string& msg) {
    return Error(ErrorCategory::Internal, code, msg);
}

#define BLOCKDEF_CHECK_INTERNAL(cond, code, msg) \
    do {                                         \
        if (!(cond)) throw ::blockdef::internal_error(code, msg); \
    } while (0)

} // namespace blockdef
