#pragma once

#include <stdexcept>
#include <string>

namespace endscope {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int l, int c)
        : Error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

struct LexError : SyntaxError {
    using SyntaxError::SyntaxError;
};

// one type per failure mode so callers can branch on it
#define ENDSCOPE_ERROR(Name) \
    struct Name : Error {    \
        using Error::Error;  \
    }

ENDSCOPE_ERROR(ValidationError);
ENDSCOPE_ERROR(GenusMismatch);
ENDSCOPE_ERROR(NotCountable);
ENDSCOPE_ERROR(NotAllPlanar);
ENDSCOPE_ERROR(UnknownClass);
ENDSCOPE_ERROR(NotGenusColored);
ENDSCOPE_ERROR(NotStable);
ENDSCOPE_ERROR(BadSubneighborhood);
ENDSCOPE_ERROR(NotClopenImage);
ENDSCOPE_ERROR(IsTelescoping);
ENDSCOPE_ERROR(BadSupport);
ENDSCOPE_ERROR(BadSplit);
ENDSCOPE_ERROR(NotAlternating);
ENDSCOPE_ERROR(UnboundedDisplacement);
ENDSCOPE_ERROR(BadTable);

#undef ENDSCOPE_ERROR

struct NotTelescoping : Error {
    std::string failure;  // F1, F2 or F3
    NotTelescoping(const std::string& msg, std::string f) : Error(msg), failure(std::move(f)) {}
};

}  // namespace endscope
