#pragma once

#include <stdexcept>
#include <string>

namespace tverwind {

/// Base class of every error raised by the library. The `kind()` string is
/// stable and is what the CLI and the HTTP service report to callers.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TVERWIND_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what) : Error(#Name, what) {}     \
    }

TVERWIND_DEFINE_ERROR(PointOnCurve);
TVERWIND_DEFINE_ERROR(InvalidArgument);
TVERWIND_DEFINE_ERROR(UnsupportedDimension);
TVERWIND_DEFINE_ERROR(ShapeMismatch);
TVERWIND_DEFINE_ERROR(InvalidDrawing);
TVERWIND_DEFINE_ERROR(RetriesExhausted);
TVERWIND_DEFINE_ERROR(SizeMismatch);
TVERWIND_DEFINE_ERROR(MissingEdge);
TVERWIND_DEFINE_ERROR(WrongGraph);
TVERWIND_DEFINE_ERROR(TiedMedian);
TVERWIND_DEFINE_ERROR(NotATriangle);
TVERWIND_DEFINE_ERROR(NotDegree3);
TVERWIND_DEFINE_ERROR(TooLarge);
TVERWIND_DEFINE_ERROR(NotOuterplanar);
TVERWIND_DEFINE_ERROR(NotPrimePower);

#undef TVERWIND_DEFINE_ERROR

/// Malformed input text. Carries the JSON path (or line) of the offending field.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error("ParseError", where.empty() ? what : where + ": " + what),
          where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace tverwind
