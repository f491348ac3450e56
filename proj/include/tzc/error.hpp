#pragma once

#include <stdexcept>
#include <string>

namespace tzc {

// Base class for all errors raised by the library. Validation failures map
// to exit code 1 in the CLI, InternalError to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

struct MismatchedField : Error {
  explicit MismatchedField(const std::string& msg = "operands belong to different fields") : Error(msg) {}
};

struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& msg = "polynomial is not symmetric") : Error(msg) {}
};

struct InvalidCurve : Error {
  explicit InvalidCurve(const std::string& msg) : Error(msg) {}
};

struct NotOnCurve : Error {
  explicit NotOnCurve(const std::string& msg = "point does not satisfy the curve equation") : Error(msg) {}
};

struct CannotCompressIdentity : Error {
  explicit CannotCompressIdentity() : Error("the point at infinity has no compressed form") {}
};

struct NotTraceZero : Error {
  explicit NotTraceZero(const std::string& msg = "point is not in the trace zero subgroup") : Error(msg) {}
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace tzc
