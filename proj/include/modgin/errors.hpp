#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modgin {

/// Base of every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MODGIN_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

MODGIN_DEFINE_ERROR(InvalidArgument);
MODGIN_DEFINE_ERROR(DivisionByZero);
MODGIN_DEFINE_ERROR(SpecMismatch);
MODGIN_DEFINE_ERROR(RingMismatch);
MODGIN_DEFINE_ERROR(ZeroPolynomial);
MODGIN_DEFINE_ERROR(UnknownVariable);
MODGIN_DEFINE_ERROR(DegreeOverflow);
MODGIN_DEFINE_ERROR(ZeroDivisor);
MODGIN_DEFINE_ERROR(ResourceLimit);
MODGIN_DEFINE_ERROR(CapExceeded);
MODGIN_DEFINE_ERROR(DimensionMismatch);
MODGIN_DEFINE_ERROR(InvalidPermutation);
MODGIN_DEFINE_ERROR(NotHomogeneous);
MODGIN_DEFINE_ERROR(NoMajority);
MODGIN_DEFINE_ERROR(NotASubmodule);
MODGIN_DEFINE_ERROR(UnsupportedShape);
MODGIN_DEFINE_ERROR(InvalidCharacteristic);
MODGIN_DEFINE_ERROR(NotBorel);
MODGIN_DEFINE_ERROR(NotInvertible);
MODGIN_DEFINE_ERROR(Degenerate);

#undef MODGIN_DEFINE_ERROR

/// Malformed polynomial or ideal-file text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace modgin
