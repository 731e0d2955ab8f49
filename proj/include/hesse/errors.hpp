#pragma once

#include <stdexcept>
#include <string>

namespace hesse {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  /// Stable error name, e.g. "CharacteristicTwoError".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HESSE_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  }

// exact-fields
HESSE_DEFINE_ERROR(CharacteristicTwoError);
HESSE_DEFINE_ERROR(NotPrimeError);
HESSE_DEFINE_ERROR(DivisionByZeroError);
HESSE_DEFINE_ERROR(FieldMismatchError);

// projective-core
HESSE_DEFINE_ERROR(ZeroVectorError);
HESSE_DEFINE_ERROR(MismatchError);
HESSE_DEFINE_ERROR(DegenerateSpanError);
HESSE_DEFINE_ERROR(NotCollinearError);
HESSE_DEFINE_ERROR(DuplicatePointError);

// quadric-forms
HESSE_DEFINE_ERROR(NotSymmetricError);
HESSE_DEFINE_ERROR(ShapeError);
HESSE_DEFINE_ERROR(UnsupportedModeError);

// hesse-engine
HESSE_DEFINE_ERROR(RetryBudgetExceeded);
HESSE_DEFINE_ERROR(DegenerateTriangleError);
HESSE_DEFINE_ERROR(DegenerateCircleError);

// oracle
HESSE_DEFINE_ERROR(UnsupportedFieldError);
HESSE_DEFINE_ERROR(ScanTooLargeError);

// io
HESSE_DEFINE_ERROR(ParseError);

#undef HESSE_DEFINE_ERROR

}  // namespace hesse
