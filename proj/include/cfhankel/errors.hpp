#ifndef CFHANKEL_ERRORS_HPP
#define CFHANKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfhankel {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CFHANKEL_DEFINE_ERROR(NAME)                                  \
  struct NAME : Error {                                              \
    explicit NAME(const std::string& what) : Error(what) {}          \
  }

CFHANKEL_DEFINE_ERROR(DivisionByZeroError);
CFHANKEL_DEFINE_ERROR(InexactDivisionError);
CFHANKEL_DEFINE_ERROR(RingMismatchError);
CFHANKEL_DEFINE_ERROR(ParseError);
CFHANKEL_DEFINE_ERROR(InvalidBSeqError);
CFHANKEL_DEFINE_ERROR(DepthOutOfRangeError);
CFHANKEL_DEFINE_ERROR(IndexOutOfRangeError);
CFHANKEL_DEFINE_ERROR(InsufficientDepthError);
CFHANKEL_DEFINE_ERROR(InsufficientOrderError);
CFHANKEL_DEFINE_ERROR(InsufficientLengthError);
CFHANKEL_DEFINE_ERROR(NonUnitConstantTermError);
CFHANKEL_DEFINE_ERROR(UnknownNameError);
CFHANKEL_DEFINE_ERROR(UnsupportedFamilyError);
CFHANKEL_DEFINE_ERROR(ParamOutOfRangeError);

#undef CFHANKEL_DEFINE_ERROR

}  // namespace cfhankel

#endif
