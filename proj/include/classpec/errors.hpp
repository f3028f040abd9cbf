#pragma once

#include <stdexcept>
#include <string>

namespace classpec {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define CLASSPEC_ERROR(Name)                                                   \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

CLASSPEC_ERROR(InvalidArgument);
CLASSPEC_ERROR(UnsupportedGroup);
CLASSPEC_ERROR(InvalidEpsilon);
CLASSPEC_ERROR(CapExceeded);
CLASSPEC_ERROR(InfeasibleOrder);
CLASSPEC_ERROR(InfeasibleRecipe);
CLASSPEC_ERROR(OrderMismatch);
CLASSPEC_ERROR(NotPeriodic);
CLASSPEC_ERROR(NotOrthogonal);
CLASSPEC_ERROR(DimensionMismatch);
CLASSPEC_ERROR(InvalidRoot);

#undef CLASSPEC_ERROR

}  // namespace classpec
