#pragma once

#include <stdexcept>
#include <string>

namespace poibound {

struct EmptyInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParamsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RadiusOutOfRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InfeasibleCenterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace poibound
