#pragma once

#include <stdexcept>
#include <string>

namespace aoabound {

// An angle argument outside its documented domain.
class invalid_angle : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A geometry or scenario for which the bounds are undefined
// (fewer than two elements, cos(theta) = 0, nonpositive noise variance).
class degenerate_scenario : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aoabound
