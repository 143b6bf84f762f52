#ifndef RISKBANDITS_COMMON_HPP
#define RISKBANDITS_COMMON_HPP

#include <stdexcept>
#include <string>

namespace riskbandits {

// Invalid user-supplied parameters (distribution params, experiment configs).
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure at run time (quadrature non-convergence, sampler cap).
// The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr const char* kVersion = "0.1.0";

}  // namespace riskbandits

#endif
