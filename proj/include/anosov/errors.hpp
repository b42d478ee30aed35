#ifndef ANOSOV_ERRORS_HPP
#define ANOSOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anosov {

/* Malformed or out-of-domain input. CLI exit code 1. */
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/* Numerical certification gave up at the precision cap. CLI exit code 2. */
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kPrecisionCap = 1 << 16;
constexpr const char* kToolVersion = "0.3.0";

} // namespace anosov

#endif
