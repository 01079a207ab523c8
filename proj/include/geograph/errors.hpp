#pragma once

#include <stdexcept>
#include <string>

namespace geograph {

// Exit-code mapping used by the CLI: config 2, numerical 3, resource cap 4.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalError : std::runtime_error {
    double residual = 0.0;
    explicit NumericalError(const std::string& msg, double res = 0.0)
        : std::runtime_error(msg), residual(res) {}
};

struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace geograph
