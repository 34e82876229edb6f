#pragma once

#include <stdexcept>
#include <string>

namespace ghcat::error {

struct invalid_group : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct capability : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct shape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct precondition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct inconsistency : std::runtime_error {
    double deviation = 0.0;
    inconsistency(const std::string& what, double dev)
        : std::runtime_error(what), deviation(dev) {}
};

struct lookup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ghcat::error
