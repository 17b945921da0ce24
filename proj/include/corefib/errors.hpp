#pragma once

#include <stdexcept>
#include <string>

namespace corefib {

// violated precondition that the caller could have checked
class invalid_input_error : public std::invalid_argument {
public:
    explicit invalid_input_error(const std::string& what) : std::invalid_argument(what) {}
};

// a requested enumeration would exceed a configured cap
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace corefib
