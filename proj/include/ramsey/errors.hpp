#pragma once

#include <stdexcept>

namespace ramsey {

// argument outside the documented domain of an operation
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// input is valid but exceeds a hard capacity limit of an exact algorithm
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ramsey
