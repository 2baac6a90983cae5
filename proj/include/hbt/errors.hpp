#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbt {

// Malformed arguments: wrong sizes, labels outside the ground set, bad payloads.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration ran past its element or time budget.
struct resource_error : std::runtime_error {
    std::size_t partial_count = 0;
    resource_error(const std::string& what, std::size_t partial)
        : std::runtime_error(what), partial_count(partial) {}
};

// A requested object does not exist (no order through the targets, etc).
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Something that the theory says cannot happen did happen.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hbt
