// errors.hpp
// Exception types shared across the library. Standard exceptions cover the
// common cases (std::invalid_argument, std::out_of_range,
// std::overflow_error); the types here name the domain-specific failures.

#pragma once
#include <stdexcept>
#include <string>

namespace goldbach {

// A requested allocation would exceed the configured store ceiling.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Input too small to carry the requested structure (e.g. a difference
// profile of a single prime).
class degenerate_input_error : public std::invalid_argument {
public:
    explicit degenerate_input_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Fewer than two prime pairs survive; reconstruction needs w > 1.
class insufficient_partitions_error : public std::domain_error {
public:
    explicit insufficient_partitions_error(const std::string& what)
        : std::domain_error(what) {}
};

// A caller-supplied prime filter broke the p <-> m-p symmetry.
class invalid_filter_error : public std::invalid_argument {
public:
    explicit invalid_filter_error(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace goldbach
