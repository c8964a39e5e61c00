#pragma once

#include <stdexcept>
#include <string>

namespace nvol {

/// Bad input: violated precondition, malformed preset, unknown name.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two routes that must agree exactly did not.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nvol
