#pragma once

#include <stdexcept>
#include <string>

namespace ordlex {

/// Problem with user-supplied input (missing file, bad encoding, malformed
/// frequency list). CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated precondition or internal consistency failure (tie in a window,
/// unranked token in own-corpus mode, bad config). CLI maps this to exit
/// code 3.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ordlex
