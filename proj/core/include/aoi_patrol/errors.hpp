#pragma once

#include <stdexcept>
#include <string>

namespace aoi_patrol {

// Instance or route failed a structural check (CLI exit code 2).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Problem size beyond solver limits, e.g. Held-Karp above HK_LIMIT (CLI exit code 3).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File could not be read, parsed, or written (CLI exit code 4).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aoi_patrol
