// Shared small utilities.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rdweno {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Thrown when a state leaves the model's admissible set (vacuum, negative
// pressure, ...).
struct inadmissible_state : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace rdweno
