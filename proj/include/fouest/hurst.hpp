#pragma once

#include <stdexcept>
#include <string>

namespace fouest {

/// Hurst exponent, restricted to the open interval (0, 1).
class Hurst {
public:
    explicit Hurst(double value) : value_(value) {
        if (!(value > 0.0 && value < 1.0))
            throw std::invalid_argument("Hurst parameter must lie in (0,1), got " +
                                        std::to_string(value));
    }

    double value() const noexcept { return value_; }

private:
    double value_;
};

}  // namespace fouest
