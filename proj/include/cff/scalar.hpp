#pragma once

#include <cmath>

namespace cff {

// logistic function, stable for |x| up to ~700: never evaluates exp on a
// positive argument, so it cannot overflow
inline double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    double e = std::exp(x);
    return e / (1.0 + e);
}

// log(1 + e^x) without overflow; for x > 0 uses x + log1p(e^-x) so the
// identity softplus(x) - softplus(-x) == x holds exactly in floating point
inline double softplus(double x) {
    if (x > 0.0) {
        return x + std::log1p(std::exp(-x));
    }
    return std::log1p(std::exp(x));
}

} // namespace cff
