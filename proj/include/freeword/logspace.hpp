#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace freeword {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(e^a + e^b) without leaving the log domain.
inline double logaddexp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

inline double logsumexp(const std::vector<double>& xs) {
    double hi = kNegInf;
    for (double x : xs) hi = std::max(hi, x);
    if (hi == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - hi);
    return hi + std::log(acc);
}

}  // namespace freeword
