#pragma once

#include <cmath>
#include <span>

namespace seqspace {

/// Neumaier-compensated accumulator. Partial sums beyond 10^4 terms must not
/// be formed naively: divergence-rate checks compare against analytic
/// brackets and naive summation drifts. Sequential accumulation keeps every
/// reported value reproducible bit-for-bit.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    KahanSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

} // namespace seqspace
