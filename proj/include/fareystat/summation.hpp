#pragma once

#include <cmath>

namespace fareystat {

// Neumaier's variant of compensated summation: the running error term also
// captures the case |term| > |sum|.
struct NeumaierSum {
    double sum = 0.;
    double compensation = 0.;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            compensation += (sum - t) + x;
        else
            compensation += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + compensation; }
};

}  // namespace fareystat
