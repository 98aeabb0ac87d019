#pragma once

#include <cmath>

namespace eulersums {

// Neumaier's variant of Kahan summation. The running correction also
// captures the case where the incoming term is larger than the sum.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      correction_ += (sum_ - t) + term;
    } else {
      correction_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double term) {
    add(term);
    return *this;
  }

  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace eulersums
