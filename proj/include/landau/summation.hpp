#ifndef LANDAU_SUMMATION_HPP
#define LANDAU_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace landau {

/// Neumaier-compensated accumulator. Summation order is part of the contract
/// everywhere this is used: accumulate in a fixed order and results are
/// bit-stable across runs and thread counts.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Real/imaginary pair of compensated accumulators.
class ComplexCompensatedSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void add(double re, double im) {
    re_.add(re);
    im_.add(im);
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace landau

#endif  // LANDAU_SUMMATION_HPP
