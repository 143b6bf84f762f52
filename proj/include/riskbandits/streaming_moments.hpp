#ifndef RISKBANDITS_STREAMING_MOMENTS_HPP
#define RISKBANDITS_STREAMING_MOMENTS_HPP

#include <cstdint>
#include <stdexcept>

namespace riskbandits {

// Welford-style running moments for one arm: count, mean, mean of squares,
// and the unbiased sample variance (defined for count >= 2).
class StreamingMoments {
 public:
  void update(double x) {
    ++count_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(count_);
    m2_ += d * (x - mean_);
    mean_sq_ += (x * x - mean_sq_) / static_cast<double>(count_);
  }

  std::int64_t count() const { return count_; }
  double mean() const { return mean_; }
  double second_raw_moment() const { return mean_sq_; }

  bool has_variance() const { return count_ >= 2; }

  double variance() const {
    if (count_ < 2)
      throw std::logic_error("unbiased variance undefined for fewer than 2 samples");
    double v = m2_ / static_cast<double>(count_ - 1);
    return v < 0 ? 0 : v;
  }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;       // sum of squared deviations from the running mean
  double mean_sq_ = 0;  // running mean of x^2
};

}  // namespace riskbandits

#endif
