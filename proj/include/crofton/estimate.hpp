#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace crofton {

// Monte Carlo result. std_err is the sample standard deviation divided by
// sqrt(count) (0 when count < 2).
struct Estimate {
  double mean = 0.0;
  double std_err = 0.0;
  long long count = 0;
  std::uint64_t seed = 0;
};

// Streaming mean/M2 accumulator (Welford); pairwise merging uses the
// exact pooled combination, so any chunking of a sample set reproduces
// the single-pass result.
class Accumulator {
 public:
  void add(double x) {
    ++n_;
    double d = x - mean_;
    mean_ += d / n_;
    m2_ += d * (x - mean_);
  }

  void merge(const Accumulator& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    double d = o.mean_ - mean_;
    long long n = n_ + o.n_;
    m2_ += o.m2_ + d * d * (static_cast<double>(n_) * o.n_ / n);
    mean_ += d * o.n_ / n;
    n_ = n;
  }

  long long count() const { return n_; }
  double mean() const { return mean_; }

  Estimate estimate(std::uint64_t seed) const {
    Estimate e;
    e.mean = mean_;
    e.count = n_;
    e.seed = seed;
    e.std_err = (n_ > 1) ? std::sqrt(m2_ / (n_ - 1) / n_) : 0.0;
    return e;
  }

  static Accumulator from_estimate(const Estimate& e) {
    Accumulator a;
    a.n_ = e.count;
    a.mean_ = e.mean;
    a.m2_ = e.std_err * e.std_err * e.count * (e.count - 1);
    return a;
  }

 private:
  long long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

inline Estimate merge_estimates(const std::vector<Estimate>& parts) {
  if (parts.empty()) throw std::domain_error("merge_estimates: empty part list");
  Accumulator a = Accumulator::from_estimate(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    a.merge(Accumulator::from_estimate(parts[i]));
  return a.estimate(parts.front().seed);
}

}  // namespace crofton
