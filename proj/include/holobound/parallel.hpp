#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace holobound {

/// Worker count: HOLOBOUND_THREADS if set and positive, else hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, count). Work is distributed dynamically, so
/// callers must write results into index-addressed slots and reduce them in
/// index order afterwards to stay independent of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }
  void scale(double f) {
    sum_ *= f;
    comp_ *= f;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);
/// Seed for an independent stream derived from (seed, stream index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// 64-bit FNV-1a; stable across platforms, used for case ids and digests.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace holobound
