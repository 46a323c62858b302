#pragma once

#include <cstdint>
#include <vector>

namespace minorforge {

// splitmix64. One 64-bit state word advanced by a Weyl increment, output run
// through the reference finalizer (constants 0x9e3779b97f4a7c15,
// 0xbf58476d1ce4e5b9, 0x94d049bb133111eb). Chosen over std::mt19937_64 so
// that seeded runs produce identical streams on every platform and standard
// library.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next();

  // Uniform in [0, bound) by rejection; bound must be positive.
  uint64_t below(uint64_t bound);

  // Uniform in [0, 1) with 53 random bits.
  double unit();

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from {0, ..., n-1}, in random order (the first k slots
  // of a Fisher-Yates pass, stopped early).
  std::vector<uint32_t> sample_prefix(uint32_t n, uint32_t k);

 private:
  uint64_t state_;
};

}  // namespace minorforge
