#pragma once

#include <cstdint>
#include <vector>

namespace gdlab {

/// Sieve of Eratosthenes over odd numbers, one bit per odd n <= limit.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  /// n must be <= limit().
  bool is_prime(std::uint64_t n) const {
    if (n < 3) return n == 2;
    if ((n & 1U) == 0) return false;
    const std::uint64_t k = n >> 1;
    return ((bits_[k >> 6] >> (k & 63)) & 1U) == 0;  // bit set = composite
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace gdlab
